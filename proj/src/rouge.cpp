#include "ilpsumm/rouge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ilpsumm/text.hpp"

namespace ilpsumm {

namespace {

const StopwordList& stoplist() {
    static const StopwordList list;
    return list;
}

// lowercased word tokens, punctuation dropped, optional stemming
std::vector<std::string> rouge_tokens(const std::string& text,
                                      const RougeConfig& cfg) {
    std::vector<std::string> out;
    for (const Token& t : tokenize(text)) {
        if (t.is_punct) continue;
        if (cfg.remove_stopwords && stoplist().contains(t.lower)) continue;
        out.push_back(cfg.stemming ? stem(t.lower) : t.lower);
    }
    return out;
}

std::string cand_text(const std::string& candidate, const RougeConfig& cfg) {
    return truncate_text(candidate, cfg.truncation, cfg.byte_limit, cfg.word_limit);
}

using Counts = std::map<std::vector<std::string>, long>;

Counts ngram_counts(const std::vector<std::string>& toks, int n) {
    Counts c;
    if (static_cast<int>(toks.size()) < n) return c;
    for (std::size_t i = 0; i + n <= toks.size(); ++i)
        ++c[std::vector<std::string>(toks.begin() + i, toks.begin() + i + n)];
    return c;
}

// skip-bigrams with at most max_gap words in between, plus unigrams
Counts su_counts(const std::vector<std::string>& toks, int max_gap) {
    Counts c;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        ++c[{toks[i]}];
        for (std::size_t j = i + 1; j < toks.size() && j - i - 1 <= static_cast<std::size_t>(max_gap); ++j)
            ++c[{toks[i], toks[j]}];
    }
    return c;
}

long total(const Counts& c) {
    long t = 0;
    for (const auto& [k, v] : c) t += v;
    return t;
}

long clipped_overlap(const Counts& cand, const Counts& ref) {
    long m = 0;
    for (const auto& [k, v] : cand) {
        auto it = ref.find(k);
        if (it != ref.end()) m += std::min(v, it->second);
    }
    return m;
}

RougeScore pooled_score(const char* variant, long matches, long ref_total,
                        long cand_total_pooled) {
    RougeScore s;
    s.variant = variant;
    s.recall = ref_total > 0 ? static_cast<double>(matches) / ref_total : 0.0;
    s.precision =
        cand_total_pooled > 0 ? static_cast<double>(matches) / cand_total_pooled : 0.0;
    // union LCS can credit one candidate token against several reference
    // sentences; keep scores inside [0, 1]
    s.recall = std::min(s.recall, 1.0);
    s.precision = std::min(s.precision, 1.0);
    s.f1 = (s.recall + s.precision) > 0.0
               ? 2.0 * s.recall * s.precision / (s.recall + s.precision)
               : 0.0;
    return s;
}

// token positions of `ref` matched by an LCS with `cand`
std::vector<std::size_t> lcs_positions(const std::vector<std::string>& ref,
                                       const std::vector<std::string>& cand) {
    const std::size_t n = ref.size(), m = cand.size();
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            dp[i][j] = ref[i - 1] == cand[j - 1]
                           ? dp[i - 1][j - 1] + 1
                           : std::max(dp[i - 1][j], dp[i][j - 1]);
    std::vector<std::size_t> pos;
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        if (ref[i - 1] == cand[j - 1]) {
            pos.push_back(i - 1);
            --i;
            --j;
        } else if (dp[i - 1][j] >= dp[i][j - 1]) {
            --i;
        } else {
            --j;
        }
    }
    return pos;
}

}  // namespace

std::string truncate_text(const std::string& text, TruncationMode mode,
                          int byte_limit, int word_limit) {
    if (mode == TruncationMode::None) return text;
    std::istringstream ss(text);
    std::string word, out;
    int words = 0;
    while (ss >> word) {
        std::size_t added = word.size() + (out.empty() ? 0 : 1);
        if (mode == TruncationMode::Bytes &&
            out.size() + added > static_cast<std::size_t>(byte_limit))
            break;
        if (mode == TruncationMode::Words && words >= word_limit) break;
        if (!out.empty()) out += ' ';
        out += word;
        ++words;
    }
    return out;
}

RougeScore rouge_n(const std::string& candidate,
                   const std::vector<std::string>& references, int n,
                   const RougeConfig& cfg) {
    Counts cand = ngram_counts(rouge_tokens(cand_text(candidate, cfg), cfg), n);
    long matches = 0, ref_total = 0;
    for (const std::string& ref : references) {
        Counts rc = ngram_counts(rouge_tokens(ref, cfg), n);
        matches += clipped_overlap(cand, rc);
        ref_total += total(rc);
    }
    std::string name = "rouge-" + std::to_string(n);
    return pooled_score(name.c_str(), matches, ref_total,
                        total(cand) * static_cast<long>(references.size()));
}

RougeScore rouge_l(const std::string& candidate,
                   const std::vector<std::string>& references,
                   const RougeConfig& cfg) {
    std::string cand = cand_text(candidate, cfg);
    std::vector<std::vector<std::string>> cand_sents;
    long cand_len = 0;
    for (const std::string& s : segment_sentences(cand)) {
        auto toks = rouge_tokens(s, cfg);
        cand_len += static_cast<long>(toks.size());
        cand_sents.push_back(std::move(toks));
    }

    long matches = 0, ref_total = 0;
    for (const std::string& ref : references) {
        for (const std::string& rs : segment_sentences(ref)) {
            auto ref_toks = rouge_tokens(rs, cfg);
            ref_total += static_cast<long>(ref_toks.size());
            std::set<std::size_t> hit;
            for (const auto& cs : cand_sents)
                for (std::size_t p : lcs_positions(ref_toks, cs)) hit.insert(p);
            matches += static_cast<long>(hit.size());
        }
    }
    return pooled_score("rouge-l", matches, ref_total,
                        cand_len * static_cast<long>(references.size()));
}

RougeScore rouge_su4(const std::string& candidate,
                     const std::vector<std::string>& references,
                     const RougeConfig& cfg) {
    Counts cand = su_counts(rouge_tokens(cand_text(candidate, cfg), cfg), 4);
    long matches = 0, ref_total = 0;
    for (const std::string& ref : references) {
        Counts rc = su_counts(rouge_tokens(ref, cfg), 4);
        matches += clipped_overlap(cand, rc);
        ref_total += total(rc);
    }
    return pooled_score("rouge-su4", matches, ref_total,
                        total(cand) * static_cast<long>(references.size()));
}

}  // namespace ilpsumm
