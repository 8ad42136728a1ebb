#include "ilpsumm/lm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ilpsumm {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;  // log2(10)
constexpr double kUnkFloorLog10 = -99.0;

std::string join2(const std::string& a, const std::string& b) { return a + " " + b; }
std::string join3(const std::string& a, const std::string& b, const std::string& c) {
    return a + " " + b + " " + c;
}

double parse_number(const std::string& field, int line) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(field, &pos);
    } catch (const std::exception&) {
        throw ArpaParseError("non-numeric field '" + field + "'", line);
    }
    if (pos != field.size())
        throw ArpaParseError("non-numeric field '" + field + "'", line);
    return v;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

const std::string& TrigramModel::map_word(const std::string& w) const {
    static const std::string unk = kUnknown;
    return in_vocab(w) ? w : unk;
}

TrigramModel parse_arpa(std::istream& in) {
    TrigramModel model;
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            // strip trailing CR
            if (!line.empty() && line.back() == '\r') line.pop_back();
            out = line;
            return true;
        }
        return false;
    };

    // header
    std::string cur;
    bool found_data = false;
    while (next_line(cur)) {
        if (cur == "\\data\\") {
            found_data = true;
            break;
        }
        std::istringstream probe(cur);
        std::string w;
        if (probe >> w)
            throw ArpaParseError("expected \\data\\ header, got '" + cur + "'", lineno);
    }
    if (!found_data) throw ArpaParseError("missing \\data\\ header", lineno);

    std::map<int, std::size_t> declared;
    while (next_line(cur)) {
        if (cur.empty()) break;
        std::istringstream ss(cur);
        std::string kw;
        ss >> kw;
        if (kw != "ngram")
            throw ArpaParseError("expected 'ngram N=count', got '" + cur + "'", lineno);
        std::string rest;
        ss >> rest;
        auto eq = rest.find('=');
        if (eq == std::string::npos)
            throw ArpaParseError("expected 'ngram N=count', got '" + cur + "'", lineno);
        int order = static_cast<int>(parse_number(rest.substr(0, eq), lineno));
        std::size_t count =
            static_cast<std::size_t>(parse_number(rest.substr(eq + 1), lineno));
        if (order < 1 || order > 3)
            throw ArpaParseError("unsupported n-gram order " + std::to_string(order),
                                 lineno);
        declared[order] = count;
    }

    auto read_section = [&](int order, std::map<std::string, TrigramModel::Entry>& out) {
        std::size_t seen = 0;
        while (next_line(cur)) {
            if (cur.empty()) continue;
            if (cur[0] == '\\') break;  // next section or end marker
            std::istringstream ss(cur);
            std::string prob_field;
            ss >> prob_field;
            TrigramModel::Entry e;
            e.logprob = parse_number(prob_field, lineno);
            std::vector<std::string> fields;
            std::string f;
            while (ss >> f) fields.push_back(f);
            if (static_cast<int>(fields.size()) == order + 1) {
                e.backoff = parse_number(fields.back(), lineno);
                fields.pop_back();
            } else if (static_cast<int>(fields.size()) != order) {
                throw ArpaParseError("expected " + std::to_string(order) +
                                         "-gram entry, got '" + cur + "'",
                                     lineno);
            }
            std::string key = fields[0];
            for (std::size_t i = 1; i < fields.size(); ++i) key += " " + fields[i];
            out[key] = e;
            ++seen;
        }
        auto it = declared.find(order);
        if (it != declared.end() && it->second != seen)
            throw ArpaParseError("declared " + std::to_string(it->second) + " " +
                                     std::to_string(order) + "-grams but found " +
                                     std::to_string(seen),
                                 lineno);
    };

    // sections, in order
    bool done = false;
    // cur currently empty; scan for section markers
    while (!done) {
        if (cur == "\\1-grams:") {
            read_section(1, model.unigrams);
        } else if (cur == "\\2-grams:") {
            read_section(2, model.bigrams);
        } else if (cur == "\\3-grams:") {
            read_section(3, model.trigrams);
        } else if (cur == "\\end\\") {
            done = true;
        } else {
            if (!next_line(cur)) break;
        }
    }
    if (!done) throw ArpaParseError("missing \\end\\ marker", lineno);
    if (declared.count(1) && declared[1] != model.unigrams.size())
        throw ArpaParseError("1-gram count mismatch", lineno);
    return model;
}

TrigramModel parse_arpa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ARPA file: " + path);
    return parse_arpa(in);
}

void serialize_arpa(const TrigramModel& model, std::ostream& out) {
    out << "\\data\\\n";
    out << "ngram 1=" << model.unigrams.size() << "\n";
    out << "ngram 2=" << model.bigrams.size() << "\n";
    out << "ngram 3=" << model.trigrams.size() << "\n";
    out << "\n\\1-grams:\n";
    for (const auto& [key, e] : model.unigrams)
        out << format_number(e.logprob) << "\t" << key << "\t"
            << format_number(e.backoff) << "\n";
    out << "\n\\2-grams:\n";
    for (const auto& [key, e] : model.bigrams)
        out << format_number(e.logprob) << "\t" << key << "\t"
            << format_number(e.backoff) << "\n";
    out << "\n\\3-grams:\n";
    for (const auto& [key, e] : model.trigrams)
        out << format_number(e.logprob) << "\t" << key << "\n";
    out << "\n\\end\\\n";
}

void serialize_arpa_file(const TrigramModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write ARPA file: " + path);
    serialize_arpa(model, out);
}

double trigram_logprob(const TrigramModel& model, const std::string& w1,
                       const std::string& w2, const std::string& w3) {
    const std::string& a = model.map_word(w1);
    const std::string& b = model.map_word(w2);
    const std::string& c = model.map_word(w3);

    double log10p;
    auto tri = model.trigrams.find(join3(a, b, c));
    if (tri != model.trigrams.end()) {
        log10p = tri->second.logprob;
    } else {
        double bo12 = 0.0;
        auto hist = model.bigrams.find(join2(a, b));
        if (hist != model.bigrams.end()) bo12 = hist->second.backoff;

        auto bi = model.bigrams.find(join2(b, c));
        if (bi != model.bigrams.end()) {
            log10p = bo12 + bi->second.logprob;
        } else {
            double bo2 = 0.0;
            auto uhist = model.unigrams.find(b);
            if (uhist != model.unigrams.end()) bo2 = uhist->second.backoff;
            auto uni = model.unigrams.find(c);
            double up = uni != model.unigrams.end() ? uni->second.logprob
                                                    : kUnkFloorLog10;
            log10p = bo12 + bo2 + up;
        }
    }
    return log10p * kLog2Of10;
}

double avg_log_likelihood(const TrigramModel& model,
                          const std::vector<std::string>& words) {
    const std::size_t q = words.size();
    if (q < 3)
        throw std::invalid_argument("avg_log_likelihood needs at least 3 words");
    double sum = 0.0;
    for (std::size_t t = 2; t < q; ++t)
        sum += trigram_logprob(model, words[t - 2], words[t - 1], words[t]);
    return sum / static_cast<double>(q - 2);
}

double linguistic_quality(const TrigramModel& model,
                          const std::vector<std::string>& words) {
    return 1.0 / (1.0 - avg_log_likelihood(model, words));
}

TrigramModel train_counts(const std::vector<std::vector<std::string>>& sentences,
                          double add_k) {
    std::size_t total = 0;
    std::map<std::string, std::size_t> raw;
    for (const auto& s : sentences)
        for (const auto& w : s) {
            ++raw[w];
            ++total;
        }
    if (total == 0) throw std::invalid_argument("train_counts: empty corpus");

    auto canon = [&raw](const std::string& w) -> std::string {
        auto it = raw.find(w);
        return (it == raw.end() || it->second <= 1) ? TrigramModel::kUnknown : w;
    };

    std::map<std::string, double> c1;
    std::map<std::string, double> c2, c2_ctx;
    std::map<std::string, double> c3, c3_ctx;
    c1[TrigramModel::kUnknown] = 0.0;  // vocab always contains <unk>
    for (const auto& s : sentences) {
        std::vector<std::string> w;
        w.reserve(s.size());
        for (const auto& x : s) w.push_back(canon(x));
        for (std::size_t i = 0; i < w.size(); ++i) {
            c1[w[i]] += 1.0;
            if (i + 1 < w.size()) {
                c2[join2(w[i], w[i + 1])] += 1.0;
                c2_ctx[w[i]] += 1.0;
            }
            if (i + 2 < w.size()) {
                c3[join3(w[i], w[i + 1], w[i + 2])] += 1.0;
                c3_ctx[join2(w[i], w[i + 1])] += 1.0;
            }
        }
    }

    const double v = static_cast<double>(c1.size());
    const double n = static_cast<double>(total);
    TrigramModel model;

    // unigram layer: add-k over the closed vocabulary, sums to 1
    std::map<std::string, double> p1;
    for (const auto& [w, c] : c1) {
        double p = (c + add_k) / (n + add_k * v);
        p1[w] = p;
        model.unigrams[w].logprob = std::log10(p);
    }

    // full bigram-model probability including backoff, filled below
    std::map<std::string, double> p2_seen;

    // bigram layer
    std::map<std::string, std::vector<std::pair<std::string, double>>> by_ctx2;
    for (const auto& [key, c] : c2) {
        auto sp = key.find(' ');
        by_ctx2[key.substr(0, sp)].emplace_back(key.substr(sp + 1), c);
    }
    std::map<std::string, double> bo1;  // linear backoff weight per unigram context
    for (auto& [h, conts] : by_ctx2) {
        double ctx = c2_ctx[h];
        double seen_mass = 0.0, seen_lower = 0.0;
        for (const auto& [w, c] : conts) {
            double p = (c + add_k) / (ctx + add_k * v);
            p2_seen[join2(h, w)] = p;
            model.bigrams[join2(h, w)].logprob = std::log10(p);
            seen_mass += p;
            seen_lower += p1[w];
        }
        double leftover = 1.0 - seen_mass;
        double denom = 1.0 - seen_lower;
        double bo = (leftover > 0.0 && denom > 0.0) ? leftover / denom : 1.0;
        bo1[h] = bo;
        model.unigrams[h].backoff = std::log10(bo);
    }

    auto p2_model = [&](const std::string& h, const std::string& w) {
        auto it = p2_seen.find(join2(h, w));
        if (it != p2_seen.end()) return it->second;
        auto b = bo1.find(h);
        return (b == bo1.end() ? 1.0 : b->second) * p1[w];
    };

    // trigram layer
    std::map<std::string, std::vector<std::pair<std::string, double>>> by_ctx3;
    for (const auto& [key, c] : c3) {
        auto sp = key.rfind(' ');
        by_ctx3[key.substr(0, sp)].emplace_back(key.substr(sp + 1), c);
    }
    for (auto& [h, conts] : by_ctx3) {
        double ctx = c3_ctx[h];
        auto sp = h.find(' ');
        std::string h2 = h.substr(sp + 1);
        double seen_mass = 0.0, seen_lower = 0.0;
        for (const auto& [w, c] : conts) {
            double p = (c + add_k) / (ctx + add_k * v);
            model.trigrams[join3(h.substr(0, sp), h2, w)].logprob = std::log10(p);
            seen_mass += p;
            seen_lower += p2_model(h2, w);
        }
        double leftover = 1.0 - seen_mass;
        double denom = 1.0 - seen_lower;
        double bo = (leftover > 0.0 && denom > 0.0) ? leftover / denom : 1.0;
        // the trigram history is always a seen bigram
        model.bigrams[h].backoff = std::log10(bo);
    }
    return model;
}

}  // namespace ilpsumm
