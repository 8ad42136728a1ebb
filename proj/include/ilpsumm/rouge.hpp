#ifndef ILPSUMM_ROUGE_HPP_
#define ILPSUMM_ROUGE_HPP_

#include <string>
#include <vector>

namespace ilpsumm {

enum class TruncationMode { None, Bytes, Words };

struct RougeConfig {
    TruncationMode truncation = TruncationMode::None;
    int byte_limit = 665;
    int word_limit = 250;
    bool stemming = true;
    bool remove_stopwords = false;
};

struct RougeScore {
    std::string variant;
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
};

// Truncation applies to the candidate only, before scoring. BYTES cuts
// at the last whole whitespace token fitting the limit in UTF-8 bytes;
// WORDS keeps the first word_limit tokens.
std::string truncate_text(const std::string& text, TruncationMode mode,
                          int byte_limit = 665, int word_limit = 250);

// Clipped n-gram overlap, multi-reference counts pooled: recall is
// total matches over total reference n-grams, precision is total
// matches over candidate n-grams times the reference count.
RougeScore rouge_n(const std::string& candidate,
                   const std::vector<std::string>& references, int n,
                   const RougeConfig& cfg = {});

// Summary-level LCS: per reference sentence, the union of LCS matches
// against every candidate sentence.
RougeScore rouge_l(const std::string& candidate,
                   const std::vector<std::string>& references,
                   const RougeConfig& cfg = {});

// Skip-bigrams with at most 4 words between the pair, pooled with
// unigrams.
RougeScore rouge_su4(const std::string& candidate,
                     const std::vector<std::string>& references,
                     const RougeConfig& cfg = {});

}  // namespace ilpsumm

#endif  // ILPSUMM_ROUGE_HPP_
