#ifndef ILPSUMM_LM_HPP_
#define ILPSUMM_LM_HPP_

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ilpsumm {

class ArpaParseError : public std::runtime_error {
public:
    ArpaParseError(const std::string& what, int line)
        : std::runtime_error("ARPA parse error at line " + std::to_string(line) +
                             ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Backoff trigram model. Probabilities and backoff weights are log10 as
// stored in the ARPA file; n-gram keys join words with a single space.
struct TrigramModel {
    struct Entry {
        double logprob = 0.0;  // log10, <= 0
        double backoff = 0.0;  // log10; 0 when absent
    };

    static constexpr const char* kUnknown = "<unk>";

    std::map<std::string, Entry> unigrams;
    std::map<std::string, Entry> bigrams;
    std::map<std::string, Entry> trigrams;

    bool in_vocab(const std::string& w) const { return unigrams.count(w) > 0; }
    // OOV words map to <unk>; if the model has no <unk>, a -99 log10
    // unigram floor applies.
    const std::string& map_word(const std::string& w) const;
};

TrigramModel parse_arpa(std::istream& in);
TrigramModel parse_arpa_file(const std::string& path);

// Tab-separated `logprob<TAB>ngram<TAB>backoff` with full double
// precision; backoff omitted on trigrams. parse(serialize(m)) == m on
// every numeric field.
void serialize_arpa(const TrigramModel& model, std::ostream& out);
void serialize_arpa_file(const TrigramModel& model, const std::string& path);

// log2 P(w3 | w1 w2) by standard backoff.
double trigram_logprob(const TrigramModel& model, const std::string& w1,
                       const std::string& w2, const std::string& w3);

// Average log2 trigram probability starting at the third word, no
// boundary padding. Requires at least 3 words.
double avg_log_likelihood(const TrigramModel& model,
                          const std::vector<std::string>& words);

// LQ = 1 / (1 - LL); always in (0, 1] for LL <= 0.
double linguistic_quality(const TrigramModel& model,
                          const std::vector<std::string>& words);

// Interpolated add-k counting over 1/2/3-grams. Corpus words seen only
// once are replaced by <unk> before counting, so the model always has an
// unknown-word probability. Backoff weights absorb exactly the
// probability mass add-k leaves to unseen continuations; conditional
// distributions sum to 1 over the closed vocabulary.
TrigramModel train_counts(const std::vector<std::vector<std::string>>& sentences,
                          double add_k = 0.1);

}  // namespace ilpsumm

#endif  // ILPSUMM_LM_HPP_
