#ifndef ILPSUMM_TEXT_HPP_
#define ILPSUMM_TEXT_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

namespace ilpsumm {

// Coarse POS tag set. Node identity in the word graph pairs the
// case-folded surface with one of these tags.
enum class Pos {
    Noun,
    Verb,
    Adj,
    Adv,
    Pron,
    Det,
    Adp,
    Conj,
    Num,
    Punct,
    Other
};

const char* pos_name(Pos p);
Pos pos_from_name(const std::string& name);

struct Token {
    std::string surface;
    std::string lower;   // case-folded surface
    Pos pos = Pos::Noun;
    bool is_stopword = false;
    bool is_punct = false;
};

// Term -> weight. std::map keeps iteration deterministic.
using SparseVec = std::map<std::string, double>;

double dot(const SparseVec& a, const SparseVec& b);
double norm(const SparseVec& a);

// Standard cosine; 0 when either vector is zero.
double cosine(const SparseVec& a, const SparseVec& b);

// LexRank's similarity: raw term frequencies weighted by idf^2 in the
// numerator, idf-weighted norms in the denominator.
double idf_modified_cosine(const SparseVec& tf_a, const SparseVec& tf_b,
                           const SparseVec& idf);

class StopwordList {
public:
    // Bundled default list of English function words.
    StopwordList();
    // One lowercase word per line, '#' starts a comment.
    static StopwordList from_file(const std::string& path);
    static StopwordList from_words(const std::vector<std::string>& words);

    bool contains(const std::string& lower) const { return words_.count(lower) > 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::set<std::string> words_;
};

// Sentence splitting with abbreviation guarding (single-letter initials
// plus a fixed abbreviation list). Boundaries occur only after . ! ? or
// paragraph breaks. Whitespace inside sentences is collapsed.
std::vector<std::string> segment_sentences(const std::string& raw_text);

// Whitespace/punctuation tokenization. Punctuation characters become
// their own tokens, intra-word hyphens are kept, contractions split at
// the apostrophe (Sen's -> Sen + 's). POS and stopword fields are not
// filled here.
std::vector<Token> tokenize(const std::string& sentence_text);

// Lexicon + suffix-rule tagger over the coarse tag set. Unknown words
// fall through the suffix table to Noun. Every token leaves tagged.
void pos_tag(std::vector<Token>& tokens);

void mark_stopwords(std::vector<Token>& tokens, const StopwordList& stop);

// Porter stemmer.
std::string stem(const std::string& word);

struct Sentence {
    std::string doc_id;
    int index_in_doc = 0;        // 0-based
    int doc_sentence_count = 1;  // total sentences in the source document
    std::vector<Token> tokens;
    SparseVec vector;            // tf-idf over stemmed non-stopword terms
    SparseVec tf;                // raw stemmed term counts
};

struct Document {
    std::string doc_id;
    std::vector<Sentence> sentences;
    SparseVec vector;
    SparseVec tf;
};

struct DocumentSet {
    std::vector<Document> documents;
    SparseVec idf;                 // term -> inverse document frequency
    SparseVec concatenated_vector; // tf-idf of all text concatenated
    SparseVec concatenated_tf;
};

// Raw stemmed term counts of the non-stopword, non-punctuation tokens.
SparseVec term_counts(const std::vector<Token>& tokens);

// Builds idf over the documents (log(n/df) + 1) and fills every tf-idf
// vector, including the concatenation of the whole set.
DocumentSet build_document_set(std::vector<Document> docs);

}  // namespace ilpsumm

#endif  // ILPSUMM_TEXT_HPP_
