#include "ilpsumm/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ilpsumm {

const char* pos_name(Pos p) {
    switch (p) {
        case Pos::Noun: return "NOUN";
        case Pos::Verb: return "VERB";
        case Pos::Adj: return "ADJ";
        case Pos::Adv: return "ADV";
        case Pos::Pron: return "PRON";
        case Pos::Det: return "DET";
        case Pos::Adp: return "ADP";
        case Pos::Conj: return "CONJ";
        case Pos::Num: return "NUM";
        case Pos::Punct: return "PUNCT";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

Pos pos_from_name(const std::string& name) {
    static const std::unordered_map<std::string, Pos> table = {
        {"NOUN", Pos::Noun}, {"VERB", Pos::Verb}, {"ADJ", Pos::Adj},
        {"ADV", Pos::Adv},   {"PRON", Pos::Pron}, {"DET", Pos::Det},
        {"ADP", Pos::Adp},   {"CONJ", Pos::Conj}, {"NUM", Pos::Num},
        {"PUNCT", Pos::Punct}, {"OTHER", Pos::Other}};
    auto it = table.find(name);
    return it == table.end() ? Pos::Noun : it->second;
}

double dot(const SparseVec& a, const SparseVec& b) {
    const SparseVec& small = a.size() <= b.size() ? a : b;
    const SparseVec& big = a.size() <= b.size() ? b : a;
    double s = 0.0;
    for (const auto& [term, w] : small) {
        auto it = big.find(term);
        if (it != big.end()) s += w * it->second;
    }
    return s;
}

double norm(const SparseVec& a) { return std::sqrt(dot(a, a)); }

double cosine(const SparseVec& a, const SparseVec& b) {
    double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    double c = dot(a, b) / (na * nb);
    return std::clamp(c, 0.0, 1.0);
}

double idf_modified_cosine(const SparseVec& tf_a, const SparseVec& tf_b,
                           const SparseVec& idf) {
    auto idf_of = [&idf](const std::string& t) {
        auto it = idf.find(t);
        return it == idf.end() ? 1.0 : it->second;
    };
    double num = 0.0;
    for (const auto& [term, wa] : tf_a) {
        auto it = tf_b.find(term);
        if (it == tf_b.end()) continue;
        double f = idf_of(term);
        num += wa * it->second * f * f;
    }
    double da = 0.0, db = 0.0;
    for (const auto& [term, wa] : tf_a) {
        double x = wa * idf_of(term);
        da += x * x;
    }
    for (const auto& [term, wb] : tf_b) {
        double x = wb * idf_of(term);
        db += x * x;
    }
    if (da == 0.0 || db == 0.0) return 0.0;
    return std::clamp(num / (std::sqrt(da) * std::sqrt(db)), 0.0, 1.0);
}

namespace {

const std::array<const char*, 152> kDefaultStopwords = {
    "a",       "about",  "above",  "after",   "again",   "against", "all",
    "am",      "an",     "and",    "any",     "are",     "as",      "at",
    "be",      "because", "been",  "before",  "being",   "below",   "between",
    "both",    "but",    "by",     "can",     "cannot",  "could",   "did",
    "do",      "does",   "doing",  "down",    "during",  "each",    "few",
    "for",     "from",   "further", "had",    "has",     "have",    "having",
    "he",      "her",    "here",   "hers",    "herself", "him",     "himself",
    "his",     "how",    "i",      "if",      "in",      "into",    "is",
    "it",      "its",    "itself", "just",    "me",      "more",    "most",
    "my",      "myself", "no",     "nor",     "not",     "now",     "of",
    "off",     "on",     "once",   "only",    "or",      "other",   "our",
    "ours",    "ourselves", "out", "over",    "own",     "same",    "shall",
    "she",     "should", "so",     "some",    "such",    "than",    "that",
    "the",     "their",  "theirs", "them",    "themselves", "then", "there",
    "these",   "they",   "this",   "those",   "through", "to",      "too",
    "under",   "until",  "up",     "upon",    "us",      "very",    "was",
    "we",      "were",   "what",   "when",    "where",   "which",   "while",
    "who",     "whom",   "whose",  "why",     "will",    "with",    "would",
    "you",     "your",   "yours",  "yourself", "yourselves", "'s",  "'t",
    "'re",     "'ve",    "'ll",    "'d",      "'m",      "also",    "may",
    "might",   "must",   "one",    "two",     "said",    "says",    "say",
    "mr",      "mrs",    "ms",     "via",     "per"};

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

std::string to_lower_ascii(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> abbr = {
        "mr",  "mrs",  "ms",   "dr",   "prof", "st",  "jr",   "sr",
        "vs",  "etc",  "e.g",  "i.e",  "gen",  "col", "lt",   "gov",
        "sen", "rep",  "rev",  "fig",  "no",   "inc", "ltd",  "co",
        "corp", "mt",  "u.s",  "u.n",  "u.k",  "jan", "feb",  "mar",
        "apr", "jun",  "jul",  "aug",  "sept", "sep", "oct",  "nov",
        "dec", "approx", "dept", "est", "min",  "max", "vol"};
    return abbr;
}

// Word immediately preceding position `i` (exclusive), without the
// trailing sentence punctuation.
std::string preceding_word(const std::string& text, std::size_t i) {
    std::size_t end = i;
    std::size_t begin = end;
    while (begin > 0) {
        unsigned char c = static_cast<unsigned char>(text[begin - 1]);
        if (std::isspace(c)) break;
        --begin;
    }
    return text.substr(begin, end - begin);
}

}  // namespace

StopwordList::StopwordList() {
    for (const char* w : kDefaultStopwords) words_.insert(w);
}

StopwordList StopwordList::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    StopwordList list;
    list.words_.clear();
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string w;
        while (ss >> w) list.words_.insert(to_lower_ascii(w));
    }
    return list;
}

StopwordList StopwordList::from_words(const std::vector<std::string>& words) {
    StopwordList list;
    list.words_.clear();
    for (const auto& w : words) list.words_.insert(to_lower_ascii(w));
    return list;
}

std::vector<std::string> segment_sentences(const std::string& raw_text) {
    std::vector<std::string> sentences;
    std::string current;

    auto flush = [&]() {
        // collapse whitespace, trim
        std::string out;
        bool in_space = true;
        for (char c : current) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!in_space) out.push_back(' ');
                in_space = true;
            } else {
                out.push_back(c);
                in_space = false;
            }
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        if (!out.empty()) sentences.push_back(out);
        current.clear();
    };

    const std::size_t n = raw_text.size();
    for (std::size_t i = 0; i < n; ++i) {
        char c = raw_text[i];
        // paragraph break: blank line
        if (c == '\n') {
            std::size_t j = i + 1;
            while (j < n && (raw_text[j] == ' ' || raw_text[j] == '\t' || raw_text[j] == '\r')) ++j;
            if (j < n && raw_text[j] == '\n') {
                flush();
                i = j;
                continue;
            }
            current.push_back(' ');
            continue;
        }
        current.push_back(c);
        if (c == '!' || c == '?') {
            // absorb run of closing punctuation
            while (i + 1 < n && (raw_text[i + 1] == '!' || raw_text[i + 1] == '?' ||
                                 raw_text[i + 1] == '"' || raw_text[i + 1] == '\'')) {
                current.push_back(raw_text[++i]);
            }
            flush();
        } else if (c == '.') {
            std::string prev = preceding_word(current, current.size() - 1);
            std::string prev_lower = to_lower_ascii(prev);
            bool guard = false;
            if (prev.size() == 1 && std::isalpha(static_cast<unsigned char>(prev[0]))) {
                guard = true;  // single-letter initial
            } else if (abbreviations().count(prev_lower) > 0) {
                guard = true;
            } else if (prev.size() >= 3 && prev.find('.') != std::string::npos) {
                guard = true;  // dotted form like U.S
            }
            bool at_end = (i + 1 >= n);
            bool followed_by_space =
                !at_end && std::isspace(static_cast<unsigned char>(raw_text[i + 1]));
            if (!guard && (at_end || followed_by_space)) {
                while (i + 1 < n && (raw_text[i + 1] == '"' || raw_text[i + 1] == '\'')) {
                    current.push_back(raw_text[++i]);
                }
                flush();
            }
        }
    }
    flush();
    return sentences;
}

std::vector<Token> tokenize(const std::string& sentence_text) {
    std::vector<Token> tokens;
    auto push = [&tokens](std::string surface) {
        if (surface.empty()) return;
        Token t;
        t.lower = to_lower_ascii(surface);
        t.surface = std::move(surface);
        unsigned char c0 = static_cast<unsigned char>(t.lower[0]);
        t.is_punct = t.lower.size() == 1 && !is_word_char(c0) && c0 != '\'';
        if (t.lower.size() == 1 && c0 == '\'') t.is_punct = true;
        if (t.is_punct) t.pos = Pos::Punct;
        tokens.push_back(std::move(t));
    };

    const std::size_t n = sentence_text.size();
    std::size_t i = 0;
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(sentence_text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (is_word_char(c) || c >= 0x80) {
            // word run: alnum plus intra-word hyphen/apostrophe, UTF-8
            // continuation bytes pass through
            std::size_t start = i;
            while (i < n) {
                unsigned char d = static_cast<unsigned char>(sentence_text[i]);
                if (is_word_char(d) || d >= 0x80) {
                    ++i;
                } else if ((d == '-' || d == '\'') && i + 1 < n &&
                           (is_word_char(static_cast<unsigned char>(sentence_text[i + 1])) ||
                            static_cast<unsigned char>(sentence_text[i + 1]) >= 0x80)) {
                    ++i;
                } else {
                    break;
                }
            }
            std::string word = sentence_text.substr(start, i - start);
            // contraction split at the last apostrophe: Sen's -> Sen + 's
            auto apos = word.rfind('\'');
            if (apos != std::string::npos && apos > 0 && apos + 1 < word.size()) {
                push(word.substr(0, apos));
                push(word.substr(apos));
            } else {
                push(word);
            }
        } else {
            push(std::string(1, sentence_text[i]));
            ++i;
        }
    }
    return tokens;
}

namespace {

const std::unordered_map<std::string, Pos>& lexicon() {
    static const std::unordered_map<std::string, Pos> lex = {
        // determiners
        {"the", Pos::Det}, {"a", Pos::Det}, {"an", Pos::Det}, {"this", Pos::Det},
        {"that", Pos::Det}, {"these", Pos::Det}, {"those", Pos::Det},
        {"each", Pos::Det}, {"every", Pos::Det}, {"some", Pos::Det},
        {"any", Pos::Det}, {"no", Pos::Det}, {"all", Pos::Det}, {"both", Pos::Det},
        // pronouns
        {"i", Pos::Pron}, {"you", Pos::Pron}, {"he", Pos::Pron}, {"she", Pos::Pron},
        {"it", Pos::Pron}, {"we", Pos::Pron}, {"they", Pos::Pron}, {"me", Pos::Pron},
        {"him", Pos::Pron}, {"her", Pos::Pron}, {"us", Pos::Pron}, {"them", Pos::Pron},
        {"his", Pos::Pron}, {"hers", Pos::Pron}, {"its", Pos::Pron},
        {"their", Pos::Pron}, {"theirs", Pos::Pron}, {"my", Pos::Pron},
        {"your", Pos::Pron}, {"our", Pos::Pron}, {"mine", Pos::Pron},
        {"yours", Pos::Pron}, {"ours", Pos::Pron}, {"who", Pos::Pron},
        {"whom", Pos::Pron}, {"whose", Pos::Pron}, {"what", Pos::Pron},
        {"itself", Pos::Pron}, {"himself", Pos::Pron}, {"herself", Pos::Pron},
        {"themselves", Pos::Pron},
        // adpositions
        {"of", Pos::Adp}, {"in", Pos::Adp}, {"on", Pos::Adp}, {"at", Pos::Adp},
        {"by", Pos::Adp}, {"for", Pos::Adp}, {"with", Pos::Adp}, {"from", Pos::Adp},
        {"to", Pos::Adp}, {"into", Pos::Adp}, {"over", Pos::Adp}, {"under", Pos::Adp},
        {"between", Pos::Adp}, {"through", Pos::Adp}, {"during", Pos::Adp},
        {"against", Pos::Adp}, {"about", Pos::Adp}, {"across", Pos::Adp},
        {"after", Pos::Adp}, {"before", Pos::Adp}, {"above", Pos::Adp},
        {"below", Pos::Adp}, {"near", Pos::Adp}, {"off", Pos::Adp},
        {"out", Pos::Adp}, {"up", Pos::Adp}, {"down", Pos::Adp}, {"upon", Pos::Adp},
        {"toward", Pos::Adp}, {"towards", Pos::Adp}, {"among", Pos::Adp},
        {"along", Pos::Adp}, {"amid", Pos::Adp}, {"since", Pos::Adp},
        {"until", Pos::Adp}, {"within", Pos::Adp}, {"without", Pos::Adp},
        // conjunctions
        {"and", Pos::Conj}, {"or", Pos::Conj}, {"but", Pos::Conj}, {"nor", Pos::Conj},
        {"so", Pos::Conj}, {"yet", Pos::Conj}, {"because", Pos::Conj},
        {"although", Pos::Conj}, {"while", Pos::Conj}, {"if", Pos::Conj},
        {"when", Pos::Conj}, {"than", Pos::Conj}, {"though", Pos::Conj},
        {"unless", Pos::Conj}, {"whether", Pos::Conj},
        // auxiliary / common verbs
        {"is", Pos::Verb}, {"are", Pos::Verb}, {"was", Pos::Verb}, {"were", Pos::Verb},
        {"be", Pos::Verb}, {"been", Pos::Verb}, {"being", Pos::Verb}, {"am", Pos::Verb},
        {"has", Pos::Verb}, {"have", Pos::Verb}, {"had", Pos::Verb}, {"do", Pos::Verb},
        {"does", Pos::Verb}, {"did", Pos::Verb}, {"will", Pos::Verb},
        {"would", Pos::Verb}, {"can", Pos::Verb}, {"could", Pos::Verb},
        {"shall", Pos::Verb}, {"should", Pos::Verb}, {"may", Pos::Verb},
        {"might", Pos::Verb}, {"must", Pos::Verb}, {"said", Pos::Verb},
        {"says", Pos::Verb}, {"say", Pos::Verb}, {"made", Pos::Verb},
        {"make", Pos::Verb}, {"went", Pos::Verb}, {"go", Pos::Verb},
        // adverbs
        {"not", Pos::Adv}, {"very", Pos::Adv}, {"also", Pos::Adv}, {"too", Pos::Adv},
        {"then", Pos::Adv}, {"there", Pos::Adv}, {"here", Pos::Adv}, {"now", Pos::Adv},
        {"never", Pos::Adv}, {"always", Pos::Adv}, {"often", Pos::Adv},
        {"just", Pos::Adv}, {"still", Pos::Adv}, {"again", Pos::Adv},
        {"already", Pos::Adv}, {"soon", Pos::Adv}, {"however", Pos::Adv},
        // clitics
        {"'s", Pos::Other}, {"'t", Pos::Verb}, {"'re", Pos::Verb},
        {"'ve", Pos::Verb}, {"'ll", Pos::Verb}, {"'d", Pos::Verb},
        {"'m", Pos::Verb},
        // numbers spelled out
        {"one", Pos::Num}, {"two", Pos::Num}, {"three", Pos::Num},
        {"four", Pos::Num}, {"five", Pos::Num}, {"six", Pos::Num},
        {"seven", Pos::Num}, {"eight", Pos::Num}, {"nine", Pos::Num},
        {"ten", Pos::Num}, {"hundred", Pos::Num}, {"thousand", Pos::Num},
        {"million", Pos::Num}, {"billion", Pos::Num}};
    return lex;
}

bool looks_numeric(const std::string& lower) {
    bool has_digit = false;
    for (unsigned char c : lower) {
        if (std::isdigit(c)) {
            has_digit = true;
        } else if (c != '.' && c != ',' && c != '-' && c != '%') {
            return false;
        }
    }
    return has_digit;
}

bool ends_with(const std::string& s, const char* suffix) {
    std::size_t m = std::char_traits<char>::length(suffix);
    return s.size() >= m && s.compare(s.size() - m, m, suffix) == 0;
}

Pos suffix_guess(const std::string& lower) {
    if (looks_numeric(lower)) return Pos::Num;
    if (ends_with(lower, "ly")) return Pos::Adv;
    if (ends_with(lower, "ing") || ends_with(lower, "ed")) return Pos::Verb;
    if (ends_with(lower, "ous") || ends_with(lower, "ful") ||
        ends_with(lower, "ive") || ends_with(lower, "able") ||
        ends_with(lower, "ible") || ends_with(lower, "ish") ||
        ends_with(lower, "less") || ends_with(lower, "-old") ||
        ends_with(lower, "est"))
        return Pos::Adj;
    return Pos::Noun;
}

}  // namespace

void pos_tag(std::vector<Token>& tokens) {
    const auto& lex = lexicon();
    for (Token& t : tokens) {
        if (t.is_punct) {
            t.pos = Pos::Punct;
            continue;
        }
        auto it = lex.find(t.lower);
        t.pos = it != lex.end() ? it->second : suffix_guess(t.lower);
    }
}

void mark_stopwords(std::vector<Token>& tokens, const StopwordList& stop) {
    for (Token& t : tokens) t.is_stopword = stop.contains(t.lower);
}

// ---------------------------------------------------------------------------
// Porter stemmer
// ---------------------------------------------------------------------------

namespace {

bool is_cons(const std::string& w, int i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !is_cons(w, i - 1);
    return true;
}

// number of VC sequences in w[0..end]
int measure(const std::string& w, int end) {
    int n = 0;
    int i = 0;
    while (i <= end && is_cons(w, i)) ++i;
    while (i <= end) {
        while (i <= end && !is_cons(w, i)) ++i;
        if (i > end) break;
        ++n;
        while (i <= end && is_cons(w, i)) ++i;
    }
    return n;
}

bool has_vowel(const std::string& w, int end) {
    for (int i = 0; i <= end; ++i)
        if (!is_cons(w, i)) return true;
    return false;
}

bool double_cons(const std::string& w) {
    int n = static_cast<int>(w.size());
    if (n < 2) return false;
    return w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// consonant-vowel-consonant ending, final consonant not w, x, y
bool cvc(const std::string& w) {
    int n = static_cast<int>(w.size());
    if (n < 3) return false;
    if (!is_cons(w, n - 3) || is_cons(w, n - 2) || !is_cons(w, n - 1)) return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends(const std::string& w, const char* s) {
    std::size_t m = std::char_traits<char>::length(s);
    return w.size() >= m && w.compare(w.size() - m, m, s) == 0;
}

int stem_end(const std::string& w, const char* suffix) {
    return static_cast<int>(w.size() - std::char_traits<char>::length(suffix)) - 1;
}

bool replace_if_m(std::string& w, const char* suffix, const char* repl, int min_m) {
    if (!ends(w, suffix)) return false;
    int end = stem_end(w, suffix);
    if (end < 0 || measure(w, end) <= min_m) return true;  // matched, no change
    w.resize(end + 1);
    w += repl;
    return true;
}

}  // namespace

std::string stem(const std::string& word) {
    std::string w = to_lower_ascii(word);
    if (w.size() <= 2) return w;
    for (char c : w)
        if (!std::isalpha(static_cast<unsigned char>(c))) return w;

    // step 1a
    if (ends(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (!ends(w, "ss") && ends(w, "s")) {
        w.pop_back();
    }

    // step 1b
    bool step1b_fix = false;
    if (ends(w, "eed")) {
        if (measure(w, stem_end(w, "eed")) > 0) w.pop_back();
    } else if (ends(w, "ed") && has_vowel(w, stem_end(w, "ed"))) {
        w.resize(w.size() - 2);
        step1b_fix = true;
    } else if (ends(w, "ing") && has_vowel(w, stem_end(w, "ing"))) {
        w.resize(w.size() - 3);
        step1b_fix = true;
    }
    if (step1b_fix) {
        if (ends(w, "at") || ends(w, "bl") || ends(w, "iz")) {
            w += 'e';
        } else if (double_cons(w) && !ends(w, "l") && !ends(w, "s") && !ends(w, "z")) {
            w.pop_back();
        } else if (measure(w, static_cast<int>(w.size()) - 1) == 1 && cvc(w)) {
            w += 'e';
        }
    }

    // step 1c
    if (ends(w, "y") && has_vowel(w, static_cast<int>(w.size()) - 2)) {
        w.back() = 'i';
    }

    // step 2
    static const std::pair<const char*, const char*> step2[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"},
        {"ation", "ate"},   {"ator", "ate"},    {"alism", "al"},  {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},  {"iviti", "ive"},
        {"biliti", "ble"}};
    for (const auto& [suf, rep] : step2) {
        if (ends(w, suf)) {
            replace_if_m(w, suf, rep, 0);
            break;
        }
    }

    // step 3
    static const std::pair<const char*, const char*> step3[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""}};
    for (const auto& [suf, rep] : step3) {
        if (ends(w, suf)) {
            replace_if_m(w, suf, rep, 0);
            break;
        }
    }

    // step 4
    static const char* step4[] = {"al",   "ance", "ence", "er",  "ic",  "able",
                                  "ible", "ant",  "ement", "ment", "ent", "ou",
                                  "ism",  "ate",  "iti",  "ous", "ive", "ize"};
    for (const char* suf : step4) {
        if (ends(w, suf)) {
            int end = stem_end(w, suf);
            if (end >= 0 && measure(w, end) > 1) w.resize(end + 1);
            break;
        }
    }
    if (ends(w, "ion")) {
        int end = stem_end(w, "ion");
        if (end >= 0 && measure(w, end) > 1 && (w[end] == 's' || w[end] == 't'))
            w.resize(end + 1);
    }

    // step 5a
    if (ends(w, "e")) {
        int end = static_cast<int>(w.size()) - 2;
        int m = measure(w, end);
        if (m > 1 || (m == 1 && !cvc(w.substr(0, w.size() - 1)))) w.pop_back();
    }
    // step 5b
    if (double_cons(w) && ends(w, "l") &&
        measure(w, static_cast<int>(w.size()) - 1) > 1)
        w.pop_back();

    return w;
}

SparseVec term_counts(const std::vector<Token>& tokens) {
    SparseVec tf;
    for (const Token& t : tokens) {
        if (t.is_stopword || t.is_punct) continue;
        tf[stem(t.lower)] += 1.0;
    }
    return tf;
}

DocumentSet build_document_set(std::vector<Document> docs) {
    DocumentSet set;
    set.documents = std::move(docs);
    const double n = static_cast<double>(set.documents.size());

    for (Document& d : set.documents) {
        d.tf.clear();
        for (Sentence& s : d.sentences) {
            s.doc_sentence_count = static_cast<int>(d.sentences.size());
            s.tf = term_counts(s.tokens);
            for (const auto& [term, c] : s.tf) d.tf[term] += c;
        }
        for (const auto& [term, c] : d.tf) set.concatenated_tf[term] += c;
    }

    // document frequency -> idf
    for (const auto& [term, c] : set.concatenated_tf) {
        double df = 0.0;
        for (const Document& d : set.documents)
            if (d.tf.count(term)) df += 1.0;
        set.idf[term] = std::log(n / df) + 1.0;
    }

    auto weigh = [&set](const SparseVec& tf) {
        SparseVec v;
        for (const auto& [term, c] : tf) {
            auto it = set.idf.find(term);
            double idf = it == set.idf.end() ? 1.0 : it->second;
            v[term] = c * idf;
        }
        return v;
    };
    for (Document& d : set.documents) {
        d.vector = weigh(d.tf);
        for (Sentence& s : d.sentences) s.vector = weigh(s.tf);
    }
    set.concatenated_vector = weigh(set.concatenated_tf);
    return set;
}

}  // namespace ilpsumm
