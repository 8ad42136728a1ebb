#ifndef ILPSUMM_SCORING_HPP_
#define ILPSUMM_SCORING_HPP_

#include <map>
#include <string>

#include "ilpsumm/clustering.hpp"
#include "ilpsumm/importance.hpp"
#include "ilpsumm/wordgraph.hpp"

namespace ilpsumm {

struct TextRankScores {
    std::map<std::string, double> scores;  // lower word -> S(V_i)
    bool converged = true;
};

// Keyword graph over the cluster's non-stopword, non-punctuation words;
// undirected adjacent co-occurrence edges weighted by count. Iterates
// S(V_i) = (1-d) + d * sum_j w_ji / sum_k w_jk * S(V_j). Isolated words
// settle at (1-d).
TextRankScores textrank_words(const Cluster& cluster,
                              const PowerIterationConfig& cfg = {});

// Sum of TextRank scores of the path's non-stopword words, one addend
// per occurrence; unscored words contribute 0.
double informativeness(const GraphPath& path, const WordGraph& graph,
                       const TextRankScores& scores);

}  // namespace ilpsumm

#endif  // ILPSUMM_SCORING_HPP_
