#ifndef ILPSUMM_IMPORTANCE_HPP_
#define ILPSUMM_IMPORTANCE_HPP_

#include <map>
#include <string>

#include "ilpsumm/text.hpp"

namespace ilpsumm {

enum class ImportanceMethod { LexRank, CosSim, DocSetSim };

ImportanceMethod importance_method_from_name(const std::string& name);
const char* importance_method_name(ImportanceMethod m);

struct PowerIterationConfig {
    double damping = 0.85;
    double tolerance = 1e-8;
    int max_iters = 200;
};

struct ImportanceScores {
    ImportanceMethod method = ImportanceMethod::DocSetSim;
    std::map<std::string, double> scores;  // doc_id -> score
    std::string chosen;                    // argmax, ties to lowest doc_id
    bool converged = true;
};

// Document-level LexRank: nodes are documents, edge weights are
// idf-modified-cosine over raw term counts. Iterates from the uniform
// vector until the L1 change drops below tolerance. Scores sum to 1.
ImportanceScores lexrank_documents(const DocumentSet& set,
                                   const PowerIterationConfig& cfg = {});

// scores[d_i] = sum_{j != i} cosine(d_i, d_j) / (|D| - 1)
ImportanceScores avg_pairwise_cossim(const DocumentSet& set);

// scores[d_i] = cosine(d_i, concatenation of all documents)
ImportanceScores docset_similarity(const DocumentSet& set);

ImportanceScores compute_importance(const DocumentSet& set, ImportanceMethod m,
                                    const PowerIterationConfig& cfg = {});

}  // namespace ilpsumm

#endif  // ILPSUMM_IMPORTANCE_HPP_
