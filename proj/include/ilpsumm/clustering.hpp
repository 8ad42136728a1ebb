#ifndef ILPSUMM_CLUSTERING_HPP_
#define ILPSUMM_CLUSTERING_HPP_

#include <string>
#include <vector>

#include "ilpsumm/text.hpp"

namespace ilpsumm {

enum class ClusterOrdering { Majority, AveragePosition };

ClusterOrdering ordering_from_name(const std::string& name);
const char* ordering_name(ClusterOrdering o);

struct Cluster {
    int cluster_id = 0;  // index of the seed sentence in D_imp
    Sentence seed;
    std::vector<Sentence> members;  // includes the seed
    int order_rank = -1;
};

struct ClusterSet {
    std::vector<Cluster> clusters;  // sorted by order_rank
    ClusterOrdering ordering = ClusterOrdering::Majority;
};

// One cluster per sentence of d_imp; every sentence of every other
// document joins its argmax-similarity cluster iff that max is strictly
// above the threshold. Argmax ties go to the seed with the smaller
// index_in_doc.
std::vector<Cluster> build_clusters(const DocumentSet& set,
                                    const std::string& d_imp,
                                    double threshold = 0.5);

// Keeps clusters with |members| >= ceil(n_docs / 2).
std::vector<Cluster> retain_clusters(std::vector<Cluster> clusters, int n_docs);

// Majority ordering: pairwise precedence counts over shared documents,
// aggregated by Copeland score (wins - losses), ties by seed index.
ClusterSet order_majority(std::vector<Cluster> clusters);

// Average position ordering: mean of 1-based position ratios, ascending,
// ties by seed index.
ClusterSet order_avg_position(std::vector<Cluster> clusters);

ClusterSet order_clusters(std::vector<Cluster> clusters, ClusterOrdering o);

}  // namespace ilpsumm

#endif  // ILPSUMM_CLUSTERING_HPP_
