#include "ilpsumm/clustering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ilpsumm {

ClusterOrdering ordering_from_name(const std::string& name) {
    if (name == "mo") return ClusterOrdering::Majority;
    if (name == "apo") return ClusterOrdering::AveragePosition;
    throw std::invalid_argument("unknown ordering: " + name);
}

const char* ordering_name(ClusterOrdering o) {
    return o == ClusterOrdering::Majority ? "mo" : "apo";
}

std::vector<Cluster> build_clusters(const DocumentSet& set,
                                    const std::string& d_imp,
                                    double threshold) {
    const Document* seed_doc = nullptr;
    for (const Document& d : set.documents)
        if (d.doc_id == d_imp) seed_doc = &d;
    if (!seed_doc) throw std::invalid_argument("d_imp not in document set: " + d_imp);

    std::vector<Cluster> clusters;
    clusters.reserve(seed_doc->sentences.size());
    for (const Sentence& s : seed_doc->sentences) {
        Cluster c;
        c.cluster_id = s.index_in_doc;
        c.seed = s;
        c.members.push_back(s);
        clusters.push_back(std::move(c));
    }

    for (const Document& d : set.documents) {
        if (d.doc_id == d_imp) continue;
        for (const Sentence& s : d.sentences) {
            double best = 0.0;
            int best_j = -1;
            for (std::size_t j = 0; j < clusters.size(); ++j) {
                double sim = cosine(s.vector, clusters[j].seed.vector);
                // ties break toward the seed with smaller index_in_doc,
                // which is the first one seen
                if (sim > best) {
                    best = sim;
                    best_j = static_cast<int>(j);
                }
            }
            if (best_j >= 0 && best > threshold)
                clusters[best_j].members.push_back(s);
        }
    }
    return clusters;
}

std::vector<Cluster> retain_clusters(std::vector<Cluster> clusters, int n_docs) {
    const std::size_t min_members = (static_cast<std::size_t>(n_docs) + 1) / 2;
    std::vector<Cluster> kept;
    for (Cluster& c : clusters)
        if (c.members.size() >= min_members) kept.push_back(std::move(c));
    return kept;
}

namespace {

ClusterSet assign_ranks(std::vector<Cluster> clusters, std::vector<int> order,
                        ClusterOrdering o) {
    std::vector<Cluster> sorted;
    sorted.reserve(clusters.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        Cluster c = std::move(clusters[order[rank]]);
        c.order_rank = static_cast<int>(rank);
        sorted.push_back(std::move(c));
    }
    ClusterSet out;
    out.clusters = std::move(sorted);
    out.ordering = o;
    return out;
}

}  // namespace

ClusterSet order_majority(std::vector<Cluster> clusters) {
    const std::size_t m = clusters.size();

    // earliest member sentence index per contributing document
    std::vector<std::map<std::string, int>> earliest(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (const Sentence& s : clusters[j].members) {
            auto it = earliest[j].find(s.doc_id);
            if (it == earliest[j].end() || s.index_in_doc < it->second)
                earliest[j][s.doc_id] = s.index_in_doc;
        }
    }

    std::vector<int> copeland(m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            int a_first = 0, b_first = 0;
            for (const auto& [doc, pos_a] : earliest[a]) {
                auto it = earliest[b].find(doc);
                if (it == earliest[b].end()) continue;
                if (pos_a < it->second) ++a_first;
                else if (it->second < pos_a) ++b_first;
            }
            if (a_first > b_first) {
                ++copeland[a];
                --copeland[b];
            } else if (b_first > a_first) {
                ++copeland[b];
                --copeland[a];
            }
        }
    }

    std::vector<int> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (copeland[x] != copeland[y]) return copeland[x] > copeland[y];
        return clusters[x].cluster_id < clusters[y].cluster_id;
    });
    return assign_ranks(std::move(clusters), std::move(order),
                        ClusterOrdering::Majority);
}

ClusterSet order_avg_position(std::vector<Cluster> clusters) {
    const std::size_t m = clusters.size();
    std::vector<double> score(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double acc = 0.0;
        for (const Sentence& s : clusters[j].members) {
            acc += static_cast<double>(s.index_in_doc + 1) /
                   static_cast<double>(s.doc_sentence_count);
        }
        score[j] = acc / static_cast<double>(clusters[j].members.size());
    }

    std::vector<int> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (score[x] != score[y]) return score[x] < score[y];
        return clusters[x].cluster_id < clusters[y].cluster_id;
    });
    return assign_ranks(std::move(clusters), std::move(order),
                        ClusterOrdering::AveragePosition);
}

ClusterSet order_clusters(std::vector<Cluster> clusters, ClusterOrdering o) {
    return o == ClusterOrdering::Majority ? order_majority(std::move(clusters))
                                          : order_avg_position(std::move(clusters));
}

}  // namespace ilpsumm
