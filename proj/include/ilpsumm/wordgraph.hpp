#ifndef ILPSUMM_WORDGRAPH_HPP_
#define ILPSUMM_WORDGRAPH_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ilpsumm/clustering.hpp"
#include "ilpsumm/text.hpp"

namespace ilpsumm {

// Node identity is the (case-folded word, POS) pair; START and END are
// dummy nodes 0 and 1.
struct GraphNode {
    std::string word;     // lower form; empty for START/END
    Pos pos = Pos::Other;
    std::string surface;  // representative surface of the first occurrence
    bool is_stopword = false;
    bool is_punct = false;
    // (sentence index, token offset); START sits at offset 0, the first
    // word at 1, END at len+1. At most one occurrence per sentence.
    std::vector<std::pair<int, int>> occurrences;
    int freq() const { return static_cast<int>(occurrences.size()); }
};

struct GraphEdge {
    int from = 0;
    int to = 0;
    int count = 0;     // sentences traversing this adjacency
    double weight = 0; // traversal cost, lower = stronger association
};

struct WordGraph {
    static constexpr int kStart = 0;
    static constexpr int kEnd = 1;

    std::vector<GraphNode> nodes;
    std::map<std::pair<int, int>, GraphEdge> edges;
    // node id per token, wrapped in START/END, one entry per sentence
    std::vector<std::vector<int>> sentence_walks;
    int sentence_count = 0;

    bool has_edge(int from, int to) const { return edges.count({from, to}) > 0; }
    const GraphEdge* edge(int from, int to) const {
        auto it = edges.find({from, to});
        return it == edges.end() ? nullptr : &it->second;
    }
};

struct GraphPath {
    std::vector<int> nodes;  // START ... END
    std::string text;        // detokenized surface
    int token_count = 0;     // non-punctuation words
    double cost = 0.0;
};

struct PathGenConfig {
    int k_max = 200;
    int min_path_len = 8;
    double dedupe_threshold = 0.8;
    std::uint64_t rng_seed = 0;
    // raw enumeration cap before filtering
    int raw_cap_factor = 4;
};

// Iterative construction: first sentence becomes a
// chain, later sentences map onto existing (word, POS) nodes using the
// three-stage rule order (unambiguous content words, ambiguous/repeated
// content words by directed context overlap, then stopwords and
// punctuation).
WordGraph build_graph(const Cluster& cluster);

// (freq(from) + freq(to)) / sum_s diff(s, from, to)^-1, normalized by
// freq(from) * freq(to).
double edge_weight(const GraphEdge& e, const WordGraph& graph);

// Yen's algorithm; loopless paths ordered by (cost, node sequence).
std::vector<GraphPath> k_shortest_paths(const WordGraph& graph, int k);
std::vector<GraphPath> k_shortest_paths(const WordGraph& graph,
                                        const PathGenConfig& cfg);

// Length filter, near-duplicate filter against the cluster's sentences,
// then a seeded uniform subsample down to k_max.
std::vector<GraphPath> filter_paths(std::vector<GraphPath> paths,
                                    const WordGraph& graph,
                                    const Cluster& cluster,
                                    const SparseVec& idf,
                                    const PathGenConfig& cfg);

// Tokens reconstructed from the path's word nodes (START/END dropped).
std::vector<Token> path_tokens(const GraphPath& path, const WordGraph& graph);

// tf-idf vector of a path, same term pipeline as sentences.
SparseVec path_vector(const GraphPath& path, const WordGraph& graph,
                      const SparseVec& idf);

// Space-joined surfaces, punctuation attached to the preceding token,
// first alphabetic character capitalized.
std::string detokenize(const std::vector<int>& nodes, const WordGraph& graph);

// DOT text for inspection.
std::string to_dot(const WordGraph& graph);

}  // namespace ilpsumm

#endif  // ILPSUMM_WORDGRAPH_HPP_
