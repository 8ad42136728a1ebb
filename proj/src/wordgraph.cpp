#include "ilpsumm/wordgraph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ilpsumm {

namespace {

bool is_content(const Token& t) { return !t.is_stopword && !t.is_punct; }

int add_node(WordGraph& g, const Token& t) {
    GraphNode n;
    n.word = t.lower;
    n.pos = t.pos;
    n.surface = t.surface;
    n.is_stopword = t.is_stopword;
    n.is_punct = t.is_punct;
    g.nodes.push_back(std::move(n));
    return static_cast<int>(g.nodes.size()) - 1;
}

// candidate nodes with identical (lower, POS), excluding nodes already
// hosting a token of the current sentence
std::vector<int> candidates_for(const WordGraph& g, const Token& t,
                                const std::vector<bool>& used) {
    std::vector<int> out;
    for (std::size_t id = 2; id < g.nodes.size(); ++id) {
        if (used[id]) continue;
        const GraphNode& n = g.nodes[id];
        if (n.word == t.lower && n.pos == t.pos) out.push_back(static_cast<int>(id));
    }
    return out;
}

// directed context overlap: mapped tokens within window 2 on the left
// whose nodes point at the candidate, plus mapped tokens within window 2
// on the right the candidate points at
int context_overlap(const WordGraph& g, int candidate,
                    const std::vector<int>& node_of, int t) {
    const int n = static_cast<int>(node_of.size());
    int score = 0;
    for (int off = 1; off <= 2; ++off) {
        int left = t - off;
        if (left >= 0 && node_of[left] >= 0 && g.has_edge(node_of[left], candidate))
            ++score;
        int right = t + off;
        if (right < n && node_of[right] >= 0 && g.has_edge(candidate, node_of[right]))
            ++score;
    }
    return score;
}

int pick_candidate(const WordGraph& g, const std::vector<int>& cands,
                   const std::vector<int>& node_of, int t) {
    int best = cands.front();
    int best_overlap = context_overlap(g, best, node_of, t);
    for (std::size_t i = 1; i < cands.size(); ++i) {
        int c = cands[i];
        int ov = context_overlap(g, c, node_of, t);
        if (ov > best_overlap ||
            (ov == best_overlap && g.nodes[c].freq() > g.nodes[best].freq())) {
            best = c;
            best_overlap = ov;
        }
        // remaining tie: earlier creation order, already guaranteed by scan order
    }
    return best;
}

void add_edge_count(WordGraph& g, int from, int to) {
    GraphEdge& e = g.edges[{from, to}];
    e.from = from;
    e.to = to;
    e.count += 1;
}

}  // namespace

WordGraph build_graph(const Cluster& cluster) {
    if (cluster.members.empty())
        throw std::invalid_argument("build_graph: empty cluster");

    WordGraph g;
    g.nodes.resize(2);  // START, END
    g.sentence_count = static_cast<int>(cluster.members.size());

    for (int s = 0; s < g.sentence_count; ++s) {
        const std::vector<Token>& toks = cluster.members[s].tokens;
        const int len = static_cast<int>(toks.size());
        std::vector<int> node_of(len, -1);
        std::vector<bool> used(g.nodes.size(), false);

        auto claim = [&](int t, int id) {
            node_of[t] = id;
            if (id >= static_cast<int>(used.size())) used.resize(id + 1, false);
            used[id] = true;
        };

        // occurrences of each (lower, POS) within this sentence
        std::map<std::pair<std::string, Pos>, int> in_sentence;
        for (const Token& t : toks) ++in_sentence[{t.lower, t.pos}];

        // stage 1: content words, unambiguous mapping or fresh node
        std::vector<int> deferred;
        for (int t = 0; t < len; ++t) {
            if (!is_content(toks[t])) continue;
            auto cands = candidates_for(g, toks[t], used);
            if (cands.empty()) {
                claim(t, add_node(g, toks[t]));
            } else if (cands.size() == 1 &&
                       in_sentence[{toks[t].lower, toks[t].pos}] == 1) {
                claim(t, cands.front());
            } else {
                deferred.push_back(t);
            }
        }

        // stage 2: ambiguous / repeated content words by context overlap
        for (int t : deferred) {
            auto cands = candidates_for(g, toks[t], used);
            if (cands.empty()) {
                claim(t, add_node(g, toks[t]));
            } else {
                claim(t, pick_candidate(g, cands, node_of, t));
            }
        }

        // stage 3: stopwords and punctuation; map only when some adjacent
        // token already sits on an adjacent node
        for (int t = 0; t < len; ++t) {
            if (is_content(toks[t]) || node_of[t] >= 0) continue;
            auto cands = candidates_for(g, toks[t], used);
            std::vector<int> linked;
            for (int c : cands) {
                bool ok = (t > 0 && node_of[t - 1] >= 0 && g.has_edge(node_of[t - 1], c)) ||
                          (t + 1 < len && node_of[t + 1] >= 0 && g.has_edge(c, node_of[t + 1]));
                if (ok) linked.push_back(c);
            }
            if (linked.empty()) {
                claim(t, add_node(g, toks[t]));
            } else {
                claim(t, pick_candidate(g, linked, node_of, t));
            }
        }

        // record the walk, occurrences and adjacency counts
        std::vector<int> walk;
        walk.reserve(len + 2);
        walk.push_back(WordGraph::kStart);
        for (int t = 0; t < len; ++t) walk.push_back(node_of[t]);
        walk.push_back(WordGraph::kEnd);

        g.nodes[WordGraph::kStart].occurrences.emplace_back(s, 0);
        for (int t = 0; t < len; ++t)
            g.nodes[node_of[t]].occurrences.emplace_back(s, t + 1);
        g.nodes[WordGraph::kEnd].occurrences.emplace_back(s, len + 1);

        for (std::size_t i = 0; i + 1 < walk.size(); ++i)
            add_edge_count(g, walk[i], walk[i + 1]);
        g.sentence_walks.push_back(std::move(walk));
    }

    for (auto& [key, e] : g.edges) e.weight = edge_weight(e, g);
    return g;
}

double edge_weight(const GraphEdge& e, const WordGraph& graph) {
    const GraphNode& a = graph.nodes[e.from];
    const GraphNode& b = graph.nodes[e.to];

    // offset of each node per sentence (unique: one occurrence per sentence)
    double inv_diff_sum = 0.0;
    for (const auto& [sa, pa] : a.occurrences) {
        for (const auto& [sb, pb] : b.occurrences) {
            if (sa == sb && pb > pa)
                inv_diff_sum += 1.0 / static_cast<double>(pb - pa);
        }
    }
    double w_prime = static_cast<double>(a.freq() + b.freq()) / inv_diff_sum;
    return w_prime / (static_cast<double>(a.freq()) * static_cast<double>(b.freq()));
}

// ---------------------------------------------------------------------------
// K shortest loopless paths (Yen)
// ---------------------------------------------------------------------------

namespace {

struct Adjacency {
    // from -> list of (to, weight), sorted by to
    std::vector<std::vector<std::pair<int, double>>> out;
};

Adjacency make_adjacency(const WordGraph& g) {
    Adjacency adj;
    adj.out.resize(g.nodes.size());
    for (const auto& [key, e] : g.edges) adj.out[e.from].emplace_back(e.to, e.weight);
    return adj;
}

double path_cost(const std::vector<int>& nodes, const WordGraph& g) {
    double c = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        c += g.edge(nodes[i], nodes[i + 1])->weight;
    return c;
}

// Dijkstra returning the minimum-cost path from src to dst that avoids
// banned nodes and banned edges; equal costs resolve to the
// lexicographically smallest node sequence.
bool dijkstra(const Adjacency& adj, int src, int dst,
              const std::vector<bool>& banned_node,
              const std::set<std::pair<int, int>>& banned_edge,
              std::vector<int>& out_path) {
    const std::size_t n = adj.out.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::vector<int>> best(n);

    using Item = std::pair<double, std::vector<int>>;
    auto cmp = [](const Item& a, const Item& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    dist[src] = 0.0;
    best[src] = {src};
    pq.push({0.0, {src}});

    while (!pq.empty()) {
        auto [d, path] = pq.top();
        pq.pop();
        int u = path.back();
        if (d != dist[u] || path != best[u]) continue;
        if (u == dst) break;
        for (const auto& [v, w] : adj.out[u]) {
            if (banned_node[v]) continue;
            if (banned_edge.count({u, v})) continue;
            double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                best[v] = path;
                best[v].push_back(v);
                pq.push({nd, best[v]});
            } else if (nd == dist[v]) {
                std::vector<int> cand = path;
                cand.push_back(v);
                if (cand < best[v]) {
                    best[v] = std::move(cand);
                    pq.push({nd, best[v]});
                }
            }
        }
    }
    if (best[dst].empty()) return false;
    out_path = best[dst];
    return true;
}

}  // namespace

std::vector<GraphPath> k_shortest_paths(const WordGraph& graph, int k) {
    Adjacency adj = make_adjacency(graph);
    const std::size_t n = graph.nodes.size();

    std::vector<std::vector<int>> accepted;
    // candidates ordered by (cost, node sequence)
    std::set<std::pair<double, std::vector<int>>> frontier;
    std::set<std::vector<int>> seen;

    std::vector<bool> no_ban(n, false);
    std::vector<int> first;
    if (dijkstra(adj, WordGraph::kStart, WordGraph::kEnd, no_ban, {}, first)) {
        frontier.insert({path_cost(first, graph), first});
        seen.insert(first);
    }

    while (!frontier.empty() && static_cast<int>(accepted.size()) < k) {
        auto it = frontier.begin();
        std::vector<int> path = it->second;
        frontier.erase(it);
        accepted.push_back(path);

        // spur deviations of the newly accepted path
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            std::vector<int> root(path.begin(), path.begin() + i + 1);
            std::set<std::pair<int, int>> banned_edge;
            for (const auto& p : accepted) {
                if (p.size() > i + 1 &&
                    std::equal(root.begin(), root.end(), p.begin()))
                    banned_edge.insert({p[i], p[i + 1]});
            }
            for (const auto& [cost, p] : frontier) {
                if (p.size() > i + 1 &&
                    std::equal(root.begin(), root.end(), p.begin()))
                    banned_edge.insert({p[i], p[i + 1]});
            }
            std::vector<bool> banned_node(n, false);
            for (std::size_t j = 0; j < i; ++j) banned_node[root[j]] = true;

            std::vector<int> spur;
            if (!dijkstra(adj, path[i], WordGraph::kEnd, banned_node, banned_edge, spur))
                continue;
            std::vector<int> full = root;
            full.insert(full.end(), spur.begin() + 1, spur.end());
            if (seen.insert(full).second)
                frontier.insert({path_cost(full, graph), full});
        }
    }

    std::vector<GraphPath> out;
    out.reserve(accepted.size());
    for (auto& nodes : accepted) {
        GraphPath p;
        p.cost = path_cost(nodes, graph);
        p.text = detokenize(nodes, graph);
        int words = 0;
        for (int id : nodes)
            if (id != WordGraph::kStart && id != WordGraph::kEnd &&
                !graph.nodes[id].is_punct)
                ++words;
        p.token_count = words;
        p.nodes = std::move(nodes);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const GraphPath& a, const GraphPath& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.nodes < b.nodes;
    });
    return out;
}

std::vector<GraphPath> k_shortest_paths(const WordGraph& graph,
                                        const PathGenConfig& cfg) {
    return k_shortest_paths(graph, cfg.k_max * cfg.raw_cap_factor);
}

std::vector<Token> path_tokens(const GraphPath& path, const WordGraph& graph) {
    std::vector<Token> toks;
    for (int id : path.nodes) {
        if (id == WordGraph::kStart || id == WordGraph::kEnd) continue;
        const GraphNode& n = graph.nodes[id];
        Token t;
        t.surface = n.surface;
        t.lower = n.word;
        t.pos = n.pos;
        t.is_stopword = n.is_stopword;
        t.is_punct = n.is_punct;
        toks.push_back(std::move(t));
    }
    return toks;
}

SparseVec path_vector(const GraphPath& path, const WordGraph& graph,
                      const SparseVec& idf) {
    std::vector<Token> toks = path_tokens(path, graph);
    SparseVec tf = term_counts(toks);
    SparseVec v;
    for (const auto& [term, c] : tf) {
        auto it = idf.find(term);
        v[term] = c * (it == idf.end() ? 1.0 : it->second);
    }
    return v;
}

std::vector<GraphPath> filter_paths(std::vector<GraphPath> paths,
                                    const WordGraph& graph,
                                    const Cluster& cluster,
                                    const SparseVec& idf,
                                    const PathGenConfig& cfg) {
    // member vectors on the shared idf table
    std::vector<SparseVec> member_vecs;
    member_vecs.reserve(cluster.members.size());
    for (const Sentence& s : cluster.members) {
        SparseVec v;
        for (const auto& [term, c] : term_counts(s.tokens)) {
            auto it = idf.find(term);
            v[term] = c * (it == idf.end() ? 1.0 : it->second);
        }
        member_vecs.push_back(std::move(v));
    }

    std::vector<GraphPath> kept;
    for (GraphPath& p : paths) {
        if (p.token_count < cfg.min_path_len) continue;
        SparseVec v = path_vector(p, graph, idf);
        bool near_duplicate = false;
        for (const SparseVec& mv : member_vecs) {
            if (cosine(v, mv) >= cfg.dedupe_threshold) {
                near_duplicate = true;
                break;
            }
        }
        if (!near_duplicate) kept.push_back(std::move(p));
    }

    if (static_cast<int>(kept.size()) > cfg.k_max) {
        // seeded uniform subsample, cost order preserved
        std::mt19937_64 rng(cfg.rng_seed);
        std::vector<std::size_t> idx(kept.size());
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = 0; i < static_cast<std::size_t>(cfg.k_max); ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        idx.resize(cfg.k_max);
        std::sort(idx.begin(), idx.end());
        std::vector<GraphPath> sampled;
        sampled.reserve(idx.size());
        for (std::size_t i : idx) sampled.push_back(std::move(kept[i]));
        kept = std::move(sampled);
    }
    return kept;
}

std::string detokenize(const std::vector<int>& nodes, const WordGraph& graph) {
    std::string out;
    for (int id : nodes) {
        if (id == WordGraph::kStart || id == WordGraph::kEnd) continue;
        const GraphNode& n = graph.nodes[id];
        bool attach = n.is_punct || (!n.word.empty() && n.word[0] == '\'');
        if (!out.empty() && !attach) out.push_back(' ');
        out += n.surface;
    }
    for (char& c : out) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            break;
        }
    }
    return out;
}

std::string to_dot(const WordGraph& graph) {
    std::ostringstream os;
    os << "digraph wordgraph {\n";
    os << "  rankdir=LR;\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const GraphNode& n = graph.nodes[i];
        std::string label;
        if (i == WordGraph::kStart) label = "START";
        else if (i == WordGraph::kEnd) label = "END";
        else label = n.word + "/" + pos_name(n.pos);
        os << "  n" << i << " [label=\"" << label << " (" << n.freq() << ")\"];\n";
    }
    for (const auto& [key, e] : graph.edges) {
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.weight
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ilpsumm
