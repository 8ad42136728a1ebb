#include "ilpsumm/scoring.hpp"

#include <cmath>
#include <vector>

namespace ilpsumm {

TextRankScores textrank_words(const Cluster& cluster,
                              const PowerIterationConfig& cfg) {
    // node index per distinct word
    std::map<std::string, int> index;
    std::vector<std::string> words;
    auto node_of = [&](const std::string& w) {
        auto it = index.find(w);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(words.size());
        index[w] = id;
        words.push_back(w);
        return id;
    };

    for (const Sentence& s : cluster.members)
        for (const Token& t : s.tokens)
            if (!t.is_stopword && !t.is_punct) node_of(t.lower);

    const int n = static_cast<int>(words.size());
    std::vector<std::map<int, double>> w(n);  // symmetric co-occurrence counts

    for (const Sentence& s : cluster.members) {
        for (std::size_t i = 0; i + 1 < s.tokens.size(); ++i) {
            const Token& a = s.tokens[i];
            const Token& b = s.tokens[i + 1];
            if (a.is_stopword || a.is_punct || b.is_stopword || b.is_punct) continue;
            int u = index[a.lower], v = index[b.lower];
            if (u == v) continue;
            w[u][v] += 1.0;
            w[v][u] += 1.0;
        }
    }

    std::vector<double> rowsum(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : w[j]) rowsum[j] += c;

    const double d = cfg.damping;
    std::vector<double> s(n, 1.0), next(n);
    TextRankScores out;
    out.converged = false;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        double max_change = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (const auto& [j, wji] : w[i]) acc += wji / rowsum[j] * s[j];
            next[i] = (1.0 - d) + d * acc;
            max_change = std::max(max_change, std::fabs(next[i] - s[i]));
        }
        s = next;
        if (max_change < cfg.tolerance) {
            out.converged = true;
            break;
        }
    }

    for (int i = 0; i < n; ++i) out.scores[words[i]] = s[i];
    return out;
}

double informativeness(const GraphPath& path, const WordGraph& graph,
                       const TextRankScores& scores) {
    double total = 0.0;
    for (int id : path.nodes) {
        if (id == WordGraph::kStart || id == WordGraph::kEnd) continue;
        const GraphNode& n = graph.nodes[id];
        if (n.is_stopword || n.is_punct) continue;
        auto it = scores.scores.find(n.word);
        if (it != scores.scores.end()) total += it->second;
    }
    return total;
}

}  // namespace ilpsumm
