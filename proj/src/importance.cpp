#include "ilpsumm/importance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ilpsumm {

ImportanceMethod importance_method_from_name(const std::string& name) {
    if (name == "lexrank") return ImportanceMethod::LexRank;
    if (name == "cossim") return ImportanceMethod::CosSim;
    if (name == "docsetsim") return ImportanceMethod::DocSetSim;
    throw std::invalid_argument("unknown importance method: " + name);
}

const char* importance_method_name(ImportanceMethod m) {
    switch (m) {
        case ImportanceMethod::LexRank: return "lexrank";
        case ImportanceMethod::CosSim: return "cossim";
        case ImportanceMethod::DocSetSim: return "docsetsim";
    }
    return "?";
}

namespace {

void require_at_least_two(const DocumentSet& set) {
    if (set.documents.size() < 2)
        throw std::invalid_argument("importance needs at least 2 documents");
}

void finalize(ImportanceScores& out, const DocumentSet& set,
              const std::vector<double>& scores) {
    for (std::size_t i = 0; i < set.documents.size(); ++i)
        out.scores[set.documents[i].doc_id] = scores[i];
    // argmax, ties broken by lowest doc_id; map iteration is sorted
    double best = -1.0;
    for (const auto& [id, s] : out.scores) {
        if (s > best) {
            best = s;
            out.chosen = id;
        }
    }
}

}  // namespace

ImportanceScores lexrank_documents(const DocumentSet& set,
                                   const PowerIterationConfig& cfg) {
    require_at_least_two(set);
    const std::size_t n = set.documents.size();
    const double d = cfg.damping;

    // symmetric weight matrix, self-loops excluded
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = idf_modified_cosine(set.documents[i].tf,
                                           set.documents[j].tf, set.idf);
            w[i][j] = w[j][i] = s;
        }

    std::vector<double> colsum(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t z = 0; z < n; ++z) colsum[v] += w[z][v];

    std::vector<double> p(n, 1.0 / static_cast<double>(n)), next(n);
    ImportanceScores out;
    out.method = ImportanceMethod::LexRank;
    out.converged = false;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        for (std::size_t u = 0; u < n; ++u) {
            double acc = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u) continue;
                // dangling nodes distribute uniformly
                double share = colsum[v] > 0.0
                                   ? w[u][v] / colsum[v]
                                   : 1.0 / static_cast<double>(n - 1);
                acc += share * p[v];
            }
            next[u] = d / static_cast<double>(n) + (1.0 - d) * acc;
        }
        double l1 = 0.0;
        for (std::size_t u = 0; u < n; ++u) l1 += std::fabs(next[u] - p[u]);
        p = next;
        if (l1 < cfg.tolerance) {
            out.converged = true;
            break;
        }
    }
    finalize(out, set, p);
    return out;
}

ImportanceScores avg_pairwise_cossim(const DocumentSet& set) {
    require_at_least_two(set);
    const std::size_t n = set.documents.size();
    std::vector<double> scores(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += cosine(set.documents[i].vector, set.documents[j].vector);
        }
        scores[i] = acc / static_cast<double>(n - 1);
    }
    ImportanceScores out;
    out.method = ImportanceMethod::CosSim;
    finalize(out, set, scores);
    return out;
}

ImportanceScores docset_similarity(const DocumentSet& set) {
    require_at_least_two(set);
    std::vector<double> scores;
    scores.reserve(set.documents.size());
    for (const Document& doc : set.documents)
        scores.push_back(cosine(doc.vector, set.concatenated_vector));
    ImportanceScores out;
    out.method = ImportanceMethod::DocSetSim;
    finalize(out, set, scores);
    return out;
}

ImportanceScores compute_importance(const DocumentSet& set, ImportanceMethod m,
                                    const PowerIterationConfig& cfg) {
    switch (m) {
        case ImportanceMethod::LexRank: return lexrank_documents(set, cfg);
        case ImportanceMethod::CosSim: return avg_pairwise_cossim(set);
        case ImportanceMethod::DocSetSim: return docset_similarity(set);
    }
    throw std::logic_error("unreachable");
}

}  // namespace ilpsumm
