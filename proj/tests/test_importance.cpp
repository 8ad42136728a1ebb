#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ilpsumm/importance.hpp"

using namespace ilpsumm;

namespace {

// Independent dense-matrix power iteration over a fixed weight matrix.
std::vector<double> power_iteration_oracle(
    const std::vector<std::vector<double>>& w, double d, int iters) {
    const std::size_t n = w.size();
    std::vector<double> colsum(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t z = 0; z < n; ++z) colsum[v] += w[z][v];
    std::vector<double> p(n, 1.0 / n), next(n);
    for (int it = 0; it < iters; ++it) {
        for (std::size_t u = 0; u < n; ++u) {
            double acc = 0.0;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u) continue;
                double share = colsum[v] > 0.0 ? w[u][v] / colsum[v] : 1.0 / (n - 1);
                acc += share * p[v];
            }
            next[u] = d / n + (1.0 - d) * acc;
        }
        p = next;
    }
    return p;
}

// Document whose single sentence has the given stemless content words.
Document doc_of(std::string id, const std::vector<std::string>& words) {
    Document d;
    d.doc_id = std::move(id);
    Sentence s;
    s.doc_id = d.doc_id;
    s.index_in_doc = 0;
    for (const auto& w : words) {
        Token t;
        t.surface = w;
        t.lower = w;
        t.pos = Pos::Noun;
        s.tokens.push_back(std::move(t));
    }
    d.sentences.push_back(std::move(s));
    return d;
}

}  // namespace

TEST_CASE("lexrank symmetric graphs give uniform scores") {
    DocumentSet set = build_document_set({doc_of("a", {"storm", "coast"}),
                                          doc_of("b", {"storm", "coast"}),
                                          doc_of("c", {"storm", "coast"})});
    ImportanceScores sc = lexrank_documents(set);
    CHECK(sc.converged);
    for (const auto& [id, s] : sc.scores)
        CHECK(s == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(sc.chosen == "a");  // tie -> lowest doc_id

    DocumentSet two = build_document_set(
        {doc_of("a", {"storm"}), doc_of("b", {"storm"})});
    ImportanceScores sc2 = lexrank_documents(two);
    CHECK(sc2.scores.at("a") == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sc2.scores.at("b") == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("lexrank matches independent power iteration oracle") {
    // 3 documents: a-b share a term, b-c share a term, a-c disjoint
    DocumentSet set = build_document_set({doc_of("a", {"storm", "wind"}),
                                          doc_of("b", {"storm", "rain"}),
                                          doc_of("c", {"rain", "flood"})});
    std::vector<std::vector<double>> w(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                w[i][j] = idf_modified_cosine(set.documents[i].tf,
                                              set.documents[j].tf, set.idf);
    auto expected = power_iteration_oracle(w, 0.85, 200);
    ImportanceScores sc = lexrank_documents(set);
    CHECK(sc.scores.at("a") == doctest::Approx(expected[0]).epsilon(1e-6));
    CHECK(sc.scores.at("b") == doctest::Approx(expected[1]).epsilon(1e-6));
    CHECK(sc.scores.at("c") == doctest::Approx(expected[2]).epsilon(1e-6));
}

TEST_CASE("lexrank scores form a probability distribution") {
    std::mt19937 rng(11);
    const char* vocab[] = {"a", "b", "c", "d", "e", "f"};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Document> docs;
        int n = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            std::vector<std::string> words;
            int m = 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < m; ++k) words.push_back(vocab[rng() % 6]);
            docs.push_back(doc_of("d" + std::to_string(i), words));
        }
        ImportanceScores sc = lexrank_documents(build_document_set(std::move(docs)));
        double sum = 0.0;
        for (const auto& [id, s] : sc.scores) {
            CHECK(s > 0.0);
            sum += s;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("avg_pairwise_cossim trivial cases") {
    DocumentSet identical = build_document_set({doc_of("a", {"x", "y"}),
                                                doc_of("b", {"x", "y"}),
                                                doc_of("c", {"x", "y"})});
    for (const auto& [id, s] : avg_pairwise_cossim(identical).scores)
        CHECK(s == doctest::Approx(1.0).epsilon(1e-9));

    DocumentSet ortho = build_document_set({doc_of("a", {"x"}), doc_of("b", {"x"}),
                                            doc_of("c", {"z"})});
    CHECK(avg_pairwise_cossim(ortho).scores.at("c") == doctest::Approx(0.0));
}

TEST_CASE("docset_similarity includes the target document") {
    // doc sharing no terms with others still scores > 0
    DocumentSet set = build_document_set(
        {doc_of("a", {"x"}), doc_of("b", {"x"}), doc_of("c", {"unique"})});
    CHECK(docset_similarity(set).scores.at("c") > 0.0);
}

TEST_CASE("docset_similarity two-document hand value") {
    // vectors {x:1} and {y:1}; both documents contain a unique term so
    // idf is uniform and cos(d_i, {x:1,y:1}) = 1/sqrt(2)
    DocumentSet set = build_document_set({doc_of("a", {"x"}), doc_of("b", {"y"})});
    ImportanceScores sc = docset_similarity(set);
    CHECK(sc.scores.at("a") == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(sc.scores.at("b") == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("importance argmax invariant to document order and scaling") {
    auto build = [](bool reversed, int repeat) {
        std::vector<Document> docs;
        std::vector<std::string> wa, wb, wc;
        for (int r = 0; r < repeat; ++r) {
            wa.insert(wa.end(), {"storm", "wind", "coast"});
            wb.insert(wb.end(), {"storm", "rain"});
            wc.insert(wc.end(), {"rain", "coast", "storm"});
        }
        docs.push_back(doc_of("a", wa));
        docs.push_back(doc_of("b", wb));
        docs.push_back(doc_of("c", wc));
        if (reversed) std::reverse(docs.begin(), docs.end());
        return build_document_set(std::move(docs));
    };
    for (ImportanceMethod m : {ImportanceMethod::LexRank, ImportanceMethod::CosSim,
                               ImportanceMethod::DocSetSim}) {
        std::string base = compute_importance(build(false, 1), m).chosen;
        CHECK(compute_importance(build(true, 1), m).chosen == base);
        CHECK(compute_importance(build(false, 3), m).chosen == base);
    }
}

TEST_CASE("cossim three-document weighted average") {
    // verify the (|D|-1) denominator with asymmetric similarities
    DocumentSet set = build_document_set({doc_of("a", {"x", "y"}),
                                          doc_of("b", {"x", "z"}),
                                          doc_of("c", {"q"})});
    double sab = cosine(set.documents[0].vector, set.documents[1].vector);
    ImportanceScores sc = avg_pairwise_cossim(set);
    CHECK(sc.scores.at("a") == doctest::Approx(sab / 2.0).epsilon(1e-12));
    CHECK(sc.scores.at("c") == doctest::Approx(0.0));
}

TEST_CASE("importance rejects single-document sets") {
    DocumentSet one = build_document_set({doc_of("a", {"x"})});
    CHECK_THROWS_AS(docset_similarity(one), std::invalid_argument);
}
