#include "ilpsumm/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ilpsumm/scoring.hpp"

namespace fs = std::filesystem;

namespace ilpsumm {

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Document parse_plain_document(const std::string& doc_id, const std::string& text,
                              const StopwordList& stopwords) {
    Document doc;
    doc.doc_id = doc_id;
    int idx = 0;
    for (const std::string& raw : segment_sentences(text)) {
        Sentence s;
        s.doc_id = doc_id;
        s.index_in_doc = idx++;
        s.tokens = tokenize(raw);
        pos_tag(s.tokens);
        mark_stopwords(s.tokens, stopwords);
        doc.sentences.push_back(std::move(s));
    }
    return doc;
}

// `doc_id<TAB>index<TAB>surface_TAG surface_TAG ...`
void parse_tagged_records(const std::string& text, const StopwordList& stopwords,
                          std::map<std::string, Document>& docs) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto t1 = line.find('\t');
        auto t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw std::runtime_error("tagged record missing fields at line " +
                                     std::to_string(lineno));
        Sentence s;
        s.doc_id = line.substr(0, t1);
        s.index_in_doc = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
        std::istringstream toks(line.substr(t2 + 1));
        std::string item;
        while (toks >> item) {
            auto sep = item.rfind('_');
            if (sep == std::string::npos || sep == 0)
                throw std::runtime_error("token missing _TAG at line " +
                                         std::to_string(lineno));
            Token t;
            t.surface = item.substr(0, sep);
            t.lower = t.surface;
            for (char& c : t.lower)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            t.pos = pos_from_name(item.substr(sep + 1));
            t.is_punct = t.pos == Pos::Punct;
            s.tokens.push_back(std::move(t));
        }
        mark_stopwords(s.tokens, stopwords);
        Document& d = docs[s.doc_id];
        d.doc_id = s.doc_id;
        d.sentences.push_back(std::move(s));
    }
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<std::string> path_words(const GraphPath& path, const WordGraph& g) {
    std::vector<std::string> words;
    for (int id : path.nodes) {
        if (id == WordGraph::kStart || id == WordGraph::kEnd) continue;
        if (g.nodes[id].is_punct) continue;
        words.push_back(g.nodes[id].word);
    }
    return words;
}

}  // namespace

DocumentSet load_corpus(const std::string& dir, const StopwordList& stopwords) {
    if (!fs::is_directory(dir))
        throw std::runtime_error("input is not a directory: " + dir);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::map<std::string, Document> tagged_docs;
    std::vector<Document> docs;
    for (const fs::path& f : files) {
        if (f.extension() == ".tagged") {
            parse_tagged_records(read_file(f), stopwords, tagged_docs);
        } else if (f.extension() == ".txt") {
            docs.push_back(parse_plain_document(f.stem().string(), read_file(f),
                                                stopwords));
        }
    }
    for (auto& [id, d] : tagged_docs) {
        std::sort(d.sentences.begin(), d.sentences.end(),
                  [](const Sentence& a, const Sentence& b) {
                      return a.index_in_doc < b.index_in_doc;
                  });
        docs.push_back(std::move(d));
    }
    std::sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) {
        return a.doc_id < b.doc_id;
    });
    return build_document_set(std::move(docs));
}

TrigramModel train_lm_on(const DocumentSet& set, double add_k) {
    std::vector<std::vector<std::string>> sentences;
    for (const Document& d : set.documents) {
        for (const Sentence& s : d.sentences) {
            std::vector<std::string> words;
            for (const Token& t : s.tokens)
                if (!t.is_punct) words.push_back(t.lower);
            if (!words.empty()) sentences.push_back(std::move(words));
        }
    }
    return train_counts(sentences, add_k);
}

std::vector<std::string> assemble_summary(
    const SelectionSolution& sol, const ClusterSet& clusters,
    const std::vector<std::vector<std::string>>& texts) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < clusters.clusters.size(); ++j) {
        if (j < sol.chosen.size() && sol.chosen[j])
            out.push_back(texts[j][*sol.chosen[j]]);
    }
    if (out.empty())
        throw PipelineFailure(PipelineErrorCode::EmptySelection, "assemble",
                              "empty summary: no path selected");
    return out;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    nlohmann::json report;
    nlohmann::json timings;
    auto t0 = std::chrono::steady_clock::now();

    StopwordList stopwords = cfg.stopword_path.empty()
                                 ? StopwordList()
                                 : StopwordList::from_file(cfg.stopword_path);
    DocumentSet set = load_corpus(cfg.input_dir, stopwords);
    if (set.documents.size() < 2)
        throw PipelineFailure(PipelineErrorCode::TooFewDocuments, "load",
                              "need >= 2 documents, found " +
                                  std::to_string(set.documents.size()));
    timings["load_ms"] = ms_since(t0);

    // importance
    auto t1 = std::chrono::steady_clock::now();
    ImportanceScores imp = compute_importance(set, cfg.importance, cfg.power);
    report["importance"] = {{"method", importance_method_name(imp.method)},
                            {"chosen", imp.chosen},
                            {"converged", imp.converged},
                            {"scores", imp.scores}};
    timings["importance_ms"] = ms_since(t1);

    // clustering
    auto t2 = std::chrono::steady_clock::now();
    std::vector<Cluster> raw_clusters =
        build_clusters(set, imp.chosen, cfg.align_threshold);
    std::size_t before = raw_clusters.size();
    std::vector<Cluster> kept = retain_clusters(
        std::move(raw_clusters), static_cast<int>(set.documents.size()));
    if (kept.empty())
        throw PipelineFailure(PipelineErrorCode::NoRetainedClusters, "clustering",
                              "no well-supported cluster after retention");
    ClusterSet clusters = order_clusters(std::move(kept), cfg.ordering);
    report["clusters"] = {{"before_retention", before},
                          {"after_retention", clusters.clusters.size()},
                          {"ordering", ordering_name(clusters.ordering)}};
    timings["clustering_ms"] = ms_since(t2);

    // language model
    auto t3 = std::chrono::steady_clock::now();
    TrigramModel lm = cfg.lm_path.empty() ? train_lm_on(set)
                                          : parse_arpa_file(cfg.lm_path);
    report["lm"] = {{"source", cfg.lm_path.empty() ? "trained-on-input" : cfg.lm_path},
                    {"vocab", lm.unigrams.size()}};
    timings["lm_ms"] = ms_since(t3);

    // per-cluster generation and scoring
    auto t4 = std::chrono::steady_clock::now();
    std::vector<std::vector<Candidate>> groups;
    std::vector<std::vector<std::string>> texts;
    std::vector<std::vector<nlohmann::json>> path_info;
    nlohmann::json cluster_report = nlohmann::json::array();

    for (const Cluster& c : clusters.clusters) {
        WordGraph graph = build_graph(c);
        std::vector<GraphPath> raw = k_shortest_paths(graph, cfg.pathgen);
        std::size_t raw_count = raw.size();
        std::vector<GraphPath> paths =
            filter_paths(std::move(raw), graph, c, set.idf, cfg.pathgen);

        TextRankScores tr = textrank_words(c, cfg.power);
        std::vector<Candidate> group;
        std::vector<std::string> group_texts;
        std::vector<nlohmann::json> infos;
        for (const GraphPath& p : paths) {
            double info = informativeness(p, graph, tr);
            double lq = linguistic_quality(lm, path_words(p, graph));
            Candidate cand;
            cand.utility = path_utility(info, lq, p.token_count);
            cand.vector = path_vector(p, graph, set.idf);
            group.push_back(std::move(cand));
            group_texts.push_back(p.text);
            infos.push_back({{"I", info},
                             {"LQ", lq},
                             {"T", p.token_count},
                             {"cost", p.cost}});
        }
        cluster_report.push_back({{"cluster_id", c.cluster_id},
                                  {"order_rank", c.order_rank},
                                  {"members", c.members.size()},
                                  {"raw_paths", raw_count},
                                  {"filtered_paths", paths.size()}});
        groups.push_back(std::move(group));
        texts.push_back(std::move(group_texts));
        path_info.push_back(std::move(infos));
    }
    report["per_cluster"] = cluster_report;
    timings["generation_ms"] = ms_since(t4);

    bool any_candidate = false;
    for (const auto& g : groups)
        if (!g.empty()) any_candidate = true;
    if (!any_candidate)
        throw PipelineFailure(PipelineErrorCode::NoCandidatePaths, "wordgraph",
                              "no candidate path survived filtering");

    // selection
    auto t5 = std::chrono::steady_clock::now();
    SelectionProblem problem =
        build_problem(std::move(groups), cfg.redundancy_threshold);
    SelectionSolution sol = solve_exact(problem, cfg.bb_node_budget);
    report["ilp"] = {{"objective", sol.objective},
                     {"optimal", sol.optimal},
                     {"nodes_explored", sol.nodes_explored},
                     {"conflicts", problem.conflicts.size()}};
    timings["ilp_ms"] = ms_since(t5);

    if (!cfg.dump_ilp_path.empty()) {
        nlohmann::json dump;
        dump["groups"] = nlohmann::json::array();
        for (const auto& g : problem.groups) {
            nlohmann::json utils = nlohmann::json::array();
            for (const auto& cand : g) utils.push_back(cand.utility);
            dump["groups"].push_back(utils);
        }
        dump["conflicts"] = nlohmann::json::array();
        for (const auto& [a, b] : problem.conflicts)
            dump["conflicts"].push_back({a.first, a.second, b.first, b.second});
        dump["chosen"] = nlohmann::json::array();
        for (const auto& c : sol.chosen)
            dump["chosen"].push_back(c ? nlohmann::json(*c) : nlohmann::json());
        dump["objective"] = sol.objective;
        std::ofstream out(cfg.dump_ilp_path);
        out << dump.dump(2) << "\n";
    }

    PipelineResult result;
    result.summary = assemble_summary(sol, clusters, texts);

    nlohmann::json selected = nlohmann::json::array();
    for (std::size_t j = 0; j < clusters.clusters.size(); ++j) {
        if (j >= sol.chosen.size() || !sol.chosen[j]) continue;
        int i = *sol.chosen[j];
        nlohmann::json entry = path_info[j][i];
        entry["cluster_id"] = clusters.clusters[j].cluster_id;
        entry["path_index"] = i;
        entry["utility"] = problem.groups[j][i].utility;
        entry["text"] = texts[j][i];
        selected.push_back(std::move(entry));
    }
    report["selected"] = selected;
    report["timings"] = timings;
    result.report = std::move(report);
    return result;
}

}  // namespace ilpsumm
