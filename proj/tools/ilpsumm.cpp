#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ilpsumm/pipeline.hpp"
#include "ilpsumm/rouge.hpp"
#include "ilpsumm/scoring.hpp"

namespace fs = std::filesystem;
using namespace ilpsumm;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TruncationMode parse_truncation(const std::string& spec, int& byte_limit,
                                int& word_limit) {
    if (spec == "none") return TruncationMode::None;
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    if (kind == "bytes") {
        if (colon != std::string::npos) byte_limit = std::stoi(spec.substr(colon + 1));
        return TruncationMode::Bytes;
    }
    if (kind == "words") {
        if (colon != std::string::npos) word_limit = std::stoi(spec.substr(colon + 1));
        return TruncationMode::Words;
    }
    throw CLI::ValidationError("--truncate expects bytes:N, words:N or none");
}

void add_pipeline_options(CLI::App* cmd, PipelineConfig& cfg,
                          std::string& importance, std::string& ordering) {
    cmd->add_option("-i,--input", cfg.input_dir, "Document set directory")
        ->required()
        ->envname("ILPSUMM_INPUT");
    cmd->add_option("--importance", importance,
                    "Document importance method: lexrank|cossim|docsetsim")
        ->default_val("docsetsim")
        ->envname("ILPSUMM_IMPORTANCE");
    cmd->add_option("--ordering", ordering, "Cluster ordering: mo|apo")
        ->default_val("mo")
        ->envname("ILPSUMM_ORDERING");
    cmd->add_option("--align-threshold", cfg.align_threshold,
                    "Sentence alignment similarity threshold")
        ->envname("ILPSUMM_ALIGN_THRESHOLD");
    cmd->add_option("--k-paths", cfg.pathgen.k_max, "Path cap per cluster")
        ->envname("ILPSUMM_K_PATHS");
    cmd->add_option("--min-path-len", cfg.pathgen.min_path_len,
                    "Minimum fused sentence length in words")
        ->envname("ILPSUMM_MIN_PATH_LEN");
    cmd->add_option("--dedupe-threshold", cfg.pathgen.dedupe_threshold,
                    "Drop paths this similar to an input sentence")
        ->envname("ILPSUMM_DEDUPE_THRESHOLD");
    cmd->add_option("--redundancy-threshold", cfg.redundancy_threshold,
                    "Cross-cluster conflict similarity threshold")
        ->envname("ILPSUMM_REDUNDANCY_THRESHOLD");
    cmd->add_option("--seed", cfg.pathgen.rng_seed, "RNG seed for path sampling")
        ->envname("ILPSUMM_SEED");
    cmd->add_option("--bb-node-budget", cfg.bb_node_budget,
                    "Branch-and-bound node budget")
        ->envname("ILPSUMM_BB_NODE_BUDGET");
    cmd->add_option("--lm", cfg.lm_path,
                    "ARPA trigram model (default: train on the input)")
        ->envname("ILPSUMM_LM");
    cmd->add_option("--stopwords", cfg.stopword_path, "Stopword list file")
        ->envname("ILPSUMM_STOPWORDS");
}

int cmd_summarize(const PipelineConfig& cfg) {
    PipelineResult result = run_pipeline(cfg);
    std::ostringstream body;
    for (const std::string& line : result.summary) body << line << "\n";
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        out << body.str();
    }
    std::cout << body.str();
    if (!cfg.report_path.empty()) {
        std::ofstream rep(cfg.report_path);
        rep << result.report.dump(2) << "\n";
    }
    return 0;
}

int cmd_evaluate(const std::string& summary_path, const std::string& refs_dir,
                 const std::vector<std::string>& variants,
                 const std::string& truncate_spec, bool stemming,
                 const std::string& json_path) {
    RougeConfig cfg;
    cfg.stemming = stemming;
    cfg.truncation = parse_truncation(truncate_spec, cfg.byte_limit, cfg.word_limit);

    std::string candidate = read_file(summary_path);
    std::vector<std::string> references;
    std::vector<fs::path> files;
    if (!fs::is_directory(refs_dir))
        throw std::runtime_error("references dir not found: " + refs_dir);
    for (const auto& e : fs::directory_iterator(refs_dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) references.push_back(read_file(f.string()));
    if (references.empty())
        throw std::runtime_error("no reference files in " + refs_dir);

    nlohmann::json out;
    for (const std::string& v : variants) {
        RougeScore s;
        if (v == "2") s = rouge_n(candidate, references, 2, cfg);
        else if (v == "1") s = rouge_n(candidate, references, 1, cfg);
        else if (v == "L" || v == "l") s = rouge_l(candidate, references, cfg);
        else if (v == "SU4" || v == "su4") s = rouge_su4(candidate, references, cfg);
        else throw CLI::ValidationError("--rouge expects 1, 2, L or SU4");
        std::printf("%-10s recall %.5f  precision %.5f  f1 %.5f\n",
                    s.variant.c_str(), s.recall, s.precision, s.f1);
        out[s.variant] = {{"recall", s.recall},
                          {"precision", s.precision},
                          {"f1", s.f1}};
    }
    if (!json_path.empty()) {
        std::ofstream js(json_path);
        js << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_train_lm(const std::string& corpus_dir, const std::string& out_path,
                 double add_k) {
    StopwordList stopwords;
    DocumentSet set = load_corpus(corpus_dir, stopwords);
    TrigramModel model = train_lm_on(set, add_k);
    serialize_arpa_file(model, out_path);
    std::cout << "wrote " << out_path << " (vocab " << model.unigrams.size()
              << ", bigrams " << model.bigrams.size() << ", trigrams "
              << model.trigrams.size() << ")\n";
    return 0;
}

int cmd_dump_graph(const PipelineConfig& cfg, int cluster_rank,
                   const std::string& out_path) {
    StopwordList stopwords = cfg.stopword_path.empty()
                                 ? StopwordList()
                                 : StopwordList::from_file(cfg.stopword_path);
    DocumentSet set = load_corpus(cfg.input_dir, stopwords);
    if (set.documents.size() < 2)
        throw PipelineFailure(PipelineErrorCode::TooFewDocuments, "load",
                              "need >= 2 documents");
    ImportanceScores imp = compute_importance(set, cfg.importance, cfg.power);
    std::vector<Cluster> kept = retain_clusters(
        build_clusters(set, imp.chosen, cfg.align_threshold),
        static_cast<int>(set.documents.size()));
    if (kept.empty())
        throw PipelineFailure(PipelineErrorCode::NoRetainedClusters, "clustering",
                              "no well-supported cluster");
    ClusterSet clusters = order_clusters(std::move(kept), cfg.ordering);
    if (cluster_rank < 0 || cluster_rank >= static_cast<int>(clusters.clusters.size()))
        throw std::runtime_error("cluster rank out of range, have " +
                                 std::to_string(clusters.clusters.size()));
    WordGraph g = build_graph(clusters.clusters[cluster_rank]);
    std::string dot = to_dot(g);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        out << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-document abstractive summarizer"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file (key=value, one per line)");
    app.allow_config_extras(true);

    PipelineConfig cfg;
    std::string importance, ordering;

    auto* summarize = app.add_subcommand("summarize", "Generate a summary");
    add_pipeline_options(summarize, cfg, importance, ordering);
    summarize->add_option("-o,--output", cfg.output_path, "Summary output file");
    summarize->add_option("--report", cfg.report_path, "JSON diagnostics report");
    summarize->add_option("--dump-ilp", cfg.dump_ilp_path,
                          "Dump the selection problem and solution as JSON");

    auto* evaluate = app.add_subcommand("evaluate", "Score a summary with ROUGE");
    std::string summary_path, refs_dir, truncate_spec = "none", json_path;
    std::vector<std::string> variants{"2", "L", "SU4"};
    bool stemming = true;
    evaluate->add_option("-s,--summary", summary_path, "Summary file")->required();
    evaluate->add_option("-r,--references", refs_dir, "Reference summaries directory")
        ->required();
    evaluate->add_option("--rouge", variants, "Variants: 1, 2, L, SU4");
    evaluate->add_option("--truncate", truncate_spec,
                         "bytes:665, words:250 or none");
    evaluate->add_flag("--stemming,!--no-stemming", stemming, "Porter stemming");
    evaluate->add_option("--json", json_path, "Write scores as JSON");

    auto* train = app.add_subcommand("train-lm", "Train an ARPA trigram model");
    std::string corpus_dir, lm_out;
    double add_k = 0.1;
    train->add_option("-c,--corpus", corpus_dir, "Corpus directory")->required();
    train->add_option("-o,--output", lm_out, "Output ARPA file")->required();
    train->add_option("--add-k", add_k, "Add-k smoothing constant");

    auto* dump = app.add_subcommand("dump-graph", "Emit a cluster word-graph as DOT");
    add_pipeline_options(dump, cfg, importance, ordering);
    int cluster_rank = 0;
    std::string dot_out;
    dump->add_option("--cluster", cluster_rank, "Cluster rank to dump");
    dump->add_option("-o,--output", dot_out, "DOT output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!importance.empty()) cfg.importance = importance_method_from_name(importance);
        if (!ordering.empty()) cfg.ordering = ordering_from_name(ordering);
        if (summarize->parsed()) return cmd_summarize(cfg);
        if (evaluate->parsed())
            return cmd_evaluate(summary_path, refs_dir, variants, truncate_spec,
                                stemming, json_path);
        if (train->parsed()) return cmd_train_lm(corpus_dir, lm_out, add_k);
        if (dump->parsed()) return cmd_dump_graph(cfg, cluster_rank, dot_out);
    } catch (const PipelineFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
