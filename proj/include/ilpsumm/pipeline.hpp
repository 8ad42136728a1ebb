#ifndef ILPSUMM_PIPELINE_HPP_
#define ILPSUMM_PIPELINE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilpsumm/clustering.hpp"
#include "ilpsumm/ilpselect.hpp"
#include "ilpsumm/importance.hpp"
#include "ilpsumm/lm.hpp"
#include "ilpsumm/text.hpp"
#include "ilpsumm/wordgraph.hpp"

#include "json.hpp"

namespace ilpsumm {

struct PipelineConfig {
    std::string input_dir;
    std::string output_path;   // empty: stdout only
    std::string report_path;   // empty: no report file
    std::string lm_path;       // empty: train on the input corpus
    std::string stopword_path; // empty: bundled list
    std::string dump_ilp_path; // empty: no dump

    ImportanceMethod importance = ImportanceMethod::DocSetSim;
    ClusterOrdering ordering = ClusterOrdering::Majority;
    double align_threshold = 0.5;
    double redundancy_threshold = 0.5;
    PathGenConfig pathgen;
    PowerIterationConfig power;
    std::int64_t bb_node_budget = 10'000'000;
};

// Exit codes; value 0 is success.
enum class PipelineErrorCode : int {
    TooFewDocuments = 2,
    NoRetainedClusters = 3,
    NoCandidatePaths = 4,
    EmptySelection = 5,
};

class PipelineFailure : public std::runtime_error {
public:
    PipelineFailure(PipelineErrorCode code, const std::string& stage,
                    const std::string& what)
        : std::runtime_error(stage + ": " + what), code_(code), stage_(stage) {}
    PipelineErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }
    const std::string& stage() const { return stage_; }

private:
    PipelineErrorCode code_;
    std::string stage_;
};

struct PipelineResult {
    std::vector<std::string> summary;  // one sentence per line
    nlohmann::json report;
};

// Plain-text files (*.txt, one document each) are segmented and tagged;
// *.tagged files hold pre-tokenized records
// `doc_id<TAB>sentence_index<TAB>surface_TAG surface_TAG ...` and bypass
// segmentation and tagging. Documents sort by doc_id.
DocumentSet load_corpus(const std::string& dir, const StopwordList& stopwords);

// Trains the fallback model on the corpus: lowercased non-punctuation
// token streams, one per sentence.
TrigramModel train_lm_on(const DocumentSet& set, double add_k = 0.1);

PipelineResult run_pipeline(const PipelineConfig& cfg);

// Chosen paths emitted in cluster order; throws on an all-skip solution.
std::vector<std::string> assemble_summary(
    const SelectionSolution& sol, const ClusterSet& clusters,
    const std::vector<std::vector<std::string>>& texts);

}  // namespace ilpsumm

#endif  // ILPSUMM_PIPELINE_HPP_
