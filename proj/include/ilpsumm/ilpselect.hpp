#ifndef ILPSUMM_ILPSELECT_HPP_
#define ILPSUMM_ILPSELECT_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ilpsumm/text.hpp"

namespace ilpsumm {

// One fused sentence candidate entering the selection problem.
struct Candidate {
    double utility = 0.0;  // I * LQ / T
    SparseVec vector;      // tf-idf over stemmed non-stopword path tokens
};

using VarId = std::pair<int, int>;  // (group, candidate index)

// Binary selection instance: at most one candidate per group, no two
// conflicting candidates across groups.
struct SelectionProblem {
    std::vector<std::vector<Candidate>> groups;
    std::set<std::pair<VarId, VarId>> conflicts;  // cross-group only

    bool conflicting(VarId a, VarId b) const {
        return conflicts.count({a, b}) > 0 || conflicts.count({b, a}) > 0;
    }
};

struct SelectionSolution {
    // chosen[j] = candidate index in group j, or nullopt when skipped
    std::vector<std::optional<int>> chosen;
    double objective = 0.0;
    bool optimal = true;
    std::int64_t nodes_explored = 0;
};

// Utility of a path per the objective: informativeness times linguistic
// quality, weighted toward shorter paths.
double path_utility(double informativeness, double linguistic_quality,
                    int token_count);

// Conflict pairs connect candidates from different groups whose cosine
// reaches the redundancy threshold.
SelectionProblem build_problem(std::vector<std::vector<Candidate>> groups,
                               double redundancy_threshold = 0.5);

// Exact best-first branch and bound. Bound adds each remaining group's
// best still-feasible utility; ties break toward the earlier cluster,
// then the lower candidate index. node_budget caps the search; on
// exhaustion the incumbent comes back with optimal = false.
SelectionSolution solve_exact(const SelectionProblem& p,
                              std::int64_t node_budget = 10'000'000);

// Independent check of the one-per-group and conflict constraints.
bool is_feasible(const SelectionProblem& p, const SelectionSolution& s);

}  // namespace ilpsumm

#endif  // ILPSUMM_ILPSELECT_HPP_
