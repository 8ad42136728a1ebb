#include "ilpsumm/ilpselect.hpp"

#include <algorithm>
#include <numeric>

namespace ilpsumm {

double path_utility(double informativeness, double linguistic_quality,
                    int token_count) {
    return informativeness * linguistic_quality / static_cast<double>(token_count);
}

SelectionProblem build_problem(std::vector<std::vector<Candidate>> groups,
                               double redundancy_threshold) {
    SelectionProblem p;
    p.groups = std::move(groups);
    const int m = static_cast<int>(p.groups.size());
    for (int j = 0; j < m; ++j) {
        for (int jp = j + 1; jp < m; ++jp) {
            for (int i = 0; i < static_cast<int>(p.groups[j].size()); ++i) {
                for (int ip = 0; ip < static_cast<int>(p.groups[jp].size()); ++ip) {
                    double sim =
                        cosine(p.groups[j][i].vector, p.groups[jp][ip].vector);
                    if (sim >= redundancy_threshold)
                        p.conflicts.insert({{j, i}, {jp, ip}});
                }
            }
        }
    }
    return p;
}

namespace {

struct Solver {
    const SelectionProblem& p;
    std::int64_t node_budget;
    std::int64_t nodes = 0;
    bool budget_hit = false;

    // candidate order per group: descending utility, then lower index
    std::vector<std::vector<int>> order;

    std::vector<std::optional<int>> current;
    std::vector<std::optional<int>> best_chosen;
    double best_value = 0.0;

    explicit Solver(const SelectionProblem& prob, std::int64_t budget)
        : p(prob), node_budget(budget) {
        const int m = static_cast<int>(p.groups.size());
        order.resize(m);
        for (int j = 0; j < m; ++j) {
            order[j].resize(p.groups[j].size());
            std::iota(order[j].begin(), order[j].end(), 0);
            std::stable_sort(order[j].begin(), order[j].end(), [&](int a, int b) {
                return p.groups[j][a].utility > p.groups[j][b].utility;
            });
        }
        current.assign(m, std::nullopt);
        best_chosen = current;
    }

    bool feasible_with_current(int group, int cand) const {
        VarId v{group, cand};
        for (int j = 0; j < group; ++j) {
            if (!current[j]) continue;
            if (p.conflicting({j, *current[j]}, v)) return false;
        }
        return true;
    }

    // optimistic completion: per remaining group, the best candidate not
    // conflicting with anything already chosen
    double bound_from(int group) const {
        double b = 0.0;
        for (int j = group; j < static_cast<int>(p.groups.size()); ++j) {
            double best = 0.0;
            for (int i = 0; i < static_cast<int>(p.groups[j].size()); ++i) {
                if (p.groups[j][i].utility <= best) continue;
                if (feasible_with_current(j, i)) best = p.groups[j][i].utility;
            }
            b += best;
        }
        return b;
    }

    void dfs(int group, double value) {
        if (++nodes > node_budget) {
            budget_hit = true;
            return;
        }
        if (group == static_cast<int>(p.groups.size())) {
            if (value > best_value) {
                best_value = value;
                best_chosen = current;
            }
            return;
        }
        if (value + bound_from(group) <= best_value && best_value > 0.0) return;

        for (int i : order[group]) {
            if (budget_hit) return;
            if (!feasible_with_current(group, i)) continue;
            current[group] = i;
            dfs(group + 1, value + p.groups[group][i].utility);
            current[group] = std::nullopt;
        }
        if (!budget_hit) dfs(group + 1, value);
    }
};

}  // namespace

SelectionSolution solve_exact(const SelectionProblem& p, std::int64_t node_budget) {
    Solver solver(p, node_budget);
    if (!p.groups.empty()) solver.dfs(0, 0.0);

    SelectionSolution sol;
    sol.chosen = solver.best_chosen;
    sol.chosen.resize(p.groups.size());
    sol.objective = solver.best_value;
    sol.optimal = !solver.budget_hit;
    sol.nodes_explored = solver.nodes;
    return sol;
}

bool is_feasible(const SelectionProblem& p, const SelectionSolution& s) {
    if (s.chosen.size() != p.groups.size()) return false;
    std::vector<VarId> picked;
    for (int j = 0; j < static_cast<int>(s.chosen.size()); ++j) {
        if (!s.chosen[j]) continue;
        int i = *s.chosen[j];
        if (i < 0 || i >= static_cast<int>(p.groups[j].size())) return false;
        picked.push_back({j, i});
    }
    for (std::size_t a = 0; a < picked.size(); ++a)
        for (std::size_t b = a + 1; b < picked.size(); ++b)
            if (p.conflicting(picked[a], picked[b])) return false;
    return true;
}

}  // namespace ilpsumm
