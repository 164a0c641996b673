// Exhaustive mend oracle.
//
// The core is a backtracking search over relabelings of a candidate node set.
// Verdicts are re-checked as soon as the last relevant candidate is assigned
// (trigger scheduling), which prunes most of the search space.  find_mend runs
// the search radius-major, so the first hit is the minimal-radius mend, and
// depth-first assignment in (node id, label order) makes it lexicographically
// first among mends of that radius.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mendlab/graph.hpp"
#include "mendlab/labeling.hpp"
#include "mendlab/problem.hpp"
#include "mendlab/view.hpp"

namespace mendlab {

struct SearchStats {
    long long verifier_calls = 0;
    long long assignments = 0;
};

// One relabeling search: which nodes may change, and how.
// Vectors are parallel to `candidates`.
struct RelabelTask {
    std::vector<int> candidates;  // assignment order
    std::vector<char> must_fill;  // node must end up non-blank
    std::vector<char> may_blank;  // blank offered as a value for labeled nodes
    bool use_candidate_filter = true;
};

class MendOracle {
public:
    MendOracle(const LclProblem& p, const Graph& g);

    // First full assignment of the candidates (values parallel to
    // task.candidates, kBlank allowed) for which every affected verdict stays
    // happy, in candidate-then-value order; nullopt when the space is
    // exhausted.  Unlabeled non-must-fill candidates offer blank first
    // (holes stay holes unless a label is needed); labeled may_blank
    // candidates offer blank last.
    std::optional<std::vector<int>> search(const PartialLabeling& lam, const RelabelTask& task);

    // Every accepted completed assignment, in the order search() explores
    // them; visit returning false stops early.  Returns the number of
    // assignments visited.
    long long enumerate(const PartialLabeling& lam, const RelabelTask& task,
                        const std::function<bool(const std::vector<int>&)>& visit);

    // Minimal-radius mend within t_max, lexicographically first by
    // (node id, label order); nullopt if none exists.
    std::optional<Mend> find_mend(const PartialLabeling& lam, int v, int t_max,
                                  bool precheck = true);

    // Minimal t admitting a t-mend; throws UnsolvableInstance after the
    // whole component has been exhausted.
    int mend_radius_at(const PartialLabeling& lam, int v, bool precheck = true);

    // Verifier-call budget shared by all subsequent calls; -1 = unlimited.
    // Exceeding it throws BudgetExceeded.
    void set_budget(long long max_verifier_calls) { budget_ = max_verifier_calls; }

    const SearchStats& stats() const { return stats_; }
    const LclProblem& problem() const { return p_; }
    const Graph& graph() const { return g_; }

    // True when the relaxed verifier accepts lam everywhere (same verdicts
    // as accepts(), but reusing this oracle's cached balls).
    bool accepts_all(const PartialLabeling& lam);

private:
    struct Plan;
    bool build_plan(const PartialLabeling& lam, const RelabelTask& task, Plan& plan,
                    std::vector<int>& work);
    bool dfs(Plan& plan, std::vector<int>& work, int depth);
    Verdict check(const std::vector<int>& work, int v);
    Verdict check_pure(const std::vector<int>& work, int v);

    const LclProblem& p_;
    const Graph& g_;
    BallCache cache_;        // radius-r balls for verdicts
    long long budget_ = -1;
    SearchStats stats_;
};

// Convenience wrappers constructing a transient oracle.
std::optional<Mend> find_mend(const LclProblem& p, const Graph& g, const PartialLabeling& lam,
                              int v, int t_max);
int mend_radius_at(const LclProblem& p, const Graph& g, const PartialLabeling& lam, int v);

}  // namespace mendlab
