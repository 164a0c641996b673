#include "mendlab/mender.hpp"

#include <algorithm>
#include <deque>

#include "mendlab/errors.hpp"

namespace mendlab {

namespace {

// Distances from a source set, capped at `limit`; -1 = farther than limit.
std::vector<int> multi_source_distances(const Graph& g, const std::vector<int>& sources,
                                        int limit) {
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue;
    for (int s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == limit) continue;
        for (const Graph::Edge& e : g.neighbors(u)) {
            if (dist[e.to] < 0) {
                dist[e.to] = dist[u] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return dist;
}

}  // namespace

struct MendOracle::Plan {
    const RelabelTask* task = nullptr;
    std::vector<std::vector<int>> values;  // per depth, in try order
    // Verdicts that become final once the candidate at this depth is set.
    // `pure` marks checks evaluated without blank forgiveness: sound only
    // because no blank can survive in that ball, so the verdict depends on
    // labels within the problem's label radius alone and far-away candidates
    // that are still unassigned can be masked with a dummy label.
    struct Check {
        int node;
        bool pure;
    };
    std::vector<std::vector<Check>> checks_at;
    const std::function<bool(const std::vector<int>&)>* visit = nullptr;
    std::vector<int> result;
    long long visited = 0;
};

MendOracle::MendOracle(const LclProblem& p, const Graph& g)
    : p_(p), g_(g), cache_(g, p.radius) {}

Verdict MendOracle::check(const std::vector<int>& work, int v) {
    ++stats_.verifier_calls;
    if (budget_ >= 0 && stats_.verifier_calls > budget_)
        throw BudgetExceeded(stats_.verifier_calls, "verifier-call budget exhausted");
    return relaxed_verify_cached(p_, cache_, work, v);
}

Verdict MendOracle::check_pure(const std::vector<int>& work, int v) {
    ++stats_.verifier_calls;
    if (budget_ >= 0 && stats_.verifier_calls > budget_)
        throw BudgetExceeded(stats_.verifier_calls, "verifier-call budget exhausted");
    const BallTemplate& ball = cache_.get(v);
    thread_local std::vector<int> buf;
    buf.resize(ball.size());
    for (int i = 0; i < ball.size(); ++i) {
        int l = work[ball.nodes[i]];
        buf[i] = l == kBlank ? 0 : l;
    }
    LocalView view{&ball, buf.data()};
    return p_.verifier(view) ? Verdict::Happy : Verdict::Unhappy;
}

bool MendOracle::accepts_all(const PartialLabeling& lam) {
    if (lam.size() != g_.size()) throw PreconditionError("labeling size mismatch");
    for (int v = 0; v < g_.size(); ++v)
        if (check(lam.labels, v) == Verdict::Unhappy) return false;
    return true;
}

// Returns false when no accepted assignment can exist (a candidate has an
// empty value list, or a verdict no assignment can influence is unhappy).
bool MendOracle::build_plan(const PartialLabeling& lam, const RelabelTask& task, Plan& plan,
                            std::vector<int>& work) {
    const int n = static_cast<int>(task.candidates.size());
    if (lam.size() != g_.size()) throw PreconditionError("labeling size mismatch");
    if (static_cast<int>(task.must_fill.size()) != n ||
        static_cast<int>(task.may_blank.size()) != n)
        throw InvalidParams("relabel task vectors must parallel the candidates");

    std::vector<int> pos(g_.size(), -1);
    for (int i = 0; i < n; ++i) {
        int x = task.candidates[i];
        if (x < 0 || x >= g_.size() || pos[x] >= 0)
            throw InvalidParams("candidates must be distinct nodes");
        pos[x] = i;
    }

    // Nodes that may still be blank in a completed assignment.
    std::vector<char> may_hold_blank(g_.size(), 0);
    for (int u = 0; u < g_.size(); ++u) {
        if (pos[u] < 0)
            may_hold_blank[u] = lam[u] == kBlank;
        else
            may_hold_blank[u] = (lam[u] == kBlank && !task.must_fill[pos[u]]) ||
                                task.may_blank[pos[u]];
    }

    const int r = p_.radius;
    const int lr = p_.effective_label_radius();
    std::vector<int> cand_dist = multi_source_distances(g_, task.candidates, r);

    plan.task = &task;
    plan.checks_at.assign(n, {});
    work = lam.labels;
    for (int w = 0; w < g_.size(); ++w) {
        if (cand_dist[w] < 0 || cand_dist[w] > r) continue;
        const BallTemplate& ball = cache_.get(w);
        bool blank_free = true;
        for (int u : ball.nodes)
            if (may_hold_blank[u]) {
                blank_free = false;
                break;
            }
        bool pure = blank_free && lr < r;
        int trigger = -1;
        for (int i = 0; i < ball.size(); ++i) {
            if (pure && ball.dist[i] > lr) continue;
            int u = ball.nodes[i];
            if (pos[u] >= 0) trigger = std::max(trigger, pos[u]);
        }
        if (trigger < 0) {
            // No label this verdict depends on can change, so it is a
            // constant; unassigned candidates beyond the label radius are
            // masked exactly like in the per-depth pure checks.
            if (check_pure(work, w) == Verdict::Unhappy) return false;
        } else {
            plan.checks_at[trigger].push_back({w, pure});
        }
    }
    for (auto& checks : plan.checks_at)
        std::sort(checks.begin(), checks.end(),
                  [](const Plan::Check& a, const Plan::Check& b) { return a.node < b.node; });

    const int L = p_.label_count();
    plan.values.assign(n, {});
    for (int i = 0; i < n; ++i) {
        int x = task.candidates[i];
        std::vector<int> labels;
        bool filtered = false;
        if (task.use_candidate_filter && p_.candidate_filter) {
            // The filter ignores blank forgiveness, so apply it only when
            // x's own verdict cannot be forgiven by a surviving blank.
            const BallTemplate& ball = cache_.get(x);
            bool blank_free = true;
            for (int u : ball.nodes)
                if (may_hold_blank[u]) {
                    blank_free = false;
                    break;
                }
            if (blank_free) {
                labels = p_.candidate_filter(g_, x);
                std::sort(labels.begin(), labels.end());
                labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
                filtered = true;
            }
        }
        if (!filtered) {
            labels.resize(L);
            for (int l = 0; l < L; ++l) labels[l] = l;
        }
        std::vector<int>& vals = plan.values[i];
        if (lam[x] == kBlank && !task.must_fill[i]) vals.push_back(kBlank);
        vals.insert(vals.end(), labels.begin(), labels.end());
        if (lam[x] != kBlank && task.may_blank[i]) vals.push_back(kBlank);
        if (vals.empty()) return false;
    }
    return true;
}

// Returns true to stop the whole search (first hit, or the visitor asked).
bool MendOracle::dfs(Plan& plan, std::vector<int>& work, int depth) {
    const RelabelTask& task = *plan.task;
    if (depth == static_cast<int>(task.candidates.size())) {
        plan.result.clear();
        for (int x : task.candidates) plan.result.push_back(work[x]);
        ++plan.visited;
        if (!plan.visit) return true;
        return !(*plan.visit)(plan.result);
    }
    const int x = task.candidates[depth];
    const int saved = work[x];
    for (int val : plan.values[depth]) {
        ++stats_.assignments;
        work[x] = val;
        bool ok = true;
        for (const Plan::Check& c : plan.checks_at[depth]) {
            Verdict verdict = c.pure ? check_pure(work, c.node) : check(work, c.node);
            if (verdict == Verdict::Unhappy) {
                ok = false;
                break;
            }
        }
        if (ok && dfs(plan, work, depth + 1)) {
            work[x] = saved;
            return true;
        }
    }
    work[x] = saved;
    return false;
}

std::optional<std::vector<int>> MendOracle::search(const PartialLabeling& lam,
                                                   const RelabelTask& task) {
    Plan plan;
    std::vector<int> work;
    if (!build_plan(lam, task, plan, work)) return std::nullopt;
    if (task.candidates.empty()) return std::vector<int>{};
    if (!dfs(plan, work, 0)) return std::nullopt;
    return plan.result;
}

long long MendOracle::enumerate(const PartialLabeling& lam, const RelabelTask& task,
                                const std::function<bool(const std::vector<int>&)>& visit) {
    Plan plan;
    std::vector<int> work;
    if (!build_plan(lam, task, plan, work)) return 0;
    plan.visit = &visit;
    if (task.candidates.empty()) {
        visit({});
        return 1;
    }
    dfs(plan, work, 0);
    return plan.visited;
}

std::optional<Mend> MendOracle::find_mend(const PartialLabeling& lam, int v, int t_max,
                                          bool precheck) {
    if (v < 0 || v >= g_.size()) throw PreconditionError("node out of range");
    if (lam.size() != g_.size()) throw PreconditionError("labeling size mismatch");
    if (lam[v] != kBlank) throw PreconditionError("mend target is not blank");
    if (precheck && !accepts_all(lam))
        throw PreconditionError("relaxed verifier rejects the base labeling");

    std::vector<int> dist = g_.distances(v, t_max < 0 ? 0 : t_max);
    for (int t = 0; t <= t_max; ++t) {
        RelabelTask task;
        for (int u = 0; u < g_.size(); ++u)
            if (dist[u] >= 0 && dist[u] <= t) task.candidates.push_back(u);
        task.must_fill.assign(task.candidates.size(), 0);
        task.may_blank.assign(task.candidates.size(), 0);
        for (int i = 0; i < static_cast<int>(task.candidates.size()); ++i)
            if (task.candidates[i] == v) task.must_fill[i] = 1;
        auto hit = search(lam, task);
        if (!hit) continue;
        Mend mend;
        mend.center = v;
        for (int i = 0; i < static_cast<int>(task.candidates.size()); ++i) {
            int u = task.candidates[i];
            if ((*hit)[i] != lam[u]) {
                mend.changes[u] = (*hit)[i];
                mend.radius = std::max(mend.radius, dist[u]);
            }
        }
        if (mend.changes.empty() || mend.radius != t)
            throw InternalError("a smaller mend slipped past the radius-major search");
        return mend;
    }
    return std::nullopt;
}

int MendOracle::mend_radius_at(const PartialLabeling& lam, int v, bool precheck) {
    int reach = g_.eccentricity(v);
    auto mend = find_mend(lam, v, reach, precheck);
    if (!mend)
        throw UnsolvableInstance(v, "no mend of any radius exists at node " + std::to_string(v));
    return mend->radius;
}

std::optional<Mend> find_mend(const LclProblem& p, const Graph& g, const PartialLabeling& lam,
                              int v, int t_max) {
    MendOracle oracle(p, g);
    return oracle.find_mend(lam, v, t_max);
}

int mend_radius_at(const LclProblem& p, const Graph& g, const PartialLabeling& lam, int v) {
    MendOracle oracle(p, g);
    return oracle.mend_radius_at(lam, v);
}

}  // namespace mendlab
