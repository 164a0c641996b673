#include "mendlab/diagram.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "mendlab/errors.hpp"
#include "mendlab/mender.hpp"

namespace mendlab {

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::pair<int, int>> sorted_unique_pairs(std::vector<std::pair<int, int>> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool swap_closed(const std::vector<std::pair<int, int>>& pairs) {
    std::set<std::pair<int, int>> set(pairs.begin(), pairs.end());
    for (auto& [a, b] : pairs)
        if (!set.count({b, a})) return false;
    return true;
}

// Strongly connected components in ascending order of their smallest state.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<std::vector<int>> pred(n);
    for (int s = 0; s < n; ++s)
        for (int t : succ[s]) pred[t].push_back(s);

    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // Iterative DFS recording finish order.
        std::vector<std::pair<int, int>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < static_cast<int>(succ[u].size())) {
                int t = succ[u][i++];
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back({t, 0});
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    int groups = 0;
    for (int i = n - 1; i >= 0; --i) {
        int s = order[i];
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = groups;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int t : pred[u])
                if (comp[t] < 0) {
                    comp[t] = groups;
                    stack.push_back(t);
                }
        }
        ++groups;
    }
    // Renumber so component ids ascend with their smallest member state.
    std::vector<int> smallest(groups, n);
    for (int s = 0; s < n; ++s) smallest[comp[s]] = std::min(smallest[comp[s]], s);
    std::vector<int> by_min(groups);
    std::iota(by_min.begin(), by_min.end(), 0);
    std::sort(by_min.begin(), by_min.end(),
              [&](int a, int b) { return smallest[a] < smallest[b]; });
    std::vector<int> renum(groups);
    for (int i = 0; i < groups; ++i) renum[by_min[i]] = i;
    for (int s = 0; s < n; ++s) comp[s] = renum[comp[s]];
    return comp;
}

// Reachability between state sets (along successor edges).
std::vector<char> forward_reach(const std::vector<std::vector<int>>& succ,
                                const std::vector<int>& sources) {
    std::vector<char> seen(succ.size(), 0);
    std::vector<int> stack;
    for (int s : sources)
        if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int t : succ[u])
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
    }
    return seen;
}

}  // namespace

int Diagram::state_index(int a, int b) const {
    auto it = std::lower_bound(states.begin(), states.end(), std::pair<int, int>{a, b});
    if (it == states.end() || *it != std::pair<int, int>{a, b}) return -1;
    return static_cast<int>(it - states.begin());
}

bool Diagram::has_transition(int s, int t) const {
    return contains(transitions.at(s), t);
}

bool Diagram::is_start(int s) const { return contains(start_labels, states.at(s).first); }

bool Diagram::is_end(int s) const { return contains(end_labels, states.at(s).second); }

std::string Diagram::state_name(int s) const {
    return "(" + alphabet.at(states.at(s).first) + "," + alphabet.at(states.at(s).second) + ")";
}

Diagram build_diagram(const std::vector<std::string>& alphabet, const PathSpec& spec) {
    const int L = static_cast<int>(alphabet.size());
    auto check = [&](int l) {
        if (l < 0 || l >= L) throw InvalidParams("label id out of range in path spec");
    };
    for (auto& [a, b] : spec.edge_pairs) check(a), check(b);
    for (auto& [a, b] : spec.node_pairs) check(a), check(b);
    for (int l : spec.start_labels) check(l);
    for (int l : spec.end_labels) check(l);

    Diagram d;
    d.alphabet = alphabet;
    d.states = sorted_unique_pairs(spec.edge_pairs);
    d.start_labels = sorted_unique(spec.start_labels);
    d.end_labels = sorted_unique(spec.end_labels);

    std::set<std::pair<int, int>> node_ok(spec.node_pairs.begin(), spec.node_pairs.end());
    d.transitions.assign(d.states.size(), {});
    for (int s = 0; s < static_cast<int>(d.states.size()); ++s)
        for (int t = 0; t < static_cast<int>(d.states.size()); ++t)
            if (node_ok.count({d.states[s].second, d.states[t].first}))
                d.transitions[s].push_back(t);

    d.symmetric = d.start_labels == d.end_labels && swap_closed(d.states) &&
                  swap_closed(sorted_unique_pairs(spec.node_pairs));
    return d;
}

Classification classify_states(const Diagram& d) {
    const int n = static_cast<int>(d.states.size());
    Classification out;
    out.states.assign(n, {});
    out.ell_max = n * n + 2 * n;
    if (n == 0) return out;

    std::vector<int> comp = scc_ids(d.transitions);
    for (int s = 0; s < n; ++s) out.states[s].scc_id = comp[s];

    // Per source state: which exact walk lengths reach it back (closed) and
    // reach its swapped partner, up to the horizon.
    std::vector<std::vector<char>> closed(n), mirror(n);
    for (int s = 0; s < n; ++s) {
        closed[s].assign(out.ell_max + 1, 0);
        mirror[s].assign(out.ell_max + 1, 0);
        int sw = d.swapped(s);
        std::vector<char> cur(n, 0), next(n, 0);
        cur[s] = 1;
        closed[s][0] = 1;
        if (sw == s) mirror[s][0] = 1;
        for (int len = 1; len <= out.ell_max; ++len) {
            std::fill(next.begin(), next.end(), 0);
            for (int u = 0; u < n; ++u)
                if (cur[u])
                    for (int t : d.transitions[u]) next[t] = 1;
            std::swap(cur, next);
            closed[s][len] = cur[s];
            if (sw >= 0) mirror[s][len] = cur[sw];
        }
    }

    for (int s = 0; s < n; ++s) {
        StateClass& c = out.states[s];
        int min_closed = -1, gcd = 0;
        for (int len = 1; len <= out.ell_max; ++len)
            if (closed[s][len]) {
                if (min_closed < 0) min_closed = len;
                gcd = std::gcd(gcd, len);
            }
        c.repeatable = min_closed > 0;
        c.loop = closed[s][1] != 0;
        if (c.repeatable && gcd == 1) {
            // Tail of consecutive achievable lengths ending at the horizon.
            if (!closed[s][out.ell_max])
                throw InternalError("flexibility horizon too small for state " + d.state_name(s));
            int k = out.ell_max;
            while (k > 1 && closed[s][k - 1]) --k;
            // One full period inside the tail certifies every larger length.
            if (k + min_closed > out.ell_max)
                throw InternalError("flexibility tail shorter than the period at state " +
                                    d.state_name(s));
            c.flexible = true;
            c.flex_K = k;
        }
        int sw = d.swapped(s);
        if (sw == s) {
            c.mirror_flexible = c.flexible;
            c.mirror_K = c.flex_K;
        } else if (sw >= 0 && mirror[s][out.ell_max]) {
            int k = out.ell_max;
            while (k > 1 && mirror[s][k - 1]) --k;
            int period = -1;
            for (int len = 1; len <= out.ell_max; ++len)
                if (closed[s][len] || closed[sw][len]) {
                    period = len;
                    break;
                }
            if (period > 0 && k + period <= out.ell_max) {
                c.mirror_flexible = true;
                c.mirror_K = k;
            }
        }
    }
    return out;
}

Diagram restrict(const Diagram& d, RestrictMode mode) {
    const int n = static_cast<int>(d.states.size());
    const bool undirected = mode != RestrictMode::Directed;
    if (undirected && !d.symmetric)
        throw PreconditionError("undirected restriction needs a symmetric diagram");

    Classification cls = classify_states(d);
    bool any_flexible = false;
    for (auto& c : cls.states) any_flexible = any_flexible || c.flexible;
    if (!any_flexible) throw NotRestrictable("the diagram has no flexible state");

    // Candidate components: those containing a flexible state; undirected
    // modes additionally need the component closed under label swap.
    int groups = 0;
    for (auto& c : cls.states) groups = std::max(groups, c.scc_id + 1);
    std::vector<std::vector<int>> members(groups);
    for (int s = 0; s < n; ++s) members[cls.states[s].scc_id].push_back(s);
    std::vector<int> candidates;
    for (int g = 0; g < groups; ++g) {
        bool flexible = false, swapped_in = true;
        for (int s : members[g]) {
            flexible = flexible || cls.states[s].flexible;
            int sw = d.swapped(s);
            swapped_in = swapped_in && sw >= 0 && cls.states[sw].scc_id == g;
        }
        if (flexible && (!undirected || swapped_in)) candidates.push_back(g);
    }
    if (candidates.empty())
        throw NotRestrictable("no strongly connected component is swap-closed and flexible");

    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
        std::vector<std::pair<int, int>> pa, pb;
        for (int s : members[a]) pa.push_back(d.states[s]);
        for (int s : members[b]) pb.push_back(d.states[s]);
        return pa < pb;
    });
    const int chosen = candidates.front();
    std::vector<char> in_scc(n, 0);
    for (int s : members[chosen]) in_scc[s] = 1;

    // Non-repeatable attachment states: on a walk from a start state into the
    // component, or from the component to an end state (undirected paths).
    std::vector<char> keep = in_scc;
    int attachments = 0;
    if (mode == RestrictMode::UndirectedPath) {
        std::vector<std::vector<int>> pred(n);
        for (int s = 0; s < n; ++s)
            for (int t : d.transitions[s]) pred[t].push_back(s);
        std::vector<int> starts, ends;
        for (int s = 0; s < n; ++s) {
            if (d.is_start(s)) starts.push_back(s);
            if (d.is_end(s)) ends.push_back(s);
        }
        std::vector<char> from_start = forward_reach(d.transitions, starts);
        std::vector<char> to_end = forward_reach(pred, ends);
        std::vector<char> to_scc = forward_reach(pred, members[chosen]);
        std::vector<char> from_scc = forward_reach(d.transitions, members[chosen]);
        for (int s = 0; s < n; ++s) {
            if (in_scc[s] || cls.states[s].repeatable) continue;
            if ((from_start[s] && to_scc[s]) || (from_scc[s] && to_end[s])) {
                keep[s] = 1;
                ++attachments;
            }
        }
    }

    std::vector<int> kept;
    for (int s = 0; s < n; ++s)
        if (keep[s]) kept.push_back(s);

    // Bullet conditions on the kept set.
    {
        std::vector<std::vector<int>> undirected_adj(n);
        for (int s : kept)
            for (int t : d.transitions[s])
                if (keep[t]) {
                    undirected_adj[s].push_back(t);
                    undirected_adj[t].push_back(s);
                }
        std::vector<char> seen = forward_reach(undirected_adj, {kept.front()});
        for (int s : kept)
            if (!seen[s])
                throw NotRestrictable("kept states do not form a connected component");
        for (int s : kept)
            if (cls.states[s].repeatable && !in_scc[s])
                throw InternalError("a repeatable state escaped the chosen component");
        if (undirected)
            for (int s : kept) {
                int sw = d.swapped(s);
                if (sw < 0 || !keep[sw])
                    throw InternalError("kept states are not closed under label swap");
            }
    }

    Diagram out;
    out.alphabet = d.alphabet;
    std::vector<int> kept_labels;
    for (int s : kept) {
        out.states.push_back(d.states[s]);
        kept_labels.push_back(d.states[s].first);
        kept_labels.push_back(d.states[s].second);
    }
    kept_labels = sorted_unique(kept_labels);
    std::vector<int> new_index(n, -1);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) new_index[kept[i]] = i;
    out.transitions.assign(kept.size(), {});
    for (int s : kept)
        for (int t : d.transitions[s])
            if (keep[t]) out.transitions[new_index[s]].push_back(new_index[t]);
    for (int l : d.start_labels)
        if (contains(kept_labels, l)) out.start_labels.push_back(l);
    for (int l : d.end_labels)
        if (contains(kept_labels, l)) out.end_labels.push_back(l);
    out.symmetric = out.start_labels == out.end_labels && swap_closed(out.states);
    if (out.symmetric) {
        for (int s = 0; s < static_cast<int>(out.states.size()) && out.symmetric; ++s)
            for (int t : out.transitions[s]) {
                int ss = out.state_index(out.states[s].second, out.states[s].first);
                int ts = out.state_index(out.states[t].second, out.states[t].first);
                if (!out.has_transition(ts, ss)) {
                    out.symmetric = false;
                    break;
                }
            }
    }

    // Flexibility parameter: worst K among the kept component's states.
    int flex_k = -1;
    for (int s : members[chosen]) {
        if (!cls.states[s].flexible)
            throw InternalError("component state " + d.state_name(s) + " is not flexible");
        flex_k = std::max(flex_k, cls.states[s].flex_K);
    }
    out.flex_K = flex_k;

    // Segment-length slack: shortest walks between any two component states
    // must fit into the mended stretch, plus one hop per attachment state.
    int diameter = 0;
    for (int s : members[chosen]) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (int qi = 0; qi < static_cast<int>(queue.size()); ++qi) {
            int u = queue[qi];
            for (int t : d.transitions[u])
                if (in_scc[t] && dist[t] < 0) {
                    dist[t] = dist[u] + 1;
                    queue.push_back(t);
                }
        }
        for (int t : members[chosen]) diameter = std::max(diameter, dist[t]);
    }
    out.q = attachments + diameter;
    return out;
}

std::optional<std::vector<int>> walk(const Diagram& d, int from_state, int to_state, int length) {
    const int n = static_cast<int>(d.states.size());
    if (from_state < 0 || from_state >= n || to_state < 0 || to_state >= n)
        throw InvalidParams("walk endpoints must be diagram states");
    if (length < 0) throw InvalidParams("walk length must be non-negative");
    if (static_cast<long long>(length + 1) * std::max(n, 1) > 200'000'000LL)
        throw InvalidParams("walk length too large");

    // reach[len][s]: a walk of exactly `len` transitions from s to to_state.
    std::vector<std::vector<char>> reach(length + 1, std::vector<char>(n, 0));
    reach[0][to_state] = 1;
    for (int len = 1; len <= length; ++len)
        for (int s = 0; s < n; ++s) {
            for (int t : d.transitions[s])
                if (reach[len - 1][t]) {
                    reach[len][s] = 1;
                    break;
                }
        }
    if (!reach[length][from_state]) return std::nullopt;

    std::vector<int> out{from_state};
    int cur = from_state;
    for (int remaining = length; remaining > 0; --remaining) {
        for (int t : d.transitions[cur])
            if (reach[remaining - 1][t]) {
                cur = t;
                break;
            }
        out.push_back(cur);
    }
    return out;
}

LclProblem problem_from_diagram(const Diagram& d, const std::string& id) {
    if (!d.symmetric)
        throw InvalidParams("only symmetric diagrams induce a problem on undirected paths");

    struct Tables {
        std::set<std::pair<int, int>> states;
        std::set<int> node_ok;  // center labels c with a (c,c) transition
        std::set<int> start, end;
    };
    auto tb = std::make_shared<Tables>();

    std::vector<int> kept;
    for (auto& [a, b] : d.states) {
        kept.push_back(a);
        kept.push_back(b);
    }
    kept = sorted_unique(kept);
    std::vector<int> remap(d.alphabet.size(), -1);
    LclProblem p;
    p.id = id;
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        remap[kept[i]] = i;
        p.alphabet.push_back(d.alphabet[kept[i]]);
    }
    PathSpec spec;
    for (auto& [a, b] : d.states) {
        tb->states.insert({remap[a], remap[b]});
        spec.edge_pairs.push_back({remap[a], remap[b]});
    }
    std::set<std::pair<int, int>> node_pairs;
    for (int s = 0; s < static_cast<int>(d.states.size()); ++s)
        for (int t : d.transitions[s])
            node_pairs.insert({remap[d.states[s].second], remap[d.states[t].first]});
    for (auto& [b, c] : node_pairs) {
        spec.node_pairs.push_back({b, c});
        if (b == c) tb->node_ok.insert(b);
    }
    for (int l : d.start_labels)
        if (remap[l] >= 0) {
            tb->start.insert(remap[l]);
            spec.start_labels.push_back(remap[l]);
        }
    for (int l : d.end_labels)
        if (remap[l] >= 0) {
            tb->end.insert(remap[l]);
            spec.end_labels.push_back(remap[l]);
        }

    p.radius = 1;
    p.path_spec = spec;
    p.verifier = [tb](const LocalView& view) {
        const int c = view.label(0);
        int deg = 0;
        for (const Graph::Edge& e : view.adj(0)) {
            (void)e;
            ++deg;
        }
        if (view.full_degree(0) != deg) return false;  // ball must show all edges at r=1
        if (deg == 0) return tb->start.count(c) && tb->end.count(c);
        if (deg == 1) {
            int x = view.label(view.adj(0)[0].to);
            return tb->states.count({c, x}) && tb->start.count(c);
        }
        if (deg == 2) {
            int x = view.label(view.adj(0)[0].to);
            int y = view.label(view.adj(0)[1].to);
            return tb->states.count({x, c}) && tb->states.count({c, y}) && tb->node_ok.count(c);
        }
        return false;
    };
    return p;
}

Mend mend_path(const Diagram& d, const Graph& g, const PartialLabeling& lam, int v) {
    if (d.flex_K < 0)
        throw InvalidParams("mend_path needs a restricted diagram (run restrict first)");
    const int n = g.size();
    if (v < 0 || v >= n) throw PreconditionError("node out of range");
    if (lam.size() != n) throw PreconditionError("labeling size mismatch");

    LclProblem p = problem_from_diagram(d, "restricted");
    for (int u = 0; u < n; ++u)
        if (lam[u] != kBlank && (lam[u] < 0 || lam[u] >= p.label_count()))
            throw InvalidParams("label id outside the restricted alphabet");

    // The graph must be a single path or cycle.
    bool cycle = true;
    int endpoints = 0;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) > 2) throw InvalidParams("mend_path needs a path or cycle");
        if (g.degree(u) < 2) {
            cycle = false;
            if (g.degree(u) == 1) ++endpoints;
        }
    }
    {
        std::vector<int> dist = g.distances(0);
        for (int u = 0; u < n; ++u)
            if (dist[u] < 0) throw InvalidParams("mend_path needs a connected graph");
    }
    if (!cycle && n > 1 && endpoints != 2) throw InvalidParams("mend_path needs a path or cycle");

    MendOracle oracle(p, g);
    if (lam[v] != kBlank) throw PreconditionError("mend target is not blank");
    if (!oracle.accepts_all(lam))
        throw PreconditionError("relaxed verifier rejects the base labeling");

    // Linear order along the path/cycle.
    std::vector<int> order;
    order.reserve(n);
    if (n == 1) {
        order.push_back(0);
    } else if (!cycle) {
        int start = -1;
        for (int u = 0; u < n; ++u)
            if (g.degree(u) == 1) {
                start = u;
                break;
            }
        int prev = -1, cur = start;
        while (cur >= 0) {
            order.push_back(cur);
            int next = -1;
            for (const Graph::Edge& e : g.neighbors(cur))
                if (e.to != prev) next = e.to;
            prev = cur;
            cur = next;
        }
    } else {
        int prev = -1, cur = 0;
        do {
            order.push_back(cur);
            // First step: the smaller-id neighbor fixes the direction.
            int next = -1;
            for (const Graph::Edge& e : g.neighbors(cur)) {
                if (e.to == prev) continue;
                if (next < 0 || e.to < next) next = e.to;
            }
            prev = cur;
            cur = next;
        } while (cur != 0);
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    const int iv = pos[v];
    const int R = d.flex_K + d.q + 1;

    // Relabel zone: how far each direction may reach, stopping short of other
    // holes and just inside the fixed labeled boundary at distance R+1.
    auto extent = [&](int dir) {
        for (int step = 1; step <= R + 1; ++step) {
            int idx = iv + dir * step;
            if (!cycle) {
                if (idx < 0 || idx >= n) return step - 1;  // path end stays inside
            } else {
                idx = ((idx % n) + n) % n;
            }
            int u = order[idx];
            if (u == v) return step - 1;  // wrapped all the way around
            if (lam[u] == kBlank) return step - 1;
            if (step == R + 1) return R;  // labeled boundary survives
        }
        return R;
    };
    int left = extent(-1), right = extent(+1);
    std::vector<char> in_zone(n, 0);
    in_zone[v] = 1;
    for (int step = 1; step <= left; ++step)
        in_zone[order[(((iv - step) % n) + n) % n]] = 1;
    for (int step = 1; step <= right; ++step) in_zone[order[(iv + step) % n]] = 1;

    std::vector<int> dist = g.distances(v);
    for (int t = 0; t <= R; ++t) {
        RelabelTask task;
        for (int u = 0; u < n; ++u)
            if (in_zone[u] && dist[u] <= t) task.candidates.push_back(u);
        task.must_fill.assign(task.candidates.size(), 0);
        task.may_blank.assign(task.candidates.size(), 0);
        for (int i = 0; i < static_cast<int>(task.candidates.size()); ++i)
            if (task.candidates[i] == v) task.must_fill[i] = 1;
        auto hit = oracle.search(lam, task);
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
    throw InvalidPartialSolution(
        "the labels at the zone boundary do not extend inside the restricted diagram");
}

}  // namespace mendlab
