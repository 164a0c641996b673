#include "mendlab/pointer_lcl.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "mendlab/errors.hpp"

namespace mendlab {

namespace {

using pointer::kFlag;
using pointer::kLeft;
using pointer::kRight;
using pointer::kUp;
using pointer::kZero;

const std::vector<std::string> kAlphabet = {"Zero", "Flag", "Left", "Up", "Right"};
const std::vector<std::string> kInputs = {"Up", "Down", "Left", "Right"};

bool is_pointer(int l) { return l == kLeft || l == kUp || l == kRight; }

int port_of(int label) {
    switch (label) {
        case kLeft: return port::kLeft;
        case kUp: return port::kUp;
        case kRight: return port::kRight;
        default: return port::kNone;
    }
}

int label_of_port(int p) {
    switch (p) {
        case port::kLeft: return kLeft;
        case port::kUp: return kUp;
        case port::kRight: return kRight;
        default: return -1;
    }
}

// Labels a pointer chain may continue with: the node a pointer targets must
// carry one of these.
bool follow_ok(int pointer_label, int target_label) {
    switch (pointer_label) {
        case kUp: return target_label == kUp || target_label == kLeft ||
                         target_label == kRight || target_label == kFlag;
        case kLeft: return target_label == kLeft || target_label == kUp || target_label == kFlag;
        case kRight: return target_label == kRight || target_label == kUp ||
                            target_label == kFlag;
        default: return false;
    }
}

bool is_grid_port(int p) {
    return p == port::kUp || p == port::kDown || p == port::kLeft || p == port::kRight;
}

// Grid validity of the center of a radius-3 ball; mirrors
// check_grid_constraints but reads only the view.
bool view_grid_ok(const LocalView& view) {
    const auto& edges = view.adj(0);
    if (view.full_degree(0) != 4 || edges.size() != 4) return false;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!is_grid_port(edges[i].port)) return false;
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].to == edges[j].to || edges[i].port == edges[j].port) return false;
    }
    for (const Graph::Edge& e : edges) {
        if (e.port == port::kUp && e.rport != port::kDown) return false;
        if (e.port == port::kRight && e.rport != port::kLeft) return false;
    }
    int a = view.neighbor_via(0, port::kDown);
    int b = a < 0 ? -1 : view.neighbor_via(a, port::kRight);
    int c = b < 0 ? -1 : view.neighbor_via(b, port::kUp);
    int d = view.neighbor_via(0, port::kRight);
    return c >= 0 && d >= 0 && c == d;
}

// Pointer labels of neighbors aimed at each node.
std::vector<std::vector<int>> incoming_pointers(const Graph& g, const PartialLabeling& lam) {
    std::vector<std::vector<int>> in(g.size());
    for (int x = 0; x < g.size(); ++x) {
        if (!is_pointer(lam[x])) continue;
        int y = g.neighbor_via(x, port_of(lam[x]));
        if (y >= 0) in[y].push_back(lam[x]);
    }
    return in;
}

// Nodes reachable from u along non-Down port moves within `limit` hops.
std::vector<int> non_down_region(const Graph& g, int u, int limit) {
    std::vector<int> dist(g.size(), -1), out;
    std::deque<int> queue{u};
    dist[u] = 0;
    out.push_back(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (dist[x] == limit) continue;
        for (int p : {port::kLeft, port::kUp, port::kRight}) {
            int y = g.neighbor_via(x, p);
            if (y >= 0 && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                out.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return out;
}

struct UpRightCycle {
    std::vector<int> nodes;  // walk order, starting at u; size = move count
    std::vector<int> moves;  // port per step
};

// Enumerates the nodes w(x,y) reached by x Rights then y Ups, in order of
// x+y (larger x first), until two pairs land on the same node; the wrap that
// causes the collision yields a Left/Up/Right cycle through u.  Nullopt when
// every pair within x+y <= r is a distinct node.
std::optional<UpRightCycle> wrap_cycle(const Graph& g, int u, int r) {
    std::map<std::pair<int, int>, int> node_at;   // (x,y) -> node
    std::vector<std::pair<int, int>> first_pair(g.size(), {-1, -1});
    int cx = -1, cy = -1, px = -1, py = -1;  // colliding pair and earlier pair
    for (int total = 0; total <= r && cx < 0; ++total) {
        for (int x = total; x >= 0; --x) {
            int y = total - x;
            int node;
            if (total == 0) {
                node = u;
            } else if (y == 0) {
                node = g.neighbor_via(node_at.at({x - 1, 0}), port::kRight);
            } else {
                node = g.neighbor_via(node_at.at({x, y - 1}), port::kUp);
            }
            if (node < 0)
                throw InternalError("grid-valid node lost an Up/Right port during wrap search");
            if (first_pair[node].first >= 0) {
                cx = x, cy = y;
                px = first_pair[node].first, py = first_pair[node].second;
                break;
            }
            first_pair[node] = {x, y};
            node_at[{x, y}] = node;
        }
    }
    if (cx < 0) return std::nullopt;

    if (cy < py) {
        std::swap(cx, px);
        std::swap(cy, py);
    }
    std::vector<int> moves;
    if (cx >= px) {
        moves.assign(cx - px, port::kRight);
        moves.insert(moves.end(), cy - py, port::kUp);
    } else {
        moves.assign(cy - py, port::kUp);
        moves.insert(moves.end(), px - cx, port::kLeft);
    }
    if (moves.empty()) throw InternalError("wrap search produced an empty cycle");

    UpRightCycle out;
    out.moves = moves;
    int cur = u;
    for (int p : moves) {
        out.nodes.push_back(cur);
        cur = g.neighbor_via(cur, p);
        if (cur < 0)
            throw InternalError("grid-valid node lost a port while closing the wrap cycle");
    }
    if (cur != u) throw InternalError("wrap cycle failed to close at its origin");
    std::vector<int> sorted = out.nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InternalError("wrap cycle revisits a node");
    return out;
}

}  // namespace

std::vector<GridViolation> check_grid_constraints(const Graph& g, int v) {
    std::vector<GridViolation> out;
    auto add = [&](const std::string& id, const std::string& what) {
        out.push_back({v, id, what});
    };
    const auto& edges = g.neighbors(v);
    if (static_cast<int>(edges.size()) != 4)
        add("1a", "degree is " + std::to_string(edges.size()) + ", expected 4");
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].to == v) {
            add("1b", "self loop");
            break;
        }
        bool dup = false;
        for (size_t j = i + 1; j < edges.size(); ++j) dup = dup || edges[i].to == edges[j].to;
        if (dup) {
            add("1b", "parallel edges to node " + std::to_string(edges[i].to));
            break;
        }
    }
    // 1d (one label per edge endpoint) cannot fail here: each endpoint holds
    // exactly one port slot by representation.
    bool ports_ok = true;
    for (const Graph::Edge& e : edges)
        if (!is_grid_port(e.port)) {
            add("1c", "edge to " + std::to_string(e.to) + " is not labeled with a direction");
            ports_ok = false;
            break;
        }
    if (ports_ok) {
        for (size_t i = 0; i < edges.size() && ports_ok; ++i)
            for (size_t j = i + 1; j < edges.size(); ++j)
                if (edges[i].port == edges[j].port) {
                    add("1e", "two incident edges labeled " + port::name(edges[i].port));
                    ports_ok = false;
                    break;
                }
    }
    for (const Graph::Edge& e : edges) {
        if (e.port == port::kUp && e.rport != port::kDown)
            add("2a", "Up edge to " + std::to_string(e.to) + " is not Down on the far side");
        if (e.port == port::kRight && e.rport != port::kLeft)
            add("2b", "Right edge to " + std::to_string(e.to) + " is not Left on the far side");
    }
    {
        int a = g.neighbor_via(v, port::kDown);
        int b = a < 0 ? -1 : g.neighbor_via(a, port::kRight);
        int c = b < 0 ? -1 : g.neighbor_via(b, port::kUp);
        int d = g.neighbor_via(v, port::kRight);
        if (c < 0 || d < 0 || c != d)
            add("2c", "Down,Right,Up walk does not land on the Right neighbor");
    }
    return out;
}

LclProblem make_pointer_problem() {
    LclProblem p;
    p.id = "pointer_lcl";
    p.alphabet = kAlphabet;
    p.input_alphabet = kInputs;
    p.radius = 3;
    p.label_radius = 1;
    p.verifier = [](const LocalView& view) {
        const int out = view.label(0);
        if (out == kFlag) return !view_grid_ok(view);
        if (out == kZero) {
            for (const Graph::Edge& e : view.adj(0)) {
                int lw = view.label(e.to);
                if (is_pointer(lw) && view.neighbor_via(e.to, port_of(lw)) == 0) return false;
            }
            return true;
        }
        // Pointer: must follow an existing edge, chains continue or end in Flag.
        int t = view.neighbor_via(0, port_of(out));
        return t >= 0 && follow_ok(out, view.label(t));
    };
    p.candidate_filter = [](const Graph& g, int x) -> std::vector<int> {
        if (check_grid_constraints(g, x).empty()) return {kZero, kLeft, kUp, kRight};
        return {};  // a violating node may use any label, Flag included
    };
    return p;
}

Mend mend_pointer(const Graph& g, const PartialLabeling& lam, int v, int c) {
    LclProblem p = make_pointer_problem();
    p.check_labeling(g, lam);
    if (v < 0 || v >= g.size()) throw PreconditionError("node out of range");
    if (lam[v] != kBlank) throw PreconditionError("mend target is not blank");
    if (c < 1) throw InvalidParams("radius budget constant must be positive");
    if (!accepts(p, g, lam).accepted)
        throw PreconditionError("relaxed verifier rejects the base labeling");

    const int n = g.size();
    const int r = static_cast<int>(c * std::sqrt(static_cast<double>(n)));

    auto single = [&](int label) {
        Mend m;
        m.center = v;
        m.radius = 0;
        m.changes[v] = label;
        return m;
    };

    // Case 1: v itself looks broken.
    if (!check_grid_constraints(g, v).empty()) return single(kFlag);

    // Case 2: no neighbor holds a pointer.
    {
        bool quiet = true;
        for (const Graph::Edge& e : g.neighbors(v))
            quiet = quiet && !is_pointer(lam[e.to]);
        if (quiet) return single(kZero);
    }

    std::vector<std::vector<int>> incoming = incoming_pointers(g, lam);

    // Case 3: adopt a neighboring pointer that does not point back.
    for (int L : {kLeft, kUp, kRight}) {
        int w = g.neighbor_via(v, port_of(L));
        if (w < 0) continue;
        int lw = lam[w];
        if (!is_pointer(lw)) continue;
        if (g.neighbor_via(w, port_of(lw)) == v) continue;
        if (!follow_ok(L, lw)) continue;  // v's own chain rule must hold too
        bool in_ok = true;
        for (int lx : incoming[v]) in_ok = in_ok && follow_ok(lx, L);
        if (in_ok) return single(L);
    }

    // Case 4: pointer chain to a reachable Flag, hole, or broken node.
    // Breadth-first over (node, previous chain label); a node is claimed by
    // its first arrival so the chain stays simple, and a label may only be
    // placed where every off-chain pointer aimed at the node tolerates it.
    {
        std::vector<int> parent(n, -1), parent_label(n, -1), depth(n, -1);
        std::deque<std::pair<int, int>> queue;  // (node, label written on it)
        depth[v] = 0;
        queue.push_back({v, -1});
        int target = -1;
        while (!queue.empty() && target < 0) {
            auto [x, lx] = queue.front();
            queue.pop_front();
            if (depth[x] == r) continue;
            for (int L : {kLeft, kUp, kRight}) {
                if (lx >= 0 && !follow_ok(lx, L)) continue;
                bool in_ok = true;
                for (int li : incoming[x]) in_ok = in_ok && follow_ok(li, L);
                if (!in_ok) continue;
                int y = g.neighbor_via(x, port_of(L));
                if (y < 0 || depth[y] >= 0) continue;
                depth[y] = depth[x] + 1;
                parent[y] = x;
                parent_label[y] = L;
                if (lam[y] == kBlank || lam[y] == kFlag ||
                    !check_grid_constraints(g, y).empty()) {
                    target = y;
                    break;
                }
                queue.push_back({y, L});
            }
        }
        if (target >= 0) {
            Mend m;
            m.center = v;
            if (lam[target] != kBlank && lam[target] != kFlag) m.changes[target] = kFlag;
            int cur = target;
            while (parent[cur] >= 0) {
                int x = parent[cur];
                if (lam[x] != parent_label[cur]) m.changes[x] = parent_label[cur];
                cur = x;
            }
            std::vector<int> dist = g.distances(v, r);
            for (auto& [node, label] : m.changes)
                m.radius = std::max(m.radius, dist[node]);
            return m;
        }
    }

    // Case 5: everything in reach looks like a clean grid, so the wrap-around
    // guarantees a Left/Up/Right cycle through v.
    for (int y : non_down_region(g, v, r)) {
        if (y == v) continue;
        if (lam[y] == kBlank)
            throw InternalError("blank node escaped the chain search at node " +
                                std::to_string(y));
        if (!check_grid_constraints(g, y).empty())
            throw InternalError("broken node escaped the chain search at node " +
                                std::to_string(y));
    }
    auto cycle = wrap_cycle(g, v, r);
    if (!cycle)
        throw InternalError("no wrap-around cycle within the radius budget");
    std::vector<char> on_cycle(n, 0);
    for (int x : cycle->nodes) on_cycle[x] = 1;
    Mend m;
    m.center = v;
    for (size_t i = 0; i < cycle->nodes.size(); ++i) {
        int x = cycle->nodes[i];
        int label = label_of_port(cycle->moves[i]);
        for (int li : incoming[x])
            if (!follow_ok(li, label)) {
                int src = -1;  // identify the offender for the message
                for (const Graph::Edge& e : g.neighbors(x))
                    if (!on_cycle[e.to] && lam[e.to] == li &&
                        g.neighbor_via(e.to, port_of(li)) == x)
                        src = e.to;
                if (src >= 0)
                    throw InternalError("off-cycle pointer at node " + std::to_string(src) +
                                        " cannot tolerate the wrap cycle");
            }
        if (lam[x] != label) m.changes[x] = label;
    }
    std::vector<int> dist = g.distances(v, r);
    for (auto& [node, label] : m.changes) {
        if (dist[node] < 0 || dist[node] > r)
            throw InternalError("wrap cycle change outside the radius budget");
        m.radius = std::max(m.radius, dist[node]);
    }
    return m;
}

std::optional<std::vector<int>> find_up_right_cycle(const Graph& g, int u, int r) {
    if (u < 0 || u >= g.size()) throw PreconditionError("node out of range");
    if (r < 0) throw InvalidParams("radius must be non-negative");
    for (int y : non_down_region(g, u, r)) {
        auto violations = check_grid_constraints(g, y);
        if (!violations.empty())
            throw PreconditionError("node " + std::to_string(y) + " fails grid constraint " +
                                    violations.front().constraint + ": " +
                                    violations.front().description);
    }
    auto cycle = wrap_cycle(g, u, r);
    if (!cycle) {
        long long pairs = static_cast<long long>(r + 1) * (r + 2) / 2;
        long long reachable = static_cast<long long>(g.ball(u, r).size());
        if (pairs > reachable)
            throw InternalError("wrap-around collision must exist once the pair count "
                                "exceeds the reachable ball");
        return std::nullopt;
    }
    return cycle->nodes;
}

}  // namespace mendlab
