#include "mendlab/view.hpp"

#include <algorithm>

namespace mendlab {

BallTemplate make_ball_template(const Graph& g, int center, int radius) {
    BallTemplate t;
    t.radius = radius;
    t.nodes = g.ball(center, radius);

    std::vector<int> local(g.size(), -1);
    for (int i = 0; i < t.size(); ++i) local[t.nodes[i]] = i;

    std::vector<int> dist = g.distances(center, radius);
    t.dist.resize(t.size());
    t.full_degree.resize(t.size());
    t.adj.resize(t.size());
    for (int i = 0; i < t.size(); ++i) {
        int v = t.nodes[i];
        t.dist[i] = dist[v];
        t.full_degree[i] = g.degree(v);
        for (const Graph::Edge& e : g.neighbors(v)) {
            if (local[e.to] < 0) continue;  // endpoint outside the ball
            Graph::Edge le = e;
            le.to = local[e.to];
            // rev_index still refers to the global adjacency list; recompute
            // after all local lists exist (below).
            t.adj[i].push_back(le);
        }
    }
    // Fix up reverse-edge indices to local positions.
    for (int i = 0; i < t.size(); ++i) {
        for (Graph::Edge& e : t.adj[i]) {
            int j = e.to;
            for (int idx = 0; idx < static_cast<int>(t.adj[j].size()); ++idx) {
                if (t.adj[j][idx].to == i && t.adj[j][idx].port == e.rport) {
                    e.rev_index = idx;
                    break;
                }
            }
        }
    }
    return t;
}

}  // namespace mendlab
