// Radius-r ball views handed to verifiers.
//
// A verifier never sees the whole graph: it receives the induced ball around
// the checked node, with local indices, distances from the center and the
// original port labels.  This makes the locality of a verifier mechanical
// rather than a convention.

#pragma once

#include <memory>
#include <vector>

#include "mendlab/graph.hpp"
#include "mendlab/labeling.hpp"

namespace mendlab {

// Immutable structure of one ball; built once per (graph, node, radius) and
// reused across verifier calls with different labelings.
struct BallTemplate {
    int radius = 0;
    std::vector<int> nodes;  // global ids, sorted by (distance, id); nodes[0] is the center
    std::vector<int> dist;   // distance from the center, per local index
    std::vector<int> full_degree;  // degree in the underlying graph
    std::vector<std::vector<Graph::Edge>> adj;  // local indices; ports preserved

    int size() const { return static_cast<int>(nodes.size()); }
};

BallTemplate make_ball_template(const Graph& g, int center, int radius);

// A ball plus the current labels of its nodes.  `labels[i]` corresponds to
// local node i; when a verifier runs, every entry is a real label.
struct LocalView {
    const BallTemplate* ball = nullptr;
    const int* labels = nullptr;

    int size() const { return ball->size(); }
    int center() const { return 0; }
    int label(int i) const { return labels[i]; }
    int dist(int i) const { return ball->dist[i]; }
    int full_degree(int i) const { return ball->full_degree[i]; }
    const std::vector<Graph::Edge>& adj(int i) const { return ball->adj[i]; }

    // Local neighbor of i through port p, or -1 if the edge is absent or its
    // far endpoint lies outside the ball.
    int neighbor_via(int i, int p) const {
        for (const Graph::Edge& e : ball->adj[i])
            if (e.port == p) return e.to;
        return -1;
    }
};

// Lazily built per-node ball templates for one (graph, radius) pair.
class BallCache {
public:
    BallCache(const Graph& g, int radius) : g_(&g), radius_(radius), slots_(g.size()) {}

    const BallTemplate& get(int v) {
        auto& slot = slots_.at(v);
        if (!slot) slot = std::make_unique<BallTemplate>(make_ball_template(*g_, v, radius_));
        return *slot;
    }

    const Graph& graph() const { return *g_; }
    int radius() const { return radius_; }

private:
    const Graph* g_;
    int radius_;
    std::vector<std::unique_ptr<BallTemplate>> slots_;
};

}  // namespace mendlab
