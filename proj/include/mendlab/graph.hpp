// Simple undirected graph with optional per-endpoint port labels.
//
// Ports are small integers from a fixed global registry (Up/Down/Left/Right
// for grids and tori, parent/childN for rooted trees).  Every edge knows the
// port it occupies at both endpoints plus the index of its reverse edge, so
// verifiers can walk "via port" or look at the far side of an edge without
// scanning adjacency lists.

#pragma once

#include <string>
#include <vector>

#include "mendlab/errors.hpp"

namespace mendlab {

namespace port {

inline constexpr int kNone = -1;
inline constexpr int kUp = 0;
inline constexpr int kDown = 1;
inline constexpr int kLeft = 2;
inline constexpr int kRight = 3;
inline constexpr int kParent = 4;
inline constexpr int kChildBase = 5;  // child i maps to kChildBase + i

std::string name(int p);
int from_name(const std::string& s);  // throws ParseError on unknown names

}  // namespace port

class Graph {
public:
    struct Edge {
        int to;
        int port;       // port label at the near endpoint, port::kNone if none
        int rport;      // port label at the far endpoint
        int rev_index;  // index of the reverse edge in adj(to)
    };

    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0) throw InvalidParams("graph size must be non-negative");
    }

    int size() const { return static_cast<int>(adj_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    int edge_count() const { return edge_count_; }

    const std::vector<Edge>& neighbors(int v) const { return adj_.at(v); }

    void add_edge(int u, int v, int port_u = port::kNone, int port_v = port::kNone);

    bool has_edge(int u, int v) const;

    // Neighbor reached from v through the given port, or -1 if absent.
    int neighbor_via(int v, int p) const;

    // BFS distances from v, capped at `limit` (-1 beyond the cap / unreachable).
    std::vector<int> distances(int v, int limit = -1) const;

    // Nodes within distance `radius` of v, sorted by (distance, id).
    std::vector<int> ball(int v, int radius) const;

    int eccentricity(int v) const;

    // Graph power: edge {u,w} iff 1 <= dist(u,w) <= p.  Ports are dropped.
    Graph power(int p) const;

private:
    std::vector<std::vector<Edge>> adj_;
    int edge_count_ = 0;
};

// Rooted-tree helpers driven by parent/child ports.  Return -1 when the node
// has no parent port (the root, or the graph is not port-rooted).
int parent_of(const Graph& g, int v);
std::vector<int> children_of(const Graph& g, int v);

}  // namespace mendlab
