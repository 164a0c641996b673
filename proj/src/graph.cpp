#include "mendlab/graph.hpp"

#include <algorithm>
#include <deque>

namespace mendlab {

namespace port {

std::string name(int p) {
    switch (p) {
        case kUp: return "Up";
        case kDown: return "Down";
        case kLeft: return "Left";
        case kRight: return "Right";
        case kParent: return "parent";
        default: break;
    }
    if (p >= kChildBase) return "child" + std::to_string(p - kChildBase);
    throw InvalidParams("unknown port id " + std::to_string(p));
}

int from_name(const std::string& s) {
    if (s == "Up") return kUp;
    if (s == "Down") return kDown;
    if (s == "Left") return kLeft;
    if (s == "Right") return kRight;
    if (s == "parent") return kParent;
    if (s.rfind("child", 0) == 0) {
        try {
            int i = std::stoi(s.substr(5));
            if (i >= 0) return kChildBase + i;
        } catch (const std::exception&) {
        }
    }
    throw ParseError("unknown port name '" + s + "'");
}

}  // namespace port

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

void Graph::add_edge(int u, int v, int port_u, int port_v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw InvalidParams("edge endpoint out of range");
    if (u == v) throw InvalidParams("self loops are not allowed");
    if (has_edge(u, v)) throw InvalidParams("parallel edge between " + std::to_string(u) + " and " + std::to_string(v));
    int iu = static_cast<int>(adj_[u].size());
    int iv = static_cast<int>(adj_[v].size());
    adj_[u].push_back(Edge{v, port_u, port_v, iv});
    adj_[v].push_back(Edge{u, port_v, port_u, iu});
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    for (const Edge& e : adj_.at(u))
        if (e.to == v) return true;
    return false;
}

int Graph::neighbor_via(int v, int p) const {
    for (const Edge& e : adj_.at(v))
        if (e.port == p) return e.to;
    return -1;
}

std::vector<int> Graph::distances(int v, int limit) const {
    std::vector<int> dist(size(), -1);
    std::deque<int> queue{v};
    dist.at(v) = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (limit >= 0 && dist[u] >= limit) continue;
        for (const Edge& e : adj_[u]) {
            if (dist[e.to] < 0) {
                dist[e.to] = dist[u] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return dist;
}

std::vector<int> Graph::ball(int v, int radius) const {
    std::vector<int> dist = distances(v, radius);
    std::vector<int> nodes;
    for (int u = 0; u < size(); ++u)
        if (dist[u] >= 0) nodes.push_back(u);
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return a < b;
    });
    return nodes;
}

int Graph::eccentricity(int v) const {
    std::vector<int> dist = distances(v);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    return ecc;
}

Graph Graph::power(int p) const {
    if (p < 1) throw InvalidParams("graph power must be >= 1");
    Graph h(size());
    for (int v = 0; v < size(); ++v) {
        std::vector<int> dist = distances(v, p);
        for (int u = v + 1; u < size(); ++u)
            if (dist[u] >= 1) h.add_edge(v, u);
    }
    return h;
}

int parent_of(const Graph& g, int v) {
    return g.neighbor_via(v, port::kParent);
}

std::vector<int> children_of(const Graph& g, int v) {
    std::vector<std::pair<int, int>> found;
    for (const Graph::Edge& e : g.neighbors(v))
        if (e.port >= port::kChildBase) found.emplace_back(e.port, e.to);
    std::sort(found.begin(), found.end());
    std::vector<int> out;
    out.reserve(found.size());
    for (auto& [p, u] : found) out.push_back(u);
    return out;
}

}  // namespace mendlab
