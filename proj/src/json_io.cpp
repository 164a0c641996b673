#include "mendlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace mendlab {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json nodes = json::array();
    for (int v = 0; v < g.size(); ++v) {
        json n;
        n["id"] = v;
        json ports = json::object();
        for (const Graph::Edge& e : g.neighbors(v))
            if (e.port != port::kNone) ports[port::name(e.port)] = e.to;
        if (!ports.empty()) n["ports"] = ports;
        nodes.push_back(n);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.size(); ++v)
        for (const Graph::Edge& e : g.neighbors(v))
            if (v < e.to) edges.emplace_back(v, e.to);
    std::sort(edges.begin(), edges.end());
    json je = json::array();
    for (auto& [u, v] : edges) je.push_back(json::array({u, v}));
    return json{{"schema", kSchemaVersion}, {"nodes", nodes}, {"edges", je}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw ParseError("instance JSON needs 'nodes' and 'edges'");
    const json& nodes = j.at("nodes");
    int n = static_cast<int>(nodes.size());
    std::vector<bool> seen(n, false);
    // port maps per node: port name -> neighbor
    std::vector<std::map<int, int>> ports(n);
    for (const json& jn : nodes) {
        if (!jn.contains("id") || !jn.at("id").is_number_integer())
            throw ParseError("node entry without integer 'id'");
        int id = jn.at("id").get<int>();
        if (id < 0 || id >= n || seen[id])
            throw ParseError("node ids must be 0..n-1 without repeats");
        seen[id] = true;
        if (jn.contains("ports")) {
            for (auto& [name, tgt] : jn.at("ports").items()) {
                if (!tgt.is_number_integer()) throw ParseError("port target must be a node id");
                ports[id][port::from_name(name)] = tgt.get<int>();
            }
        }
    }
    Graph g(n);
    auto port_at = [&](int u, int v) {
        for (auto& [p, t] : ports[u])
            if (t == v) return p;
        return port::kNone;
    };
    for (const json& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2) throw ParseError("edge entries must be [u,v]");
        int u = je.at(0).get<int>(), v = je.at(1).get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
        try {
            g.add_edge(u, v, port_at(u, v), port_at(v, u));
        } catch (const InvalidParams& e) {
            throw ParseError(std::string("bad edge list: ") + e.what());
        }
    }
    // every port entry must correspond to an actual edge
    for (int u = 0; u < n; ++u)
        for (auto& [p, t] : ports[u])
            if (!g.has_edge(u, t))
                throw ParseError("port " + port::name(p) + " of node " + std::to_string(u) +
                                 " names a non-neighbor");
    return g;
}

json labels_to_json(const PartialLabeling& lam, const LclProblem& p) {
    json out = json::object();
    for (int v = 0; v < lam.size(); ++v) {
        if (lam[v] == kBlank)
            out[std::to_string(v)] = nullptr;
        else
            out[std::to_string(v)] = p.label_name(lam[v]);
    }
    return out;
}

PartialLabeling labels_from_json(const json& j, const LclProblem& p, int n) {
    PartialLabeling lam(n);
    if (j.is_null()) return lam;
    if (!j.is_object()) throw ParseError("'labels' must be an object");
    for (auto& [key, val] : j.items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("label key '" + key + "' is not a node id");
        }
        if (v < 0 || v >= n) throw ParseError("label key out of range: " + key);
        if (val.is_null())
            lam[v] = kBlank;
        else if (val.is_string())
            lam[v] = p.label_id(val.get<std::string>());
        else
            throw ParseError("labels must be strings or null");
    }
    return lam;
}

json instance_to_json(const Graph& g, const PartialLabeling* lam, const LclProblem* p) {
    json j = graph_to_json(g);
    if (lam != nullptr && p != nullptr) j["labels"] = labels_to_json(*lam, *p);
    return j;
}

RawInstance instance_from_json(const json& j) {
    RawInstance r{graph_from_json(j), json()};
    if (j.contains("labels")) r.labels = j.at("labels");
    return r;
}

json mend_to_json(const Mend& m, const LclProblem& p) {
    json changes = json::object();
    for (auto& [v, l] : m.changes)
        changes[std::to_string(v)] = (l == kBlank) ? json() : json(p.label_name(l));
    return json{{"schema", kSchemaVersion},
                {"center", m.center},
                {"radius", m.radius},
                {"changes", changes}};
}

Mend mend_from_json(const json& j, const LclProblem& p) {
    Mend m;
    m.center = j.at("center").get<int>();
    m.radius = j.at("radius").get<int>();
    for (auto& [key, val] : j.at("changes").items()) {
        int v = std::stoi(key);
        m.changes[v] = val.is_null() ? kBlank : p.label_id(val.get<std::string>());
    }
    return m;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace mendlab
