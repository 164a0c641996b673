// JSON (de)serialization for graphs, labelings and mends.
//
// Instance files look like
//   {"schema":1,
//    "nodes":[{"id":0,"ports":{"Up":3}}, {"id":1}, ...],
//    "edges":[[0,1],[1,2]],
//    "labels":{"0":"1","1":null}}
// where null means blank and a missing "labels" key means all blanks.

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mendlab/graph.hpp"
#include "mendlab/labeling.hpp"
#include "mendlab/problem.hpp"

namespace mendlab {

inline constexpr int kSchemaVersion = 1;

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json labels_to_json(const PartialLabeling& lam, const LclProblem& p);
PartialLabeling labels_from_json(const nlohmann::json& j, const LclProblem& p, int n);

// Full instance: graph plus (optionally) labels.
nlohmann::json instance_to_json(const Graph& g, const PartialLabeling* lam,
                                const LclProblem* p);

struct RawInstance {
    Graph graph;
    nlohmann::json labels;  // raw labels object (or null); resolve once a problem is known
};
RawInstance instance_from_json(const nlohmann::json& j);

nlohmann::json mend_to_json(const Mend& m, const LclProblem& p);
Mend mend_from_json(const nlohmann::json& j, const LclProblem& p);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace mendlab
