// State-diagram machinery for node-edge-checkable problems on paths/cycles.
//
// States are the ordered label pairs allowed across an edge; a transition
// (a,b) -> (c,d) exists when (b,c) is an allowed node pair.  Walks through
// the diagram correspond to labeled path segments, which is what the
// path-specific mender splices.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mendlab/graph.hpp"
#include "mendlab/labeling.hpp"
#include "mendlab/problem.hpp"

namespace mendlab {

struct Diagram {
    std::vector<std::string> alphabet;           // label names (indices used below)
    std::vector<std::pair<int, int>> states;     // sorted ordered pairs
    std::vector<std::vector<int>> transitions;   // per state, sorted successor indices
    std::vector<int> start_labels;               // sorted label ids
    std::vector<int> end_labels;
    bool symmetric = false;

    // Restriction metadata; flex_K < 0 means "not a restricted diagram".
    int flex_K = -1;
    int q = 0;

    int state_index(int a, int b) const;  // -1 if absent
    bool has_transition(int s, int t) const;
    // Index of the swapped state (b,a), or -1.
    int swapped(int s) const { return state_index(states[s].second, states[s].first); }
    bool is_start(int s) const;
    bool is_end(int s) const;
    std::string state_name(int s) const;
};

struct StateClass {
    bool repeatable = false;
    bool loop = false;
    bool flexible = false;
    bool mirror_flexible = false;
    int flex_K = -1;    // smallest k with closed walks of every length >= k
    int mirror_K = -1;  // same, for walks to the swapped state
    int scc_id = -1;    // components numbered by smallest member state, 0-based
};

struct Classification {
    std::vector<StateClass> states;
    int ell_max = 0;  // length horizon used by the bounded procedure
};

// Diagram of a path problem: one state per ordered edge pair, transitions by
// the node relation, start/end flags from the endpoint label sets.
Diagram build_diagram(const std::vector<std::string>& alphabet, const PathSpec& spec);

// Bounded classification: walk lengths explored up to |S|^2 + 2|S|, which
// covers the worst-case index of a primitive component, so a gcd-1 state
// that still fails inside the horizon is an internal error.
Classification classify_states(const Diagram& d);

enum class RestrictMode { Directed, UndirectedPath, UndirectedCycle };

// Sub-diagram that witnesses O(1) mendability: the smallest strongly
// connected component containing a flexible state (ties by lexicographic
// state list), plus, for undirected paths, the non-repeatable states on
// start/end walks into it.  Sets flex_K and q on the result.
Diagram restrict(const Diagram& d, RestrictMode mode);

// Lexicographically-first walk of exactly `length` transitions, as state
// indices (length+1 entries), or nullopt.
std::optional<std::vector<int>> walk(const Diagram& d, int from_state, int to_state, int length);

// Problem whose verifier accepts exactly the labelings of paths/cycles whose
// edge states and node transitions lie in d.  Requires a symmetric diagram
// (instances here are undirected).
LclProblem problem_from_diagram(const Diagram& d, const std::string& id);

// Path/cycle mender with radius <= flex_K + q + 1: relabels the stretch
// around v between the nearest blanks/boundaries by splicing a diagram walk.
Mend mend_path(const Diagram& d, const Graph& g, const PartialLabeling& lam, int v);

}  // namespace mendlab
