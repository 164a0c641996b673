// Pointer problem on grid-like inputs.
//
// Inputs ride on edge ports (Up/Down/Left/Right per endpoint); outputs are
// Zero, Flag or a pointer.  A structural checker decides whether a node's
// surroundings look like a consistently oriented wrapped grid; the verifier
// ties Flag to real structural violations and forces pointer chains to end
// in a Flag.  The specialized mender fixes a hole by case analysis, in the
// worst case closing a pointer cycle that wraps around the instance, which
// is why its radius is tied to sqrt(n).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mendlab/graph.hpp"
#include "mendlab/labeling.hpp"
#include "mendlab/problem.hpp"

namespace mendlab {

namespace pointer {
inline constexpr int kZero = 0;
inline constexpr int kFlag = 1;
inline constexpr int kLeft = 2;
inline constexpr int kUp = 3;
inline constexpr int kRight = 4;
}  // namespace pointer

struct GridViolation {
    int node = -1;
    std::string constraint;   // one of 1a..1e, 2a, 2b, 2c
    std::string description;
};

// Structural grid constraints at one node: degree 4, simple, every incident
// edge port-labeled with a direction, directions pairwise distinct, Up/Right
// reciprocated by Down/Left on the far side, and the Down-Right-Up walk
// landing on the Right neighbor.  Empty result means v looks grid-like.
std::vector<GridViolation> check_grid_constraints(const Graph& g, int v);

// The pointer problem: radius 3 (the structural walk needs 3 hops), label
// dependencies only at radius 1.
LclProblem make_pointer_problem();

// Case mender.  Tries, in order: Flag on an own violation; Zero when no
// neighbor points; adopting an existing non-returning pointer; a pointer
// chain to a reachable Flag/blank/violating node; a wrap-around pointer
// cycle.  Radius is bounded by c*sqrt(n).
Mend mend_pointer(const Graph& g, const PartialLabeling& lam, int v, int c = 2);

// Closed walk through u over Left/Up/Right port moves within distance r,
// in walk order starting at u (length = number of moves), or nullopt when r
// is too small for the wrap-around to show.  Requires every node reachable
// from u by non-Down moves within r to satisfy the grid constraints.
std::optional<std::vector<int>> find_up_right_cycle(const Graph& g, int u, int r);

}  // namespace mendlab
