// Locally checkable labeling problems and the relaxed verifier.
//
// A problem is a finite output alphabet, a verification radius r and a
// verifier that judges a fully labeled radius-r ball.  The relaxed verifier
// wraps it: a node with any blank within distance r is happy no matter what.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mendlab/graph.hpp"
#include "mendlab/labeling.hpp"
#include "mendlab/view.hpp"

namespace mendlab {

// Node-edge-checkable description of a problem on paths and cycles.  The
// edge relation constrains the ordered label pair across an edge, the node
// relation the pair of labels a degree-2 node shows to its two sides (for
// plain colorings this is the diagonal), and the start/end sets constrain
// path endpoints.
struct PathSpec {
    std::vector<std::pair<int, int>> edge_pairs;
    std::vector<std::pair<int, int>> node_pairs;
    std::vector<int> start_labels;
    std::vector<int> end_labels;
};

class LclProblem {
public:
    std::string id;
    std::vector<std::string> alphabet;        // output labels
    std::vector<std::string> input_alphabet;  // inputs ride on graph ports when non-empty
    int radius = 1;
    std::function<bool(const LocalView&)> verifier;  // true = happy on a full ball
    std::optional<PathSpec> path_spec;

    // Optional static pruning hook: labels that can never appear at `v` in a
    // labeling accepted without blank forgiveness (e.g. Flag on a clean grid
    // node, an orientation tuple of the wrong arity).  Searches may use it
    // only where no blank can survive nearby; empty return means "no filter".
    std::function<std::vector<int>(const Graph&, int)> candidate_filter;

    // Distance within which the verifier's verdict actually depends on
    // *labels*; ports and structure may still be read out to `radius`.
    // -1 means "equal to radius".  Blank forgiveness always spans the full
    // radius, so searches may rely on this only where no blank can survive
    // in the ball (same soundness condition as candidate_filter).
    int label_radius = -1;

    int effective_label_radius() const { return label_radius < 0 ? radius : label_radius; }

    int label_count() const { return static_cast<int>(alphabet.size()); }
    int label_id(const std::string& name) const;       // throws ParseError
    const std::string& label_name(int id) const;

    void check_labeling(const Graph& g, const PartialLabeling& lam) const;
};

enum class Verdict { Happy, Unhappy };

// Relaxed verifier at one node: happy if a blank lies within distance r,
// otherwise the plain verifier's verdict on the fully labeled ball.
Verdict relaxed_verify(const LclProblem& p, const Graph& g,
                       const PartialLabeling& lam, int v);

struct AcceptResult {
    bool accepted = true;
    std::vector<int> unhappy;  // ascending node ids
};

AcceptResult accepts(const LclProblem& p, const Graph& g, const PartialLabeling& lam);

// Checks the four conditions of a t-mend of lam at v.  Throws
// PreconditionError when lam itself is not accepted.
bool is_mend(const LclProblem& p, const Graph& g, const PartialLabeling& lam,
             const PartialLabeling& mu, int v, int t);

// Internal fast path shared by the searches: verdict at v with the ball
// template taken from `cache` (must be built with radius p.radius) and labels
// read from `work`.
Verdict relaxed_verify_cached(const LclProblem& p, BallCache& cache,
                              const std::vector<int>& work, int v);

}  // namespace mendlab
