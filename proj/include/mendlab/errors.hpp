// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace mendlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation called with inputs that violate a documented precondition
// (e.g. a labeling that the relaxed verifier rejects).
struct PreconditionError : Error {
    using Error::Error;
};

// Malformed JSON input or label/port names outside the declared alphabets.
struct ParseError : Error {
    using Error::Error;
};

// Generator or operation parameters outside the admissible range.
struct InvalidParams : Error {
    using Error::Error;
};

// A hole admits no mend within the configured search budget even though the
// caller relied on the problem being mendable at that radius.
struct MendabilityViolated : Error {
    explicit MendabilityViolated(int node, const std::string& what)
        : Error(what), node(node) {}
    int node;
};

// The layered tree mender found no completion inside a brute-force window.
struct WindowExceeded : Error {
    explicit WindowExceeded(int node, const std::string& what)
        : Error(what), node(node) {}
    int node;
};

// The diagram has no strongly connected component with a flexible state
// (or the undirected bullet conditions fail), so no restriction exists.
struct NotRestrictable : Error {
    using Error::Error;
};

// Exhaustive search proved that no mend of any radius exists for this hole.
struct UnsolvableInstance : Error {
    explicit UnsolvableInstance(int node, const std::string& what)
        : Error(what), node(node) {}
    int node;
};

// The verifier-call budget ran out before the requested computation finished.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(long long calls, const std::string& what)
        : Error(what), calls(calls) {}
    long long calls;
};

// A labeling passed the relaxed verifier but is not extendable the way the
// fast mender requires (e.g. path boundary states outside the diagram).
struct InvalidPartialSolution : Error {
    using Error::Error;
};

// An internal bound that the theory guarantees was violated; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace mendlab
