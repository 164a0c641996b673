// Partial labelings: one output label per node, kBlank for an empty spot.
#pragma once

#include <map>
#include <vector>

#include "mendlab/errors.hpp"

namespace mendlab {

inline constexpr int kBlank = -1;

struct PartialLabeling {
    std::vector<int> labels;  // per node: index into the problem's alphabet, or kBlank

    PartialLabeling() = default;
    explicit PartialLabeling(int n) : labels(n, kBlank) {}

    int size() const { return static_cast<int>(labels.size()); }
    int operator[](int v) const { return labels.at(v); }
    int& operator[](int v) { return labels.at(v); }

    bool complete() const {
        for (int l : labels)
            if (l == kBlank) return false;
        return true;
    }

    std::vector<int> holes() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (labels[v] == kBlank) out.push_back(v);
        return out;
    }
};

// A mend anchored at `center`: new labels for exactly the changed nodes.
struct Mend {
    int center = -1;
    int radius = 0;
    std::map<int, int> changes;  // node -> new label (kBlank only appears transiently)

    PartialLabeling apply(const PartialLabeling& lam) const {
        PartialLabeling mu = lam;
        for (auto& [v, l] : changes) mu[v] = l;
        return mu;
    }
};

}  // namespace mendlab
