#include "mendlab/problem.hpp"

#include <algorithm>

namespace mendlab {

int LclProblem::label_id(const std::string& name) const {
    for (int i = 0; i < label_count(); ++i)
        if (alphabet[i] == name) return i;
    throw ParseError("label '" + name + "' not in alphabet of " + id);
}

const std::string& LclProblem::label_name(int id) const {
    if (id < 0 || id >= label_count())
        throw InvalidParams("label id out of range for " + this->id);
    return alphabet[id];
}

void LclProblem::check_labeling(const Graph& g, const PartialLabeling& lam) const {
    if (lam.size() != g.size())
        throw InvalidParams("labeling size " + std::to_string(lam.size()) +
                            " does not match graph size " + std::to_string(g.size()));
    for (int v = 0; v < lam.size(); ++v) {
        int l = lam[v];
        if (l != kBlank && (l < 0 || l >= label_count()))
            throw InvalidParams("label id " + std::to_string(l) + " at node " +
                                std::to_string(v) + " outside alphabet of " + id);
    }
}

Verdict relaxed_verify_cached(const LclProblem& p, BallCache& cache,
                              const std::vector<int>& work, int v) {
    const BallTemplate& ball = cache.get(v);
    thread_local std::vector<int> buf;
    buf.resize(ball.size());
    for (int i = 0; i < ball.size(); ++i) {
        int l = work[ball.nodes[i]];
        if (l == kBlank) return Verdict::Happy;
        buf[i] = l;
    }
    LocalView view{&ball, buf.data()};
    return p.verifier(view) ? Verdict::Happy : Verdict::Unhappy;
}

Verdict relaxed_verify(const LclProblem& p, const Graph& g,
                       const PartialLabeling& lam, int v) {
    p.check_labeling(g, lam);
    if (v < 0 || v >= g.size()) throw InvalidParams("node out of range");
    BallCache cache(g, p.radius);
    return relaxed_verify_cached(p, cache, lam.labels, v);
}

AcceptResult accepts(const LclProblem& p, const Graph& g, const PartialLabeling& lam) {
    p.check_labeling(g, lam);
    BallCache cache(g, p.radius);
    AcceptResult res;
    for (int v = 0; v < g.size(); ++v) {
        if (relaxed_verify_cached(p, cache, lam.labels, v) == Verdict::Unhappy) {
            res.accepted = false;
            res.unhappy.push_back(v);
        }
    }
    return res;
}

bool is_mend(const LclProblem& p, const Graph& g, const PartialLabeling& lam,
             const PartialLabeling& mu, int v, int t) {
    p.check_labeling(g, lam);
    p.check_labeling(g, mu);
    if (v < 0 || v >= g.size()) throw InvalidParams("node out of range");
    if (!accepts(p, g, lam).accepted)
        throw PreconditionError("is_mend: the base labeling is not accepted by the relaxed verifier");

    if (mu[v] == kBlank) return false;            // the hole must be filled
    std::vector<int> dist = g.distances(v);
    for (int u = 0; u < g.size(); ++u) {
        if (mu[u] == kBlank && lam[u] != kBlank) return false;  // no new blanks
        if (mu[u] != lam[u] && (dist[u] < 0 || dist[u] > t)) return false;
    }
    return accepts(p, g, mu).accepted;
}

}  // namespace mendlab
