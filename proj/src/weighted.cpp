#include "sparsehalf/weighted.hpp"

#include <algorithm>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

WeightFunction::WeightFunction(std::shared_ptr<const Graph> g, std::vector<Rat> w)
    : graph_(std::move(g)), w_(std::move(w)) {
    if (!graph_) throw std::invalid_argument("weight function: null graph");
    if (static_cast<int>(w_.size()) != graph_->vertex_count())
        throw std::invalid_argument("weight function: size mismatch");
    Rat total = 0;
    for (const Rat& x : w_) {
        if (x < 0) throw ConstraintError("weight function: negative weight");
        total += x;
    }
    if (total != 1) throw ConstraintError("weight function: weights must sum to 1");
}

WeightFunction WeightFunction::uniform(std::shared_ptr<const Graph> g) {
    const int n = g->vertex_count();
    if (n == 0) throw std::invalid_argument("uniform weights need at least one vertex");
    return WeightFunction(std::move(g), std::vector<Rat>(n, Rat(1, n)));
}

Rat WeightFunction::neighborhood_weight(int v) const {
    Rat total = 0;
    for (int u : graph_->neighbors(v)) total += w_[u];
    return total;
}

Rat weighted_min_degree(const WeightFunction& wf) {
    const int n = wf.graph().vertex_count();
    if (n == 0) return Rat(0);
    Rat best = wf.neighborhood_weight(0);
    for (int v = 1; v < n; ++v) best = std::min(best, wf.neighborhood_weight(v));
    return best;
}

Half::Half(WeightFunction bound, std::vector<Rat> s)
    : bound_(std::move(bound)), s_(std::move(s)) {
    if (static_cast<int>(s_.size()) != bound_.graph().vertex_count())
        throw std::invalid_argument("half: size mismatch");
    Rat total = 0;
    for (int v = 0; v < static_cast<int>(s_.size()); ++v) {
        if (s_[v] < 0) throw ConstraintError("half: negative value");
        if (s_[v] > bound_.weight(v))
            throw ConstraintError("half: value exceeds vertex weight");
        total += s_[v];
    }
    if (total != Rat(1, 2)) throw ConstraintError("half: values must sum to 1/2");
}

Rat edge_mass(const Half& h) {
    Rat total = 0;
    for (const auto& [u, v] : h.graph().edges()) total += h.value(u) * h.value(v);
    return total;
}

bool is_sparse_half(const Half& h) { return edge_mass(h) <= Rat(1, 50); }

VertexSet round_half_to_set(const Half& h) {
    const Graph& g = h.graph();
    const int n = g.vertex_count();
    const Rat unit(1, n);
    for (int v = 0; v < n; ++v) {
        if (h.bound().weight(v) != unit)
            throw std::invalid_argument("round_half_to_set: weights are not uniform");
    }
    if (!is_sparse_half(h)) throw ConstraintError("round_half_to_set: input is not sparse");

    std::vector<Rat> s = h.values();
    auto mass = [&]() {
        Rat total = 0;
        for (const auto& [u, v] : g.edges()) total += s[u] * s[v];
        return total;
    };
    auto weighted_nbhd = [&](int v) {
        Rat total = 0;
        for (int u : g.neighbors(v)) total += s[u];
        return total;
    };

    Rat current = mass();
    for (;;) {
        int a = -1, b = -1;
        for (int v = 0; v < n && b < 0; ++v) {
            if (s[v] > 0 && s[v] < unit) {
                if (a < 0) a = v; else b = v;
            }
        }
        if (b < 0) break;  // at most one fractional vertex left
        // Mass flows from the vertex with the heavier s-weighted
        // neighborhood; on a tie the lower-indexed vertex receives.
        int donor = a, receiver = b;
        if (weighted_nbhd(a) < weighted_nbhd(b)) { donor = b; receiver = a; }
        const Rat delta = std::min(s[donor], unit - s[receiver]);
        s[donor] -= delta;
        s[receiver] += delta;
        const Rat next = mass();
        if (next > current)
            throw TheoremViolationError("round_half_to_set: transfer increased edge mass");
        current = next;
    }

    VertexSet out{n, {}};
    for (int v = 0; v < n; ++v) {
        if (s[v] == unit) out.members.push_back(v);
    }
    if (out.size() != n / 2)
        throw TheoremViolationError("round_half_to_set: rounded set has wrong size");
    if (induced_edge_count(g, out) * 50 > static_cast<long long>(n) * n)
        throw TheoremViolationError("round_half_to_set: rounded set is not sparse");
    return out;
}

WeightFunction pushforward(const WeightFunction& wf, const Homomorphism& phi) {
    if (!(wf.graph() == phi.source()))
        throw std::invalid_argument("pushforward: weight function not on phi's source");
    std::vector<Rat> w(phi.target().vertex_count(), Rat(0));
    for (int v = 0; v < phi.source().vertex_count(); ++v) w[phi.image(v)] += wf.weight(v);
    return WeightFunction(phi.target_ptr(), std::move(w));
}

Half lift_half(const Half& s_h, const Homomorphism& phi, const WeightFunction& wf) {
    if (!(s_h.graph() == phi.target()))
        throw std::invalid_argument("lift_half: half not on phi's target");
    if (!(wf.graph() == phi.source()))
        throw std::invalid_argument("lift_half: weight function not on phi's source");
    const WeightFunction pushed = pushforward(wf, phi);
    std::vector<Rat> s(phi.source().vertex_count());
    for (int v = 0; v < phi.source().vertex_count(); ++v) {
        const int t = phi.image(v);
        if (pushed.weight(t) == 0) {
            if (s_h.value(t) != 0)
                throw ConstraintError("lift_half: positive half value on zero-weight fiber");
            s[v] = 0;
        } else {
            s[v] = wf.weight(v) / pushed.weight(t) * s_h.value(t);
        }
    }
    return Half(wf, std::move(s));
}

HalfDistribution::HalfDistribution(std::vector<std::pair<Half, Rat>> halves)
    : halves_(std::move(halves)) {
    if (halves_.empty()) throw std::invalid_argument("distribution: no halves");
    Rat total = 0;
    const Graph& g = halves_.front().first.graph();
    const auto& w = halves_.front().first.bound().weights();
    for (const auto& [half, p] : halves_) {
        if (p < 0) throw ConstraintError("distribution: negative probability");
        total += p;
        if (!(half.graph() == g) || half.bound().weights() != w)
            throw std::invalid_argument("distribution: halves disagree on graph or weights");
    }
    if (total != 1) throw ConstraintError("distribution: probabilities must sum to 1");
}

Rat expected_edge_mass(const HalfDistribution& dist) {
    Rat total = 0;
    for (const auto& [half, p] : dist.halves()) total += p * edge_mass(half);
    return total;
}

Rat uniformity_constant(const HalfDistribution& dist) {
    const Graph& g = dist.graph();
    const WeightFunction& wf = dist.bound();
    bool any = false;
    Rat best = 0;
    for (const auto& [u, v] : g.edges()) {
        const Rat we = wf.weight(u) * wf.weight(v);
        if (we == 0) continue;
        Rat expected = 0;
        for (const auto& [half, p] : dist.halves())
            expected += p * half.value(u) * half.value(v);
        const Rat ratio = expected / we;
        if (!any || ratio < best) best = ratio;
        any = true;
    }
    return any ? best : Rat(1);
}

}  // namespace sparsehalf
