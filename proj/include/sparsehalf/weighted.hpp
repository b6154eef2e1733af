#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Nonnegative vertex weights summing to exactly 1. Zero weights are
/// accepted: balanced weightings of star extensions may vanish on the
/// added vertices even though plain weight functions are positive.
class WeightFunction {
public:
    WeightFunction(std::shared_ptr<const Graph> g, std::vector<Rat> w);

    static WeightFunction uniform(std::shared_ptr<const Graph> g);

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    const Rat& weight(int v) const { return w_[v]; }
    const std::vector<Rat>& weights() const { return w_; }

    /// omega(N(v)).
    Rat neighborhood_weight(int v) const;

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Rat> w_;
};

/// min over v of omega(N(v)).
Rat weighted_min_degree(const WeightFunction& wf);

/// A vertex function s with 0 <= s(v) <= omega(v) and total exactly 1/2.
/// Carries the weight function it is a half of.
class Half {
public:
    Half(WeightFunction bound, std::vector<Rat> s);

    const Graph& graph() const { return bound_.graph(); }
    const WeightFunction& bound() const { return bound_; }
    const Rat& value(int v) const { return s_[v]; }
    const std::vector<Rat>& values() const { return s_; }

private:
    WeightFunction bound_;
    std::vector<Rat> s_;
};

/// s(E(G)) = sum over edges of s(u) s(v), exact.
Rat edge_mass(const Half& h);

/// edge_mass(h) <= 1/50, exact comparison.
bool is_sparse_half(const Half& h);

/// Rounds a sparse half of a uniformly weighted graph to a vertex set of
/// size floor(n/2) spanning at most n^2/50 edges. Repeatedly transfers mass
/// between two fractional vertices, from the one whose s-weighted
/// neighborhood is larger (ties resolved toward the lower-indexed vertex);
/// each transfer is asserted not to increase the edge mass.
VertexSet round_half_to_set(const Half& h);

/// omega_phi(v) = omega(phi^{-1}(v)). Requires the weight function to live
/// on phi's source graph.
WeightFunction pushforward(const WeightFunction& wf, const Homomorphism& phi);

/// Lifts a half on (H, omega_phi) to a half on (G, omega):
/// s_G(v) = omega(v) / omega_phi(phi(v)) * s_H(phi(v)). A positive s_H on a
/// zero-weight fiber raises ConstraintError (degenerate fiber).
Half lift_half(const Half& s_h, const Homomorphism& phi, const WeightFunction& wf);

/// Finite distribution over halves of one weighted graph; probabilities are
/// nonnegative and sum to exactly 1.
class HalfDistribution {
public:
    HalfDistribution(std::vector<std::pair<Half, Rat>> halves);

    const std::vector<std::pair<Half, Rat>>& halves() const { return halves_; }
    const Graph& graph() const { return halves_.front().first.graph(); }
    const WeightFunction& bound() const { return halves_.front().first.bound(); }

private:
    std::vector<std::pair<Half, Rat>> halves_;
};

/// E[s(E(G))].
Rat expected_edge_mass(const HalfDistribution& dist);

/// min over edges e of E[s(e)] / omega(e). Edges of zero omega-mass are
/// skipped (the defining inequality is vacuous there); if every edge is
/// skipped the constant is reported as 1, the largest admissible c.
Rat uniformity_constant(const HalfDistribution& dist);

}  // namespace sparsehalf
