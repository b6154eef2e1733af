#pragma once

#include <cstdint>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/weighted.hpp"

namespace sparsehalf {

struct HalfEdgesResult {
    VertexSet best_set;  // lexicographically first optimum
    long long count = 0;
};

/// Exact minimum of e(G[S]) over all sets of floor(n/2) vertices, by branch
/// and bound with a smallest-degrees-into-the-partial-set completion bound.
/// Guard n <= 40.
HalfEdgesResult min_half_edges(const Graph& g);

/// 50 * min_half_edges <= n^2, in exact integers. Requires triangle-free.
bool conjecture_check(const Graph& g);

/// Heuristic minimizer over fractional halves: random starts followed by
/// pairwise mass-transfer descent to a local minimum; best over restarts.
Half fractional_descent(const WeightFunction& wf, int restarts, std::uint64_t seed);

}  // namespace sparsehalf
