#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sparsehalf/approximation.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// The constructive output of the disturbed-subgraph theorem: a graph G'
/// on the same vertices, a strong homomorphism of G' into the star
/// extension H*, and the covering set J of vertices incident to many
/// difference edges.
struct DisturbedPair {
    std::shared_ptr<const Graph> g;
    std::shared_ptr<const Graph> g_prime;
    Homomorphism phi;  // from g_prime into star.extension
    VertexSet j_set;
    StarExtension star;
    std::vector<Edge> f_edges;  // E(g) symmetric-difference E(H_V)
    Rat delta;
    /// Vertices whose extended independent set was maximal but not maximum
    /// and had to be absorbed into a base vertex's neighborhood.
    std::vector<int> fallback_vertices;
};

/// Builds G', phi and J from a partition of g into blocks indexed by V(h):
/// J collects the vertices incident to at least sqrt(delta) n edges of
/// E(g) symmetric-difference E(H_V); a vertex of J is remapped through the
/// maximal independent set extending the blocks it sends many edges into.
/// h must be maximal triangle-free and g triangle-free.
DisturbedPair build_disturbed_pair(std::shared_ptr<const Graph> g, const Graph& h,
                                   const Partition& partition, const Rat& delta);

struct DisturbedVerification {
    DisturbedReport disturbed;       // conclusion (i)
    bool balanced = false;           // conclusion (ii)
    Rat max_base_deviation;          // witness for (ii), base vertices
    Rat max_star_weight;             // witness for (ii), added vertices
    bool strong = false;             // conclusion (iii)
    std::optional<Edge> strong_violation;
    bool all_pass = false;
};

/// Checks the three conclusions at a given eps: g is an eps-disturbed
/// subgraph of g', the pushforward of uniform weights is eps-balanced on
/// H*, and phi is a strong homomorphism.
DisturbedVerification verify_disturbed(const DisturbedPair& dp, const Rat& eps);

}  // namespace sparsehalf
