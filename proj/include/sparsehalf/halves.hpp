#pragma once

#include <array>
#include <memory>
#include <vector>

#include "sparsehalf/generators.hpp"
#include "sparsehalf/weighted.hpp"

namespace sparsehalf {

/// A weighting of F_d, as consumed by the explicit half constructions.
struct FdWeighting {
    int d = 0;
    WeightFunction wf;
};

/// Validates the vertex count against 3d-1 and builds the F_d graph.
FdWeighting make_fd_weighting(int d, std::vector<Rat> w);

/// The explicit half families for (F_d, omega), 1 <= d <= 5.
///   d=1: the heavier vertex carries the whole half.
///   d=2..4: a consecutive window of d vertices of weight >= 1/2 yields a
///           single zero-mass half; otherwise the cyclic window families of
///           5, 8 or 11 halves.
///   d=5: weights are forced uniform and v_1..v_7 carry the half.
/// The minimum-degree hypothesis (>= 5/14) is required for d in {3,4,5};
/// every returned object satisfies the half invariants by construction.
std::vector<Half> construct_fd_halves(const FdWeighting& fw);

/// The minimum-edge-mass half among construct_fd_halves(fw), ties to the
/// lowest index. Raises TheoremViolationError if none has mass <= 1/50,
/// which would falsify the weighted minimum-degree theorem.
Half best_sparse_half_fd(const FdWeighting& fw);

/// The five-window distribution on a (1/50)-balanced weighting of C5, each
/// half with probability 1/5. Certifies expected edge mass <= 1/50 and
/// uniformity constant >= 1/30 before returning.
HalfDistribution c5_uniform_distribution(const WeightFunction& wf);

/// One term of the P* half family: star w_i, the chosen independent triple
/// inside the matching M_i, and the unique partner star adjacent to the
/// complementary triple. Ordinals index the added vertices of P* (vertex
/// 10 + ordinal).
struct PstarEntry {
    int star = 0;
    std::array<int, 3> triple{};
    int partner = 0;
};

struct PstarStructure {
    StarExtension star_ext;          // star extension of the Petersen graph
    std::vector<PstarEntry> entries; // exactly 20, ordered by (star, triple)
};

/// Derives the admissible triples of the 20-half family from the graph
/// structure itself: M_i = V(P) \ N(w_i) must induce a matching of size
/// three and each star must admit exactly four independent transversals
/// whose complement lies inside a unique other star's neighborhood.
PstarStructure pstar_structure();

/// The 20-half distribution on a (1/500)-balanced weighting of P*, each
/// half with probability 1/20. Certifies expected edge mass <= 1/50 and
/// uniformity constant >= 1/80 before returning.
HalfDistribution pstar_uniform_distribution(const WeightFunction& wf);

/// End-to-end: for a triangle-free graph with minimum degree >= 5n/14,
/// returns floor(n/2) vertices spanning at most n^2/50 edges via the
/// surjective-homomorphism / pushforward / lift / rounding pipeline.
VertexSet sparse_half_min_degree(std::shared_ptr<const Graph> g);

}  // namespace sparsehalf
