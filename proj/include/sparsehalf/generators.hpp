#pragma once

#include <utility>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace sparsehalf {

/// The circulant graph F_d on 3d-1 vertices: vertex u is adjacent to
/// u+d, ..., u+2d-1 (mod 3d-1). F_1 = K2, F_2 = C5, F_3 is the Moebius
/// ladder. d-regular; every neighborhood is a window of d consecutive
/// vertices.
Graph make_fd(int d);

/// The Petersen graph, labeled so that 0..4 is the outer 5-cycle, 5..9 the
/// inner pentagram (i+5 ~ ((i+2) mod 5)+5) and i ~ i+5 the spokes.
Graph make_petersen();

/// Convenience: F_2 with the same labeling used throughout (u ~ u+2, u+3).
Graph make_c5();

/// H extended by one vertex per maximum independent set that is not a
/// vertex neighborhood, attached to exactly that set.
struct StarExtension {
    Graph base;
    Graph extension;
    /// (index of the added vertex in `extension`, the set it represents),
    /// in lexicographic order of the represented sets.
    std::vector<std::pair<int, VertexSet>> added;
};

/// Builds H*. Enumeration guard v(h) <= 64.
StarExtension star_extension(const Graph& h);

/// True iff every two maximum independent sets of h that are not vertex
/// neighborhoods share a vertex (vacuously true when there are <= 1).
bool is_entwined(const Graph& h);

struct FdFactReport {
    int d = 0;
    bool triangle_free = false;
    bool three_colorable = false;
    bool alpha_is_d = false;
    bool mis_are_neighborhoods = false;
    int mis_count = 0;
    bool pass = false;
};

/// Checks the structural facts the constructions rely on: F_d is
/// triangle-free, 3-colorable, alpha(F_d) = d and the maximum independent
/// sets are exactly the vertex neighborhoods. Guarded to d <= 9.
FdFactReport fd_fact_check(int d);

/// Exact k-colorability by backtracking (used with k = 3).
bool is_k_colorable(const Graph& g, int k);

}  // namespace sparsehalf
