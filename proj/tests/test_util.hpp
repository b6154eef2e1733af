#pragma once

// Brute-force oracles used to pin expected values independently of the
// library's own algorithms. Deliberately slow and obvious.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace testutil {

inline bool brute_triangle_free(const sparsehalf::Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    return false;
    return true;
}

// All maximum independent sets by full subset enumeration; n <= 20.
inline std::vector<std::vector<int>> brute_max_independent_sets(const sparsehalf::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> best;
    std::size_t best_size = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) members.push_back(v);
        bool independent = true;
        for (std::size_t i = 0; i < members.size() && independent; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.has_edge(members[i], members[j])) { independent = false; break; }
        if (!independent) continue;
        if (members.size() > best_size) {
            best_size = members.size();
            best.clear();
        }
        if (members.size() == best_size) best.push_back(members);
    }
    std::sort(best.begin(), best.end());
    return best;
}

// Exact minimum of e(G[S]) over |S| = floor(n/2); n <= 20.
inline long long brute_min_half_edges(const sparsehalf::Graph& g) {
    const int n = g.vertex_count();
    const int k = n / 2;
    long long best = -1;
    std::vector<int> pick(k);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        long long edges = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(idx[i], idx[j])) ++edges;
        if (best < 0 || edges < best) best = edges;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return best < 0 ? 0 : best;
}

// Minimum vertex cover size of an edge set by subset enumeration over the
// endpoints; suitable for |f| small.
inline int brute_min_vertex_cover(const std::vector<sparsehalf::Edge>& f) {
    std::vector<int> verts;
    for (const auto& [u, v] : f) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const int m = static_cast<int>(verts.size());
    int best = m;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool covers = true;
        for (const auto& [u, v] : f) {
            const int iu = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) -
                                            verts.begin());
            const int iv = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                            verts.begin());
            if (!(mask & (1u << iu)) && !(mask & (1u << iv))) { covers = false; break; }
        }
        if (covers) best = std::min(best, std::popcount(mask));
    }
    return best;
}

inline sparsehalf::Graph cycle(int n) {
    std::vector<sparsehalf::Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return sparsehalf::Graph::from_edges(n, std::move(edges));
}

inline sparsehalf::Graph complete(int n) {
    std::vector<sparsehalf::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return sparsehalf::Graph::from_edges(n, std::move(edges));
}

inline sparsehalf::Graph complete_bipartite(int a, int b) {
    std::vector<sparsehalf::Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return sparsehalf::Graph::from_edges(a + b, std::move(edges));
}

// Bipartite circulant with sides {0..side-1} and {side..2side-1}: left i is
// joined to right (i + t) mod side for t = 0..deg-1. Regular of degree deg.
inline sparsehalf::Graph bipartite_circulant(int side, int deg) {
    std::vector<sparsehalf::Edge> edges;
    for (int i = 0; i < side; ++i)
        for (int t = 0; t < deg; ++t) edges.emplace_back(i, side + (i + t) % side);
    return sparsehalf::Graph::from_edges(2 * side, std::move(edges));
}

}  // namespace testutil
