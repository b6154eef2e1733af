#include "sparsehalf/disturbed.hpp"

#include <algorithm>
#include <set>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

namespace {

// count >= sqrt(delta) n without square roots (both sides nonnegative).
bool at_least_sqrt_delta_n(long long count, long long n, const Rat& delta) {
    return Rat(count) * count >= delta * n * n;
}

bool above_sqrt_delta_n(long long count, long long n, const Rat& delta) {
    return Rat(count) * count > delta * n * n;
}

}  // namespace

DisturbedPair build_disturbed_pair(std::shared_ptr<const Graph> g, const Graph& h,
                                   const Partition& partition, const Rat& delta) {
    if (delta <= 0) throw std::invalid_argument("build_disturbed_pair: delta must be positive");
    if (!is_triangle_free(*g))
        throw HypothesisError("build_disturbed_pair: g contains a triangle");
    {
        const auto mc = maximality_class(h);
        if (!mc.is_maximal)
            throw HypothesisError("build_disturbed_pair: template is not maximal triangle-free");
    }
    const int n = g->vertex_count();
    const int k = h.vertex_count();

    StarExtension star = star_extension(h);
    const Graph hv = blowup_along_partition(h, partition);

    std::vector<Edge> f_edges;
    std::set_symmetric_difference(g->edges().begin(), g->edges().end(),
                                  hv.edges().begin(), hv.edges().end(),
                                  std::back_inserter(f_edges));

    std::vector<long long> f_degree(n, 0);
    for (const auto& [u, v] : f_edges) {
        ++f_degree[u];
        ++f_degree[v];
    }
    VertexSet j_set{n, {}};
    for (int v = 0; v < n; ++v) {
        if (at_least_sqrt_delta_n(f_degree[v], n, delta)) j_set.members.push_back(v);
    }
    // 1/2 sqrt(delta) n |J| <= |F| <= delta n^2 forces |J| <= 2 sqrt(delta) n.
    if (Rat(static_cast<long long>(f_edges.size())) <= delta * n * n &&
        Rat(j_set.size()) * j_set.size() > 4 * delta * Rat(n) * n) {
        throw TheoremViolationError("build_disturbed_pair: |J| exceeds 2 sqrt(delta) n");
    }

    std::vector<int> block_of(n, -1);
    for (int i = 0; i < k; ++i) {
        for (int v : partition.blocks[i]) block_of[v] = i;
    }

    // Map each added star vertex's represented set to its index.
    auto star_index_of = [&](const std::vector<int>& set) {
        for (const auto& [idx, members] : star.added) {
            if (members.members == set) return idx;
        }
        return -1;
    };

    std::vector<int> map(n, -1);
    std::vector<int> fallback;
    for (int v = 0; v < n; ++v) {
        if (!j_set.contains(v)) {
            map[v] = block_of[v];
            continue;
        }
        // I_0(v): blocks receiving more than sqrt(delta) n edges from v.
        std::vector<long long> into_block(k, 0);
        for (int u : g->neighbors(v)) ++into_block[block_of[u]];
        std::vector<int> i0;
        for (int i = 0; i < k; ++i) {
            if (above_sqrt_delta_n(into_block[i], n, delta)) i0.push_back(i);
        }
        for (std::size_t a = 0; a < i0.size(); ++a) {
            for (std::size_t b = a + 1; b < i0.size(); ++b) {
                if (h.has_edge(i0[a], i0[b]))
                    throw ConstraintError("build_disturbed_pair: I_0(v) is not independent");
            }
        }
        // Lexicographically smallest maximal independent superset.
        std::vector<int> iv = i0;
        for (int u = 0; u < k; ++u) {
            if (std::find(iv.begin(), iv.end(), u) != iv.end()) continue;
            if (std::none_of(iv.begin(), iv.end(),
                             [&](int x) { return h.has_edge(u, x); }))
                iv.push_back(u);
        }
        std::sort(iv.begin(), iv.end());

        int image = -1;
        for (int i = 0; i < k; ++i) {
            if (h.neighbors(i) == iv) { image = i; break; }
        }
        if (image < 0) image = star_index_of(iv);
        if (image < 0) {
            // Maximal but not maximum and no vertex realizes it exactly;
            // absorb into the smallest base vertex whose neighborhood
            // contains the set.
            for (int i = 0; i < k && image < 0; ++i) {
                if (std::includes(h.neighbors(i).begin(), h.neighbors(i).end(),
                                  iv.begin(), iv.end()))
                    image = i;
            }
            if (image < 0)
                throw ConstraintError(
                    "build_disturbed_pair: no vertex of H* accommodates I(v)");
            fallback.push_back(v);
        }
        map[v] = image;
    }

    // G' is the full preimage of E(H*) under the vertex map.
    const Graph& hs = star.extension;
    std::vector<Edge> g_prime_edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (hs.has_edge(map[u], map[v])) g_prime_edges.emplace_back(u, v);
        }
    }
    auto g_prime = std::make_shared<const Graph>(
        Graph::from_edges(n, std::move(g_prime_edges)));
    auto hs_ptr = std::make_shared<const Graph>(hs);
    Homomorphism phi(g_prime, hs_ptr, std::move(map));

    return DisturbedPair{std::move(g), g_prime,          std::move(phi),
                         std::move(j_set), std::move(star), std::move(f_edges),
                         delta,            std::move(fallback)};
}

DisturbedVerification verify_disturbed(const DisturbedPair& dp, const Rat& eps) {
    DisturbedVerification out;
    out.disturbed = is_eps_disturbed(*dp.g, *dp.g_prime, eps);

    const WeightFunction pushed =
        pushforward(WeightFunction::uniform(dp.g_prime), dp.phi);
    const int base_n = dp.star.base.vertex_count();
    out.max_base_deviation = 0;
    out.max_star_weight = 0;
    for (int t = 0; t < dp.star.extension.vertex_count(); ++t) {
        if (t < base_n) {
            Rat dev = pushed.weight(t) - Rat(1, base_n);
            if (dev < 0) dev = -dev;
            out.max_base_deviation = std::max(out.max_base_deviation, dev);
        } else {
            out.max_star_weight = std::max(out.max_star_weight, pushed.weight(t));
        }
    }
    out.balanced = out.max_base_deviation <= eps && out.max_star_weight <= eps;

    out.strong = true;
    const Graph& gp = *dp.g_prime;
    for (int u = 0; u < gp.vertex_count() && out.strong; ++u) {
        for (int v = u + 1; v < gp.vertex_count(); ++v) {
            if (gp.has_edge(u, v)) continue;
            if (dp.star.extension.has_edge(dp.phi.image(u), dp.phi.image(v))) {
                out.strong = false;
                out.strong_violation = Edge{u, v};
                break;
            }
        }
    }
    out.all_pass = out.disturbed.holds && out.balanced && out.strong;
    return out;
}

}  // namespace sparsehalf
