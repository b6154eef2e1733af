#include "sparsehalf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

namespace {

struct HalfSearch {
    const Graph& g;
    int n;
    int k;
    std::vector<std::uint64_t> adj;
    long long best_value;
    std::uint64_t best_mask = 0;
    bool found = false;

    HalfSearch(const Graph& graph, long long upper_seed)
        : g(graph), n(graph.vertex_count()), k(graph.vertex_count() / 2),
          best_value(upper_seed) {
        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
    }

    long long completion_bound(int idx, int need, std::uint64_t chosen) const {
        // Sum of the `need` smallest degrees-into-chosen among the suffix;
        // edges among the future vertices themselves are ignored, so this
        // is a valid lower bound.
        int freq[41] = {0};
        for (int v = idx; v < n; ++v)
            ++freq[std::popcount(adj[v] & chosen)];
        long long bound = 0;
        for (int d = 0; d <= 40 && need > 0; ++d) {
            const int take = std::min(need, freq[d]);
            bound += static_cast<long long>(take) * d;
            need -= take;
        }
        return bound;
    }

    void run(int idx, int cnt, long long edges, std::uint64_t chosen) {
        if (cnt == k) {
            if (edges < best_value) {
                best_value = edges;
                best_mask = chosen;
                found = true;
            }
            return;
        }
        if (n - idx < k - cnt) return;
        if (edges + completion_bound(idx, k - cnt, chosen) >= best_value) return;
        // Include-first keeps the first recorded optimum lexicographically
        // smallest.
        run(idx + 1, cnt + 1, edges + std::popcount(adj[idx] & chosen),
            chosen | (std::uint64_t{1} << idx));
        run(idx + 1, cnt, edges, chosen);
    }
};

long long greedy_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    const int k = n / 2;
    std::uint64_t chosen = 0;
    long long edges = 0;
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        int pick_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (chosen & (std::uint64_t{1} << v)) continue;
            const int d = std::popcount(g.neighbor_mask(v) & chosen);
            if (pick < 0 || d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        chosen |= std::uint64_t{1} << pick;
        edges += pick_deg;
    }
    return edges;
}

}  // namespace

HalfEdgesResult min_half_edges(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 40) throw ResourceLimitError("min_half_edges: n > 40");
    HalfEdgesResult out;
    out.best_set.n = n;
    if (n / 2 == 0) return out;

    HalfSearch search(g, greedy_upper_bound(g) + 1);
    search.run(0, 0, 0, 0);
    out.count = search.best_value;
    std::uint64_t mask = search.best_mask;
    while (mask) {
        out.best_set.members.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

bool conjecture_check(const Graph& g) {
    if (!is_triangle_free(g))
        throw HypothesisError("conjecture_check: graph contains a triangle");
    const long long n = g.vertex_count();
    return min_half_edges(g).count * 50 <= n * n;
}

namespace {

Rat half_mass(const Graph& g, const std::vector<Rat>& s) {
    Rat total = 0;
    for (const auto& [u, v] : g.edges()) total += s[u] * s[v];
    return total;
}

}  // namespace

Half fractional_descent(const WeightFunction& wf, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("fractional_descent: restarts < 1");
    const Graph& g = wf.graph();
    const int n = g.vertex_count();
    std::mt19937_64 rng(seed);

    std::vector<Rat> best;
    Rat best_mass;
    for (int r = 0; r < restarts; ++r) {
        // Random greedy fill to exactly 1/2.
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng() % (i + 1)]);
        std::vector<Rat> s(n, Rat(0));
        Rat remaining(1, 2);
        for (int v : order) {
            const Rat take = std::min(remaining, wf.weight(v));
            s[v] = take;
            remaining -= take;
            if (remaining == 0) break;
        }

        // Pairwise transfer descent: move mass from the donor with the
        // heavier s-weighted neighborhood whenever that strictly decreases
        // the edge mass; capped to stay safe against slow descents.
        std::vector<Rat> nbhd(n);
        for (int iter = 0; iter < 1000; ++iter) {
            for (int v = 0; v < n; ++v) {
                Rat total = 0;
                for (int u : g.neighbors(v)) total += s[u];
                nbhd[v] = total;
            }
            bool moved = false;
            for (int u = 0; u < n && !moved; ++u) {
                if (s[u] == 0) continue;
                for (int v = 0; v < n && !moved; ++v) {
                    if (u == v || s[v] >= wf.weight(v)) continue;
                    const bool adjacent = g.has_edge(u, v);
                    if (nbhd[u] < nbhd[v]) continue;
                    if (nbhd[u] == nbhd[v] && !adjacent) continue;
                    const Rat delta = std::min(s[u], wf.weight(v) - s[v]);
                    // Mass change: -delta (nbhd(u) - nbhd(v)) - [adjacent] delta^2.
                    s[u] -= delta;
                    s[v] += delta;
                    moved = true;
                }
            }
            if (!moved) break;
        }
        const Rat mass = half_mass(g, s);
        if (best.empty() || mass < best_mass) {
            best = std::move(s);
            best_mass = mass;
        }
    }
    return Half(wf, std::move(best));
}

}  // namespace sparsehalf
