#include "sparsehalf/sampling.hpp"

#include <algorithm>
#include <set>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"

namespace sparsehalf {

std::vector<Rat> sample_fd_weighting(int d, Rng& rng) {
    const int n = 3 * d - 1;
    // Deviation caps sized to the slack between the uniform degree d/(3d-1)
    // and 5/14; d = 5 has no slack and stays uniform.
    Rat dev;
    switch (d) {
        case 1: dev = Rat(1, 4); break;
        case 2: dev = Rat(1, 50); break;
        case 3: dev = Rat(1, 200); break;
        case 4: dev = Rat(1, 700); break;
        default: dev = Rat(0); break;
    }
    const Rat bound(5, 14);
    auto degree_ok = [&](const std::vector<Rat>& w) {
        for (int i = 0; i < n; ++i) {
            Rat window = 0;
            for (int t = 0; t < d; ++t) window += w[(i + t) % n];
            if (window < bound) return false;
        }
        return true;
    };
    if (d == 1) {
        // No degree constraint to speak of; any weighting works.
        return sample_weights(n, dev, 40, rng, [](const std::vector<Rat>&) { return true; });
    }
    return sample_weights(n, dev, 40, rng, degree_ok);
}

std::vector<Rat> sample_balanced_c5(Rng& rng) {
    return sample_weights(5, Rat(1, 50), 40, rng,
                          [](const std::vector<Rat>&) { return true; });
}

std::vector<Rat> sample_balanced_pstar(Rng& rng) {
    // Common denominator 5000: base vertices at 500 +- 10, stars in [0, 10].
    const long long den = 5000;
    std::vector<long long> a(15, 0);
    std::vector<long long> lo(15, 0), hi(15, 10);
    for (int v = 0; v < 10; ++v) {
        a[v] = 500;
        lo[v] = 490;
        hi[v] = 510;
    }
    for (int step = 0; step < 60; ++step) {
        const int i = static_cast<int>(rng.below(15));
        const int j = static_cast<int>(rng.below(15));
        if (i == j) continue;
        const long long room = std::min(a[i] - lo[i], hi[j] - a[j]);
        if (room <= 0) continue;
        const long long t = static_cast<long long>(rng.below(room + 1));
        a[i] -= t;
        a[j] += t;
    }
    std::vector<Rat> w;
    w.reserve(15);
    for (long long x : a) w.emplace_back(x, den);
    return w;
}

std::vector<int> sample_fd_blowup_sizes(int d, int max_n, Rng& rng) {
    const int k = 3 * d - 1;
    if (max_n < k) throw std::invalid_argument("sample_fd_blowup_sizes: max_n < 3d-1");
    const int base = max_n / k;
    auto degree_ok = [&](const std::vector<int>& sizes) {
        const Graph fd = make_fd(d);
        long long n = 0;
        for (int s : sizes) n += s;
        for (int v = 0; v < k; ++v) {
            long long deg = 0;
            for (int u : fd.neighbors(v)) deg += sizes[u];
            if (14 * deg < 5 * n) return false;
        }
        return true;
    };
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> sizes(k);
        int total = 0;
        for (int i = 0; i < k; ++i) {
            sizes[i] = 1 + static_cast<int>(rng.below(base));
            total += sizes[i];
        }
        if (total <= max_n && degree_ok(sizes)) return sizes;
    }
    return std::vector<int>(k, base);  // uniform sizes always qualify
}

Graph sample_gnp(int n, int p_num, int p_den, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng.below(p_den)) < p_num) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

namespace {

Graph rebuild(int n, const std::set<Edge>& edges) {
    return Graph::from_edges(n, {edges.begin(), edges.end()});
}

bool creates_triangle(const std::set<Edge>& edges, int n, int u, int v) {
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const Edge uw{std::min(u, w), std::max(u, w)};
        const Edge vw{std::min(v, w), std::max(v, w)};
        if (edges.count(uw) && edges.count(vw)) return true;
    }
    return false;
}

}  // namespace

Graph random_triangle_free_flips(const Graph& g, int max_flips, Rng& rng) {
    const int n = g.vertex_count();
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (int step = 0; step < max_flips; ++step) {
        if (rng.below(5) < 4) {
            if (edges.empty()) continue;
            auto it = edges.begin();
            std::advance(it, rng.below(edges.size()));
            edges.erase(it);
        } else {
            const int u = static_cast<int>(rng.below(n));
            const int v = static_cast<int>(rng.below(n));
            if (u == v) continue;
            const Edge e{std::min(u, v), std::max(u, v)};
            if (edges.count(e)) continue;
            if (creates_triangle(edges, n, e.first, e.second)) continue;
            edges.insert(e);
        }
    }
    return rebuild(n, edges);
}

Graph concentrated_removals(const Graph& g, int count, Rng& rng) {
    const int n = g.vertex_count();
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    const int center = static_cast<int>(rng.below(n));
    std::vector<Edge> incident;
    for (int u : g.neighbors(center))
        incident.emplace_back(std::min(center, u), std::max(center, u));
    for (int i = 0; i < count && !incident.empty(); ++i) {
        const std::size_t pick = rng.below(incident.size());
        edges.erase(incident[pick]);
        incident.erase(incident.begin() + static_cast<long>(pick));
    }
    return rebuild(n, edges);
}

}  // namespace sparsehalf
