#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Deterministic RNG wrapper; all randomized code in the library draws
/// through this so that identical seeds reproduce identical runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

/// Exact-rational weights over a common denominator, kept within
/// max_deviation of uniform, produced by random feasibility-preserving
/// transfers from the uniform point. Every proposal violating `accept` is
/// rejected, so the result always satisfies the predicate (the uniform
/// point must).
template <typename Accept>
std::vector<Rat> sample_weights(int n, const Rat& max_deviation, int transfers,
                                Rng& rng, Accept accept);

/// Random weighting of F_d (3d-1 vertices) with weighted minimum degree
/// at least 5/14. For d = 5 the constraint forces the uniform weighting.
std::vector<Rat> sample_fd_weighting(int d, Rng& rng);

/// Random (1/50)-balanced weighting of C5.
std::vector<Rat> sample_balanced_c5(Rng& rng);

/// Random (1/500)-balanced weighting of P* (15 vertices, stars last).
std::vector<Rat> sample_balanced_pstar(Rng& rng);

/// Random sizes vector for a blowup of F_d whose blowup has minimum degree
/// >= 5n/14 and at most max_n vertices.
std::vector<int> sample_fd_blowup_sizes(int d, int max_n, Rng& rng);

/// Random graph G(n, p) with p = p_num / p_den.
Graph sample_gnp(int n, int p_num, int p_den, Rng& rng);

/// Applies up to max_flips random edge flips that keep the graph
/// triangle-free; removals always qualify, insertions are checked.
Graph random_triangle_free_flips(const Graph& g, int max_flips, Rng& rng);

/// As above but biased: concentrates removals at one random vertex, which
/// pushes that vertex into the covering set J of the disturbed-pair
/// construction.
Graph concentrated_removals(const Graph& g, int count, Rng& rng);

// ---- template implementation ----

template <typename Accept>
std::vector<Rat> sample_weights(int n, const Rat& max_deviation, int transfers,
                                Rng& rng, Accept accept) {
    // Work over the common denominator n * unit so transfers stay exact.
    const long long unit = 27720;  // divisible by 2..12; keeps numbers small
    std::vector<long long> a(n, unit);
    const long long total = static_cast<long long>(n) * unit;
    // |w - 1/n| <= max_deviation  <=>  |a_v - unit| <= max_deviation * total.
    const Rat cap_rat = max_deviation * total;
    const long long cap = cap_rat.convert_to<long long>();

    auto to_rats = [&](const std::vector<long long>& v) {
        std::vector<Rat> w;
        w.reserve(n);
        for (long long x : v) w.emplace_back(x, total);
        return w;
    };

    for (int step = 0; step < transfers; ++step) {
        const int i = static_cast<int>(rng.below(n));
        const int j = static_cast<int>(rng.below(n));
        if (i == j) continue;
        const long long room =
            std::min(a[i] - (unit - cap), (unit + cap) - a[j]);
        if (room <= 0) continue;
        const long long t = static_cast<long long>(rng.below(room + 1));
        a[i] -= t;
        a[j] += t;
        if (!accept(to_rats(a))) {  // reject the proposal
            a[i] += t;
            a[j] -= t;
        }
    }
    return to_rats(a);
}

}  // namespace sparsehalf
