#include <doctest.h>

#include <memory>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/sampling.hpp"
#include "test_util.hpp"

using namespace sparsehalf;

namespace {

std::shared_ptr<const Graph> share(Graph g) {
    return std::make_shared<const Graph>(std::move(g));
}

}  // namespace

TEST_CASE("min_half_edges on the extremal instances") {
    const auto pet = min_half_edges(make_petersen());
    CHECK(pet.count == 2);
    CHECK(pet.best_set.size() == 5);

    CHECK(min_half_edges(make_c5()).count == 0);

    const auto c5b = min_half_edges(blowup(make_c5(), {4, 4, 4, 4, 4}).graph);
    CHECK(c5b.count == 8);
}

TEST_CASE("min_half_edges matches brute force on random graphs") {
    Rng rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(9));
        const Graph g = sample_gnp(n, 2, 5, rng);
        CHECK(min_half_edges(g).count == testutil::brute_min_half_edges(g));
    }
}

TEST_CASE("min_half_edges witness is lexicographically first") {
    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6 + static_cast<int>(rng.below(5));
        const Graph g = sample_gnp(n, 1, 2, rng);
        const auto result = min_half_edges(g);
        // Recompute by explicit lexicographic scan.
        const int k = n / 2;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        std::vector<int> first_opt;
        for (;;) {
            long long edges = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (g.has_edge(idx[i], idx[j])) ++edges;
            if (edges == result.count) {
                first_opt = idx;
                break;
            }
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        CHECK(result.best_set.members == first_opt);
    }
}

TEST_CASE("min_half_edges is isomorphism invariant") {
    Rng rng(67);
    const Graph g = blowup(make_c5(), {2, 2, 2, 2, 2}).graph;
    const long long base = min_half_edges(g).count;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> perm(10);
        for (int i = 0; i < 10; ++i) perm[i] = i;
        for (int i = 9; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
        std::vector<Edge> edges;
        for (const auto& [u, v] : g.edges())
            edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
        CHECK(min_half_edges(Graph::from_edges(10, edges)).count == base);
    }
}

TEST_CASE("min_half_edges guard") {
    CHECK_THROWS_AS(min_half_edges(Graph::from_edges(41, {})), ResourceLimitError);
}

TEST_CASE("conjecture_check") {
    CHECK(conjecture_check(make_petersen()));
    CHECK(conjecture_check(blowup(make_petersen(), std::vector<int>(10, 2)).graph));
    CHECK(min_half_edges(blowup(make_petersen(), std::vector<int>(10, 2)).graph).count == 8);
    CHECK(conjecture_check(testutil::complete_bipartite(6, 6)));
    CHECK_THROWS_AS(conjecture_check(testutil::complete(3)), HypothesisError);
}

TEST_CASE("fractional_descent reaches sparse mass on the extremal graphs") {
    const WeightFunction c5 = WeightFunction::uniform(share(make_c5()));
    const Half best_c5 = fractional_descent(c5, 20, 13);
    CHECK(edge_mass(best_c5) <= Rat(1, 50));

    const WeightFunction pet = WeightFunction::uniform(share(make_petersen()));
    const Half best_pet = fractional_descent(pet, 20, 13);
    CHECK(edge_mass(best_pet) <= Rat(1, 50));
}

TEST_CASE("fractional_descent finds zero mass on a heavy independent set") {
    const WeightFunction wf(share(make_c5()),
                            {Rat(1, 4), Rat(1, 4), Rat(1, 6), Rat(1, 6), Rat(1, 6)});
    const Half best = fractional_descent(wf, 10, 3);
    CHECK(edge_mass(best) == 0);
}

TEST_CASE("rounding the descent result never increases mass") {
    const WeightFunction pet = WeightFunction::uniform(share(make_petersen()));
    const Half best = fractional_descent(pet, 10, 29);
    if (is_sparse_half(best)) {
        const VertexSet s = round_half_to_set(best);
        CHECK(Rat(induced_edge_count(pet.graph(), s), 100) <= edge_mass(best));
        CHECK(Rat(induced_edge_count(pet.graph(), s), 100) >=
              Rat(min_half_edges(pet.graph()).count, 100));
    }
}
