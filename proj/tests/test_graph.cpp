#include <doctest.h>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/sampling.hpp"
#include "test_util.hpp"

using namespace sparsehalf;

TEST_CASE("triangle freeness") {
    CHECK_FALSE(is_triangle_free(testutil::complete(3)));
    CHECK(is_triangle_free(make_c5()));
    const Graph p = make_petersen();
    CHECK(is_triangle_free(p));
    CHECK(testutil::brute_triangle_free(p));
}

TEST_CASE("common neighbors on the Petersen graph") {
    const Graph p = make_petersen();
    for (int u = 0; u < 10; ++u) {
        for (int v = u + 1; v < 10; ++v) {
            const auto common = common_neighbors(p, u, v);
            if (p.has_edge(u, v)) {
                CHECK(common.size() == 0);  // triangle-free
            } else {
                CHECK(common.size() == 1);  // strongly regular
            }
        }
    }
    CHECK_THROWS_AS(common_neighbors(p, 3, 3), std::invalid_argument);
}

TEST_CASE("common neighbors in K_{2,2}") {
    const Graph g = testutil::complete_bipartite(2, 2);
    const auto c = common_neighbors(g, 0, 1);
    CHECK(c.members == std::vector<int>{2, 3});
}

TEST_CASE("maximality class") {
    const auto petersen = maximality_class(make_petersen());
    CHECK(petersen.is_maximal);
    CHECK(petersen.c_star == Rat(1, 10));

    const auto c6 = maximality_class(testutil::cycle(6));
    CHECK_FALSE(c6.is_maximal);
    CHECK(c6.c_star == 0);

    const auto k55 = maximality_class(testutil::complete_bipartite(5, 5));
    CHECK(k55.is_maximal);
    CHECK(k55.c_star == Rat(1, 2));

    CHECK_THROWS_AS(maximality_class(testutil::complete(4)), HypothesisError);
    const auto k2 = maximality_class(testutil::complete(2));
    CHECK(k2.is_maximal);
    CHECK(k2.complete);
}

TEST_CASE("blowup sizes and edges") {
    const auto c5 = blowup(make_c5(), {2, 2, 2, 2, 2});
    CHECK(c5.graph.vertex_count() == 10);
    CHECK(c5.graph.edge_count() == 20);

    const auto identity = blowup(make_petersen(), std::vector<int>(10, 1));
    CHECK(identity.graph == make_petersen());

    const auto pet = blowup(make_petersen(), std::vector<int>(10, 2));
    CHECK(pet.graph.vertex_count() == 20);
    CHECK(pet.graph.edge_count() == 60);

    CHECK_THROWS_AS(blowup(make_c5(), {}), std::invalid_argument);
    CHECK_THROWS_AS(blowup(make_c5(), {1, 1}), std::invalid_argument);
}

TEST_CASE("blowup preserves triangle freeness both ways") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(5));
        const Graph h = sample_gnp(n, 1, 2, rng);
        std::vector<int> sizes(n);
        for (int& s : sizes) s = 1 + static_cast<int>(rng.below(3));
        const auto result = blowup(h, sizes);
        CHECK(is_triangle_free(result.graph) == is_triangle_free(h));
    }
}

TEST_CASE("perturb") {
    const Graph c5 = make_c5();
    const auto same = perturb(c5, {}, {});
    CHECK(same.graph == c5);
    CHECK(same.triangle_free);

    const auto b = blowup(make_c5(), {2, 2, 2, 2, 2});
    const auto removed = perturb(b.graph, {}, {b.graph.edges().front()});
    CHECK(removed.graph.edge_count() == 19);

    // With C5 adjacency i ~ i+2, i+3, vertices 0 and 1 share the common
    // neighbor 3, so
    // the pentagon side {v1, v2} closes a triangle.
    const auto chord = perturb(c5, {{0, 1}}, {});
    CHECK_FALSE(chord.triangle_free);

    CHECK_THROWS_AS(perturb(c5, {{0, 2}}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(perturb(c5, {{0, 2}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(perturb(c5, {}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("induced edge count") {
    const Graph p = make_petersen();
    // The classic tight sparse half of the Petersen graph.
    const VertexSet tight{10, {0, 2, 3, 6, 9}};
    CHECK(induced_edge_count(p, tight) == 2);
    CHECK(induced_edge_count(p, VertexSet{10, {}}) == 0);
    const Graph k4 = testutil::complete(4);
    CHECK(induced_edge_count(k4, VertexSet{4, {0, 1, 2, 3}}) == 6);
}

TEST_CASE("induced edge count is monotone and exhaustive at the top") {
    Rng rng(11);
    const Graph g = sample_gnp(12, 1, 3, rng);
    CHECK(induced_edge_count(g, VertexSet{12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}) ==
          g.edge_count());
    VertexSet s{12, {1, 3, 5, 7}};
    VertexSet t{12, {1, 3, 5, 7, 8, 9}};
    CHECK(induced_edge_count(g, s) <= induced_edge_count(g, t));
}

TEST_CASE("degree profile") {
    const auto c5 = degree_profile(make_c5());
    CHECK(c5.min_deg == 2);
    CHECK(c5.max_deg == 2);
    CHECK(c5.sum_deg == 10);
    CHECK(c5.sum_deg_sq == 20);

    const auto pet = degree_profile(make_petersen());
    CHECK(pet.min_deg == 3);
    CHECK(pet.max_deg == 3);
    CHECK(pet.sum_deg == 30);
    CHECK(pet.sum_deg_sq == 90);

    const auto star = degree_profile(testutil::complete_bipartite(1, 4));
    CHECK(star.min_deg == 1);
    CHECK(star.max_deg == 4);
    CHECK(star.sum_deg == 8);
    CHECK(star.sum_deg_sq == 20);
}

TEST_CASE("degree profile invariants on random graphs") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(14));
        const Graph g = sample_gnp(n, 1, 2, rng);
        const auto p = degree_profile(g);
        CHECK(p.sum_deg == 2 * g.edge_count());
        CHECK(static_cast<long long>(n) * p.sum_deg_sq >= p.sum_deg * p.sum_deg);
    }
}

TEST_CASE("maximum independent sets") {
    const auto petersen = maximum_independent_sets(make_petersen());
    REQUIRE(petersen.size() == 5);
    for (const auto& s : petersen) CHECK(s.size() == 4);
    const auto brute = testutil::brute_max_independent_sets(make_petersen());
    REQUIRE(brute.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(petersen[i].members == brute[i]);

    const auto f5 = maximum_independent_sets(make_fd(5));
    CHECK(f5.size() == 14);
    const Graph f5g = make_fd(5);
    for (const auto& s : f5) {
        CHECK(s.size() == 5);
        bool is_neighborhood = false;
        for (int v = 0; v < 14; ++v)
            if (f5g.neighbors(v) == s.members) is_neighborhood = true;
        CHECK(is_neighborhood);
    }

    const auto k4 = maximum_independent_sets(testutil::complete(4));
    REQUIRE(k4.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(k4[v].members == std::vector<int>{v});
}

TEST_CASE("maximum independent sets match brute force on random graphs") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(11));
        const Graph g = sample_gnp(n, 2, 5, rng);
        const auto fast = maximum_independent_sets(g);
        const auto brute = testutil::brute_max_independent_sets(g);
        REQUIRE(fast.size() == brute.size());
        CHECK(!fast.empty());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].members == brute[i]);
            CHECK(fast[i].size() == fast[0].size());
        }
    }
}

TEST_CASE("partition validation") {
    Partition good{4, {{0, 1}, {2, 3}}};
    validate_partition(good);
    Partition overlap{4, {{0, 1}, {1, 2, 3}}};
    CHECK_THROWS_AS(validate_partition(overlap), std::invalid_argument);
    Partition gap{4, {{0, 1}, {3}}};
    CHECK_THROWS_AS(validate_partition(gap), std::invalid_argument);
}
