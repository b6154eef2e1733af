#include <doctest.h>

#include <memory>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/sampling.hpp"
#include "sparsehalf/weighted.hpp"
#include "test_util.hpp"

using namespace sparsehalf;

namespace {

std::shared_ptr<const Graph> share(Graph g) {
    return std::make_shared<const Graph>(std::move(g));
}

Half uniform_half_on(const WeightFunction& wf, const std::vector<int>& support) {
    std::vector<Rat> s(wf.graph().vertex_count(), Rat(0));
    for (int v : support) s[v] = wf.weight(v);
    return Half(wf, std::move(s));
}

}  // namespace

TEST_CASE("weight function invariants") {
    auto c5 = share(make_c5());
    CHECK_THROWS_AS(WeightFunction(c5, std::vector<Rat>(5, Rat(1, 4))), ConstraintError);
    CHECK_THROWS_AS(WeightFunction(c5, {Rat(2), Rat(-1), Rat(0), Rat(0), Rat(0)}),
                    ConstraintError);
    const WeightFunction uniform = WeightFunction::uniform(c5);
    CHECK(uniform.weight(3) == Rat(1, 5));
}

TEST_CASE("weighted minimum degree") {
    CHECK(weighted_min_degree(WeightFunction::uniform(share(make_c5()))) == Rat(2, 5));
    CHECK(weighted_min_degree(WeightFunction::uniform(share(make_fd(5)))) == Rat(5, 14));
    const WeightFunction k2(share(testutil::complete(2)), {Rat(1, 3), Rat(2, 3)});
    CHECK(weighted_min_degree(k2) == Rat(1, 3));
}

TEST_CASE("edge mass examples") {
    // F_5 uniform, half on v_1..v_7: mass 3/196.
    const WeightFunction f5 = WeightFunction::uniform(share(make_fd(5)));
    const Half first_seven = uniform_half_on(f5, {0, 1, 2, 3, 4, 5, 6});
    CHECK(edge_mass(first_seven) == Rat(3, 196));
    CHECK(is_sparse_half(first_seven));

    // C5 uniform s_1: omega on v1, v2 and 1/10 on v3; mass exactly 1/50.
    const WeightFunction c5 = WeightFunction::uniform(share(make_c5()));
    std::vector<Rat> s(5, Rat(0));
    s[0] = Rat(1, 5);
    s[1] = Rat(1, 5);
    s[2] = Rat(1, 10);
    const Half s1(c5, s);
    CHECK(edge_mass(s1) == Rat(1, 50));
    CHECK(is_sparse_half(s1));
}

TEST_CASE("a hard half is recognized as non-sparse") {
    // s = omega on v1, v3 and 1/10 on v5: v1 ~ v3 contributes 1/25 > 1/50.
    const WeightFunction c5 = WeightFunction::uniform(share(make_c5()));
    std::vector<Rat> s(5, Rat(0));
    s[0] = Rat(1, 5);
    s[2] = Rat(1, 5);
    s[4] = Rat(1, 10);
    const Half bad(c5, s);
    CHECK(edge_mass(bad) > Rat(1, 50));
    CHECK_FALSE(is_sparse_half(bad));
}

TEST_CASE("half invariants are enforced") {
    const WeightFunction c5 = WeightFunction::uniform(share(make_c5()));
    CHECK_THROWS_AS(Half(c5, std::vector<Rat>(5, Rat(1, 5))), ConstraintError);
    std::vector<Rat> too_big(5, Rat(0));
    too_big[0] = Rat(1, 2);
    CHECK_THROWS_AS(Half(c5, too_big), ConstraintError);
}

TEST_CASE("uniform-weight halves match induced counts on random sets") {
    Rng rng(23);
    const Graph g = sample_gnp(12, 1, 2, rng);
    auto shared = share(g);
    const WeightFunction wf = WeightFunction::uniform(shared);
    for (int trial = 0; trial < 20; ++trial) {
        // Random 6-subset.
        std::vector<int> verts{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
        for (int i = 11; i > 0; --i) std::swap(verts[i], verts[rng.below(i + 1)]);
        verts.resize(6);
        std::sort(verts.begin(), verts.end());
        const Half h = uniform_half_on(wf, verts);
        const VertexSet s{12, verts};
        CHECK(edge_mass(h) == Rat(induced_edge_count(g, s), 144));
    }
}

TEST_CASE("round_half_to_set on integral input returns the support") {
    const WeightFunction pet = WeightFunction::uniform(share(make_petersen()));
    const Half tight = uniform_half_on(pet, {0, 2, 3, 6, 9});
    const VertexSet s = round_half_to_set(tight);
    CHECK(s.members == std::vector<int>{0, 2, 3, 6, 9});
    CHECK(induced_edge_count(pet.graph(), s) == 2);  // tight: 10^2 / 50
}

TEST_CASE("round_half_to_set rounds fractional halves") {
    // Lift of C5 uniform s_1 through the (2,...,2) blowup projection.
    const auto b = blowup(make_c5(), {2, 2, 2, 2, 2});
    auto g = share(b.graph);
    auto c5 = share(make_c5());
    std::vector<int> map(10);
    for (int i = 0; i < 5; ++i)
        for (int v : b.partition.blocks[i]) map[v] = i;
    const Homomorphism projection(g, c5, map);

    const WeightFunction uniform_g = WeightFunction::uniform(g);
    const WeightFunction pushed = pushforward(uniform_g, projection);
    std::vector<Rat> s(5, Rat(0));
    s[0] = pushed.weight(0);
    s[1] = pushed.weight(1);
    s[2] = Rat(1, 2) - pushed.weight(0) - pushed.weight(1);
    const Half s1(pushed, s);
    const Half lifted = lift_half(s1, projection, uniform_g);
    CHECK(edge_mass(lifted) == Rat(1, 50));

    const VertexSet rounded = round_half_to_set(lifted);
    CHECK(rounded.size() == 5);
    CHECK(induced_edge_count(b.graph, rounded) <= 2);  // 10^2 / 50
}

TEST_CASE("round_half_to_set rejects non-uniform weights and non-sparse halves") {
    const WeightFunction k2(share(testutil::complete(2)), {Rat(1, 3), Rat(2, 3)});
    const Half h(k2, {Rat(0), Rat(1, 2)});
    CHECK_THROWS_AS(round_half_to_set(h), std::invalid_argument);

    const WeightFunction k44 = WeightFunction::uniform(share(testutil::complete(4)));
    const Half dense(k44, std::vector<Rat>(4, Rat(1, 8)));
    CHECK_THROWS_AS(round_half_to_set(dense), ConstraintError);
}

TEST_CASE("pushforward") {
    const auto b = blowup(make_c5(), {1, 2, 2, 2, 3});
    auto g = share(b.graph);
    auto c5 = share(make_c5());
    std::vector<int> map(10);
    for (int i = 0; i < 5; ++i)
        for (int v : b.partition.blocks[i]) map[v] = i;
    const Homomorphism projection(g, c5, map);
    const WeightFunction pushed = pushforward(WeightFunction::uniform(g), projection);
    CHECK(pushed.weights() ==
          std::vector<Rat>{Rat(1, 10), Rat(2, 10), Rat(2, 10), Rat(2, 10), Rat(3, 10)});

    auto c5g = share(make_c5());
    const Homomorphism identity(c5g, c5g, {0, 1, 2, 3, 4});
    const WeightFunction uniform = WeightFunction::uniform(c5g);
    CHECK(pushforward(uniform, identity).weights() == uniform.weights());
}

TEST_CASE("lift_half identities") {
    auto c5 = share(make_c5());
    const WeightFunction uniform = WeightFunction::uniform(c5);
    const Homomorphism identity(c5, c5, {0, 1, 2, 3, 4});
    std::vector<Rat> s(5, Rat(0));
    s[0] = Rat(1, 5);
    s[1] = Rat(1, 5);
    s[2] = Rat(1, 10);
    const Half s1(uniform, s);
    const Half lifted = lift_half(s1, identity, uniform);
    CHECK(lifted.values() == s1.values());
}

TEST_CASE("lift_half of the F_5 half through a blowup projection") {
    const auto b = blowup(make_fd(5), std::vector<int>(14, 2));
    auto g = share(b.graph);
    auto f5 = share(make_fd(5));
    std::vector<int> map(28);
    for (int i = 0; i < 14; ++i)
        for (int v : b.partition.blocks[i]) map[v] = i;
    const Homomorphism projection(g, f5, map);
    const WeightFunction uniform_g = WeightFunction::uniform(g);
    const WeightFunction pushed = pushforward(uniform_g, projection);
    std::vector<Rat> s(14, Rat(0));
    for (int v = 0; v < 7; ++v) s[v] = pushed.weight(v);
    const Half top(pushed, s);
    const Half lifted = lift_half(top, projection, uniform_g);
    CHECK(edge_mass(lifted) == Rat(3, 196));
    CHECK(edge_mass(lifted) <= edge_mass(top));
}

TEST_CASE("lift then fiber-sum reproduces the source half") {
    Rng rng(5);
    const auto b = blowup(make_c5(), {2, 1, 3, 2, 2});
    auto g = share(b.graph);
    auto c5 = share(make_c5());
    std::vector<int> map(10);
    for (int i = 0; i < 5; ++i)
        for (int v : b.partition.blocks[i]) map[v] = i;
    const Homomorphism projection(g, c5, map);
    const WeightFunction uniform_g = WeightFunction::uniform(g);
    const WeightFunction pushed = pushforward(uniform_g, projection);
    for (int trial = 0; trial < 10; ++trial) {
        const auto w = sample_balanced_c5(rng);
        // Use the sampled weighting as a half template scaled to 1/2 where
        // it fits under the pushforward.
        std::vector<Rat> s(5);
        for (int v = 0; v < 5; ++v) s[v] = std::min(w[v] / 2, pushed.weight(v));
        Rat total = 0;
        for (const Rat& x : s) total += x;
        // Normalize the shortfall onto vertex 0 upward within bounds.
        Rat shortfall = Rat(1, 2) - total;
        for (int v = 0; v < 5 && shortfall > 0; ++v) {
            const Rat room = pushed.weight(v) - s[v];
            const Rat add = std::min(room, shortfall);
            s[v] += add;
            shortfall -= add;
        }
        REQUIRE(shortfall == 0);
        const Half source(pushed, s);
        const Half lifted = lift_half(source, projection, uniform_g);
        std::vector<Rat> fiber_sum(5, Rat(0));
        for (int v = 0; v < 10; ++v) fiber_sum[projection.image(v)] += lifted.value(v);
        CHECK(fiber_sum == source.values());
    }
}

TEST_CASE("half distribution certificate on uniform C5") {
    auto c5 = share(make_c5());
    const WeightFunction uniform = WeightFunction::uniform(c5);
    std::vector<std::pair<Half, Rat>> items;
    for (int i = 0; i < 5; ++i) {
        std::vector<Rat> s(5, Rat(0));
        s[i] = Rat(1, 5);
        s[(i + 1) % 5] = Rat(1, 5);
        s[(i + 2) % 5] = Rat(1, 10);
        items.emplace_back(Half(uniform, std::move(s)), Rat(1, 5));
    }
    const HalfDistribution dist(std::move(items));
    CHECK(expected_edge_mass(dist) == Rat(1, 50));
    CHECK(uniformity_constant(dist) == Rat(1, 10));
}

TEST_CASE("single-half distribution on an independent support") {
    // Vertices 0 and 1 are non-adjacent under the C5 adjacency i ~ i+2,
    // i+3 and carry
    // enough weight to host the whole half.
    const WeightFunction wf(share(make_c5()),
                            {Rat(1, 4), Rat(1, 4), Rat(1, 6), Rat(1, 6), Rat(1, 6)});
    std::vector<Rat> s(5, Rat(0));
    s[0] = Rat(1, 4);
    s[1] = Rat(1, 4);
    const Half h(wf, s);
    CHECK(edge_mass(h) == 0);
    const HalfDistribution dist({{h, Rat(1)}});
    CHECK(expected_edge_mass(dist) == 0);
    CHECK(uniformity_constant(dist) == 0);
}

TEST_CASE("distribution invariants") {
    const WeightFunction c5 = WeightFunction::uniform(share(make_c5()));
    std::vector<Rat> s(5, Rat(0));
    s[0] = Rat(1, 5);
    s[1] = Rat(1, 5);
    s[2] = Rat(1, 10);
    const Half h(c5, s);
    CHECK_THROWS_AS(HalfDistribution({{h, Rat(1, 2)}}), ConstraintError);
}
