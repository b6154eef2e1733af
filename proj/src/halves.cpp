#include "sparsehalf/halves.hpp"

#include <algorithm>
#include <sstream>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

namespace {

const Rat kSparseBound(1, 50);
const Rat kMinDegreeBound(5, 14);

std::string describe_weights(const std::vector<Rat>& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    return os.str();
}

/// Fills a window of vertices (in the given order) with weight capped so the
/// total is exactly 1/2. Valid whenever the window's total weight is >= 1/2.
Half truncated_window_half(const WeightFunction& wf, const std::vector<int>& window) {
    std::vector<Rat> s(wf.graph().vertex_count(), Rat(0));
    Rat remaining(1, 2);
    for (int v : window) {
        const Rat take = std::min(remaining, wf.weight(v));
        s[v] = take;
        remaining -= take;
        if (remaining == 0) break;
    }
    return Half(wf, std::move(s));
}

}  // namespace

FdWeighting make_fd_weighting(int d, std::vector<Rat> w) {
    auto g = std::make_shared<const Graph>(make_fd(d));
    if (static_cast<int>(w.size()) != g->vertex_count())
        throw std::invalid_argument("fd weighting: expected 3d-1 weights");
    return FdWeighting{d, WeightFunction(std::move(g), std::move(w))};
}

std::vector<Half> construct_fd_halves(const FdWeighting& fw) {
    const int d = fw.d;
    if (d < 1 || d > 5)
        throw std::invalid_argument("construct_fd_halves: 1 <= d <= 5 required");
    const WeightFunction& wf = fw.wf;
    const int n = 3 * d - 1;
    if (wf.graph().vertex_count() != n)
        throw std::invalid_argument("construct_fd_halves: weighting is not on F_d");
    if (d >= 3 && weighted_min_degree(wf) < kMinDegreeBound)
        throw HypothesisError("construct_fd_halves: weighted minimum degree below 5/14");

    if (d == 1) {
        const int heavy = wf.weight(0) >= wf.weight(1) ? 0 : 1;
        std::vector<Rat> s(2, Rat(0));
        s[heavy] = Rat(1, 2);
        return {Half(wf, std::move(s))};
    }

    // Windows of d consecutive vertices are independent in F_d; a window of
    // total weight >= 1/2 supports a zero-mass half directly.
    for (int i = 0; i < n; ++i) {
        Rat total = 0;
        std::vector<int> window;
        for (int t = 0; t < d; ++t) {
            window.push_back((i + t) % n);
            total += wf.weight(window.back());
        }
        if (total >= Rat(1, 2)) return {truncated_window_half(wf, window)};
    }

    std::vector<Half> out;
    if (d == 2) {
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> s(n, Rat(0));
            s[i] = wf.weight(i);
            s[(i + 1) % n] = wf.weight((i + 1) % n);
            s[(i + 2) % n] = Rat(1, 2) - wf.weight(i) - wf.weight((i + 1) % n);
            out.emplace_back(wf, std::move(s));
        }
        return out;
    }
    if (d == 5) {
        // Minimum degree >= 5/14 forces the uniform weighting here.
        for (int v = 0; v < n; ++v) {
            if (wf.weight(v) != Rat(1, 14))
                throw HypothesisError("construct_fd_halves: d=5 weighting must be uniform");
        }
        std::vector<Rat> s(n, Rat(0));
        for (int v = 0; v < 7; ++v) s[v] = Rat(1, 14);
        return {Half(wf, std::move(s))};
    }

    // d = 3 or 4: full weight on the d inner vertices of a window of d+2
    // consecutive vertices, the leftover split evenly over the two ends.
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> s(n, Rat(0));
        Rat inner = 0;
        for (int t = 1; t <= d; ++t) {
            const int v = (i + t) % n;
            s[v] = wf.weight(v);
            inner += wf.weight(v);
        }
        const Rat end = (Rat(1, 2) - inner) / 2;
        s[i] = end;
        s[(i + d + 1) % n] = end;
        out.emplace_back(wf, std::move(s));
    }
    return out;
}

Half best_sparse_half_fd(const FdWeighting& fw) {
    const auto halves = construct_fd_halves(fw);
    int best = -1;
    Rat best_mass;
    for (std::size_t i = 0; i < halves.size(); ++i) {
        const Rat m = edge_mass(halves[i]);
        if (best < 0 || m < best_mass) {
            best = static_cast<int>(i);
            best_mass = m;
        }
    }
    if (best_mass > kSparseBound) {
        throw TheoremViolationError(
            "best_sparse_half_fd: no constructed half is sparse; d=" +
            std::to_string(fw.d) + " weights=" + describe_weights(fw.wf.weights()));
    }
    return halves[best];
}

HalfDistribution c5_uniform_distribution(const WeightFunction& wf) {
    if (!(wf.graph() == make_fd(2)))
        throw std::invalid_argument("c5_uniform_distribution: graph is not C5");
    const Rat dev(1, 50);
    for (int v = 0; v < 5; ++v) {
        const Rat diff = wf.weight(v) - Rat(1, 5);
        if (diff > dev || -diff > dev)
            throw HypothesisError("c5_uniform_distribution: weighting is not (1/50)-balanced");
    }
    // Balance keeps every consecutive pair below 1/2, so the five window
    // halves always exist.
    std::vector<std::pair<Half, Rat>> items;
    for (int i = 0; i < 5; ++i) {
        std::vector<Rat> s(5, Rat(0));
        s[i] = wf.weight(i);
        s[(i + 1) % 5] = wf.weight((i + 1) % 5);
        s[(i + 2) % 5] = Rat(1, 2) - wf.weight(i) - wf.weight((i + 1) % 5);
        items.emplace_back(Half(wf, std::move(s)), Rat(1, 5));
    }
    HalfDistribution dist(std::move(items));
    if (expected_edge_mass(dist) > kSparseBound || uniformity_constant(dist) < Rat(1, 30)) {
        throw TheoremViolationError(
            "c5_uniform_distribution: certificate failed; weights=" +
            describe_weights(wf.weights()));
    }
    return dist;
}

PstarStructure pstar_structure() {
    PstarStructure out;
    out.star_ext = star_extension(make_petersen());
    const Graph& px = out.star_ext.extension;
    const int base_n = out.star_ext.base.vertex_count();
    const int stars = px.vertex_count() - base_n;
    if (stars != 5)
        throw ConstraintError("pstar_structure: Petersen star extension must add 5 vertices");

    for (int q = 0; q < stars; ++q) {
        const VertexSet& nbhd = out.star_ext.added[q].second;
        std::vector<int> m_set;
        for (int v = 0; v < base_n; ++v)
            if (!nbhd.contains(v)) m_set.push_back(v);

        // M_i must induce a perfect matching of size three.
        std::vector<std::pair<int, int>> matching;
        for (int a : m_set) {
            for (int b : m_set) {
                if (a < b && px.has_edge(a, b)) matching.emplace_back(a, b);
            }
        }
        std::vector<int> m_degree(base_n, 0);
        for (const auto& [a, b] : matching) {
            ++m_degree[a];
            ++m_degree[b];
        }
        const bool is_matching =
            matching.size() == 3 && m_set.size() == 6 &&
            std::all_of(m_set.begin(), m_set.end(),
                        [&](int v) { return m_degree[v] == 1; });
        if (!is_matching)
            throw ConstraintError("pstar_structure: M_i does not induce a 3-edge matching");

        std::vector<PstarEntry> found;
        for (int pick = 0; pick < 8; ++pick) {
            std::array<int, 3> triple{};
            std::vector<int> complement;
            for (int e = 0; e < 3; ++e) {
                const auto& [a, b] = matching[e];
                triple[e] = (pick >> e) & 1 ? b : a;
                complement.push_back((pick >> e) & 1 ? a : b);
            }
            // Transversals of the matching are independent because M_i
            // induces nothing besides the matching edges.
            int partner = -1;
            int hits = 0;
            for (int r = 0; r < stars; ++r) {
                if (r == q) continue;
                const VertexSet& other = out.star_ext.added[r].second;
                if (std::all_of(complement.begin(), complement.end(),
                                [&](int v) { return other.contains(v); })) {
                    partner = r;
                    ++hits;
                }
            }
            if (hits == 1) {
                std::sort(triple.begin(), triple.end());
                found.push_back(PstarEntry{q, triple, partner});
            }
        }
        if (found.size() != 4)
            throw ConstraintError("pstar_structure: expected exactly 4 admissible triples");
        std::sort(found.begin(), found.end(),
                  [](const PstarEntry& a, const PstarEntry& b) { return a.triple < b.triple; });
        // The appendix sum runs over ordered pairs of distinct stars, so the
        // four partners must be the four other stars.
        std::vector<int> partners;
        for (const auto& e : found) partners.push_back(e.partner);
        std::sort(partners.begin(), partners.end());
        if (std::adjacent_find(partners.begin(), partners.end()) != partners.end())
            throw ConstraintError("pstar_structure: duplicate partner star");
        out.entries.insert(out.entries.end(), found.begin(), found.end());
    }
    if (out.entries.size() != 20)
        throw ConstraintError("pstar_structure: expected 20 halves");
    return out;
}

HalfDistribution pstar_uniform_distribution(const WeightFunction& wf) {
    const PstarStructure st = pstar_structure();
    const Graph& px = st.star_ext.extension;
    if (!(wf.graph() == px))
        throw std::invalid_argument("pstar_uniform_distribution: graph is not P*");
    const Rat dev(1, 500);
    for (int v = 0; v < 10; ++v) {
        const Rat diff = wf.weight(v) - Rat(1, 10);
        if (diff > dev || -diff > dev)
            throw HypothesisError("pstar_uniform_distribution: not (1/500)-balanced on V(P)");
    }
    for (int v = 10; v < 15; ++v) {
        if (wf.weight(v) > dev)
            throw HypothesisError("pstar_uniform_distribution: star vertex weight above 1/500");
    }

    std::vector<std::pair<Half, Rat>> items;
    for (const PstarEntry& entry : st.entries) {
        const int wi = 10 + entry.star;
        const int wj = 10 + entry.partner;
        Rat triple_weight = 0;
        for (int v : entry.triple) triple_weight += wf.weight(v);
        const Rat committed = triple_weight + wf.weight(wi) + wf.weight(wj) / 4;
        const Rat rem = (Rat(1, 2) - committed) / 3;

        std::vector<Rat> s(px.vertex_count(), Rat(0));
        s[wi] = wf.weight(wi);
        s[wj] = wf.weight(wj) / 4;
        for (int v : entry.triple) s[v] = wf.weight(v);
        const VertexSet& star_nbhd = st.star_ext.added[entry.star].second;
        for (int v = 0; v < 10; ++v) {
            if (star_nbhd.contains(v)) continue;
            if (std::find(entry.triple.begin(), entry.triple.end(), v) != entry.triple.end())
                continue;
            // Complementary matching endpoint; the leftover third must
            // dominate a third of its weight for the uniformity bound.
            if (rem * 3 < wf.weight(v)) {
                throw TheoremViolationError(
                    "pstar_uniform_distribution: leftover inequality failed; weights=" +
                    describe_weights(wf.weights()));
            }
            s[v] = rem;
        }
        items.emplace_back(Half(wf, std::move(s)), Rat(1, 20));
    }
    HalfDistribution dist(std::move(items));
    if (expected_edge_mass(dist) > kSparseBound || uniformity_constant(dist) < Rat(1, 80)) {
        throw TheoremViolationError(
            "pstar_uniform_distribution: certificate failed; weights=" +
            describe_weights(wf.weights()));
    }
    return dist;
}

VertexSet sparse_half_min_degree(std::shared_ptr<const Graph> g) {
    const int n = g->vertex_count();
    if (n == 0) throw std::invalid_argument("sparse_half_min_degree: empty graph");
    if (!is_triangle_free(*g))
        throw HypothesisError("sparse_half_min_degree: graph has a triangle");
    if (degree_profile(*g).min_deg * 14 < 5 * n)
        throw HypothesisError("sparse_half_min_degree: minimum degree below 5n/14");

    auto fd = surjective_homomorphism_to_fd(g, 5);
    if (!fd)
        throw PipelineError("sparse_half_min_degree: no homomorphism into F_5 found");

    const WeightFunction uniform = WeightFunction::uniform(g);
    try {
        const WeightFunction pushed = pushforward(uniform, fd->phi);
        const Half best = best_sparse_half_fd(FdWeighting{fd->d, pushed});
        const Half lifted = lift_half(best, fd->phi, uniform);
        return round_half_to_set(lifted);
    } catch (const HypothesisError& e) {
        throw PipelineError(std::string("sparse_half_min_degree: stage failed: ") + e.what());
    } catch (const ConstraintError& e) {
        throw PipelineError(std::string("sparse_half_min_degree: stage failed: ") + e.what());
    }
}

}  // namespace sparsehalf
