#include "sparsehalf/approximation.hpp"

#include <algorithm>
#include <set>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"

namespace sparsehalf {

ApproximationWitness check_eps_approximation(const Graph& g, const Graph& h,
                                             const Partition& partition) {
    if (static_cast<int>(partition.blocks.size()) != h.vertex_count())
        throw std::invalid_argument("check_eps_approximation: block count != v(h)");
    if (partition.n != g.vertex_count())
        throw std::invalid_argument("check_eps_approximation: partition universe mismatch");

    ApproximationWitness out;
    out.partition = partition;
    out.template_graph = h;
    out.hv = blowup_along_partition(h, partition);

    std::set_symmetric_difference(g.edges().begin(), g.edges().end(),
                                  out.hv.edges().begin(), out.hv.edges().end(),
                                  std::back_inserter(out.diff_edges));

    const int n = g.vertex_count();
    const int k = h.vertex_count();
    Rat size_dev = 0;
    for (const auto& block : partition.blocks) {
        Rat dev = Rat(static_cast<int>(block.size())) - Rat(n, k);
        if (dev < 0) dev = -dev;
        size_dev = std::max(size_dev, dev);
    }
    out.eps_achieved = std::max(size_dev / n,
                                Rat(static_cast<long long>(out.diff_edges.size()),
                                    static_cast<long long>(n) * n));
    return out;
}

namespace {

// Exact minimum vertex cover by branch and bound on the edge list. Edges
// are attacked lowest-index-first and the lower endpoint is tried first,
// which makes the result deterministic.
struct CoverSearch {
    const std::vector<Edge>& edges;
    std::vector<int> best;
    std::vector<int> current;
    std::vector<char> in_cover;

    explicit CoverSearch(const std::vector<Edge>& f, int n)
        : edges(f), in_cover(n, 0) {}

    int matching_lower_bound() const {
        std::set<int> used;
        int size = 0;
        for (const auto& [u, v] : edges) {
            if (in_cover[u] || in_cover[v]) continue;
            if (used.count(u) || used.count(v)) continue;
            used.insert(u);
            used.insert(v);
            ++size;
        }
        return size;
    }

    void search() {
        if (!best.empty() &&
            current.size() + static_cast<std::size_t>(matching_lower_bound()) >= best.size())
            return;
        const Edge* open = nullptr;
        for (const auto& e : edges) {
            if (!in_cover[e.first] && !in_cover[e.second]) { open = &e; break; }
        }
        if (!open) {
            if (best.empty() || current.size() < best.size()) best = current;
            return;
        }
        for (int v : {open->first, open->second}) {
            in_cover[v] = 1;
            current.push_back(v);
            search();
            current.pop_back();
            in_cover[v] = 0;
        }
    }
};

}  // namespace

CoveringSet min_covering_set(const Graph& g, const std::vector<Edge>& f,
                             bool allow_greedy) {
    for (const auto& [u, v] : f) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u >= v)
            throw std::invalid_argument("min_covering_set: malformed edge");
    }
    CoveringSet out;
    out.covered = f;
    if (f.empty()) {
        out.d_set = VertexSet{g.vertex_count(), {}};
        return out;
    }
    if (f.size() > 10000) {
        if (!allow_greedy)
            throw ResourceLimitError("min_covering_set: |f| > 10^4 (pass allow_greedy)");
        // Maximal matching: both endpoints, a 2-approximation.
        std::set<int> cover;
        for (const auto& [u, v] : f) {
            if (cover.count(u) || cover.count(v)) continue;
            cover.insert(u);
            cover.insert(v);
        }
        out.d_set = VertexSet{g.vertex_count(), {cover.begin(), cover.end()}};
        return out;
    }
    CoverSearch search(f, g.vertex_count());
    search.search();
    std::sort(search.best.begin(), search.best.end());
    out.d_set = VertexSet{g.vertex_count(), std::move(search.best)};
    return out;
}

DisturbedReport is_eps_disturbed(const Graph& g, const Graph& g_prime, const Rat& eps) {
    DisturbedReport report;
    if (g.vertex_count() != g_prime.vertex_count()) {
        report.failed_condition = 1;
        return report;
    }
    const int n = g.vertex_count();
    std::vector<Edge> extra;
    std::set_difference(g.edges().begin(), g.edges().end(), g_prime.edges().begin(),
                        g_prime.edges().end(), std::back_inserter(extra));

    report.covering = min_covering_set(g, extra).d_set;
    if (Rat(report.covering.size()) > eps * n) {
        report.failed_condition = 2;
        return report;
    }

    std::vector<long long> extra_degree(n, 0);
    for (const auto& [u, v] : extra) {
        ++extra_degree[u];
        ++extra_degree[v];
    }
    for (int v = 0; v < n; ++v) {
        if (Rat(extra_degree[v]) > eps * n) {
            report.failed_condition = 3;
            report.worst_vertex = v;
            report.worst_excess_degree = extra_degree[v];
            return report;
        }
    }
    report.holds = true;
    return report;
}

std::optional<Rat> weighted_c_maximality(const WeightFunction& wf) {
    const Graph& g = wf.graph();
    if (!is_triangle_free(g))
        throw HypothesisError("weighted_c_maximality: graph contains a triangle");
    const int n = g.vertex_count();
    std::optional<Rat> best;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Rat total = 0;
            for (int w : common_neighbors(g, u, v).members) total += wf.weight(w);
            if (!best || total < *best) best = total;
        }
    }
    return best;
}

namespace {

// d(v) <= (2/5 - 2 sqrt(delta)) n, compared without taking square roots:
// the bound is meaningful only when 2/5 - d/n >= 0, and then squares.
bool below_low_threshold(long long deg, long long n, const Rat& delta) {
    const Rat margin = Rat(2, 5) - Rat(deg, n);
    if (margin < 0) return false;
    return 4 * delta <= margin * margin;
}

}  // namespace

DichotomyReport degree_dichotomy(const Graph& g, const Rat& delta) {
    const long long n = g.vertex_count();
    if (delta <= 0) throw std::invalid_argument("degree_dichotomy: delta must be positive");
    if (Rat(g.edge_count()) < (Rat(1, 5) - delta) * n * n)
        throw HypothesisError("degree_dichotomy: edge count below (1/5 - delta) n^2");

    DichotomyReport report{DichotomyOutcome::kFewLowDegree,
                           VertexSet{static_cast<int>(n), {}},
                           VertexSet{static_cast<int>(n), {}}};
    for (int v = 0; v < n; ++v) {
        if (Rat(g.degree(v)) >= (Rat(2, 5) + delta) * n)
            report.high_degree.members.push_back(v);
        if (below_low_threshold(g.degree(v), n, delta))
            report.low_degree.members.push_back(v);
    }
    if (Rat(report.high_degree.size()) >= delta * n) {
        report.outcome = DichotomyOutcome::kManyHighDegree;
        return report;
    }
    // |low| <= 2 sqrt(delta) n  <=>  |low|^2 <= 4 delta n^2.
    const long long low = report.low_degree.size();
    if (Rat(low) * low <= 4 * delta * n * n) {
        report.outcome = DichotomyOutcome::kFewLowDegree;
        return report;
    }
    throw TheoremViolationError("degree_dichotomy: neither outcome holds");
}

TrichotomyResult classify_trichotomy(std::shared_ptr<const Graph> g, const Rat& eps,
                                     std::optional<Rat> delta_opt) {
    if (!is_triangle_free(*g))
        throw HypothesisError("classify_trichotomy: graph contains a triangle");
    const Rat delta = delta_opt.value_or(eps * eps / 1600);
    const int n = g->vertex_count();

    TrichotomyResult result{TrichotomyOutcome::kHighDegree,
                            degree_dichotomy(*g, delta),
                            {},
                            VertexSet{n, {}},
                            std::nullopt};
    if (result.dichotomy.outcome == DichotomyOutcome::kManyHighDegree) {
        result.outcome = TrichotomyOutcome::kHighDegree;
        return result;
    }

    // Strip the low-degree set and map what remains onto C5.
    const std::vector<int>& low = result.dichotomy.low_degree.members;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
        if (!result.dichotomy.low_degree.contains(v)) keep.push_back(v);
    }
    auto stripped = std::make_shared<const Graph>(induced_subgraph(*g, keep));
    auto c5 = std::make_shared<const Graph>(make_fd(2));
    auto phi = find_homomorphism(stripped, c5);
    if (!phi)
        throw PipelineError("classify_trichotomy: no homomorphism of the stripped graph into C5");

    if (!phi->is_surjective()) {
        // Reduce to a two-coloring: the stripped graph is bipartite, so g
        // minus the edges at the stripped set is bipartite as well.
        Homomorphism two = desurject_reduce(*phi);
        result.outcome = TrichotomyOutcome::kNearBipartite;
        for (const auto& [u, v] : g->edges()) {
            if (result.dichotomy.low_degree.contains(u) ||
                result.dichotomy.low_degree.contains(v))
                result.removed_edges.emplace_back(u, v);
        }
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (two.image(static_cast<int>(i)) == 0)
                result.bipartition_side.members.push_back(keep[i]);
        }
        // Stripped vertices are isolated after removal; put them on side 0.
        result.bipartition_side.members.insert(result.bipartition_side.members.end(),
                                               low.begin(), low.end());
        std::sort(result.bipartition_side.members.begin(),
                  result.bipartition_side.members.end());
        return result;
    }

    // Surjective: the fibers plus the stripped set form the C5 partition.
    Partition partition;
    partition.n = n;
    partition.blocks.assign(5, {});
    const auto fibers = phi->fibers();
    for (int t = 0; t < 5; ++t) {
        for (int v : fibers[t]) partition.blocks[t].push_back(keep[v]);
    }
    partition.blocks[0].insert(partition.blocks[0].end(), low.begin(), low.end());
    std::sort(partition.blocks[0].begin(), partition.blocks[0].end());
    result.outcome = TrichotomyOutcome::kC5Approximable;
    result.witness = check_eps_approximation(*g, *c5, partition);
    return result;
}

bool fiber_bounds_check(const Homomorphism& phi, const Rat& delta) {
    if (!(phi.target() == make_fd(2)))
        throw std::invalid_argument("fiber_bounds_check: target is not C5");
    if (!phi.is_surjective())
        throw std::invalid_argument("fiber_bounds_check: homomorphism is not surjective");
    const long long n = phi.source().vertex_count();
    for (const auto& fiber : phi.fibers()) {
        const Rat size(static_cast<long long>(fiber.size()));
        if (size < (Rat(1, 5) - 3 * delta) * n) return false;
        if (size > (Rat(1, 5) + 2 * delta) * n) return false;
    }
    return true;
}

SumSqDegreeReport sum_sq_degree_condition(const Graph& g, const Rat& delta,
                                          std::optional<Rat> gamma_opt) {
    const Rat gamma =
        gamma_opt.value_or(Rat(25, 16) * delta * delta * delta * delta * delta);
    const long long n = g.vertex_count();
    SumSqDegreeReport report;
    report.edge_hypothesis = Rat(g.edge_count()) >= (Rat(1, 5) - gamma) * n * n;
    long long high = 0;
    for (int v = 0; v < n; ++v) {
        if (Rat(g.degree(v)) >= (Rat(2, 5) + delta) * n) ++high;
    }
    report.degree_hypothesis = Rat(high) >= delta * n;
    // (1/n) sum d^2 >= (2n/5)^2  <=>  25 sum d^2 >= 4 n^3.
    const auto profile = degree_profile(g);
    report.conclusion = 25 * BigInt(profile.sum_deg_sq) >= 4 * BigInt(n) * n * n;
    report.implication_holds =
        !(report.edge_hypothesis && report.degree_hypothesis) || report.conclusion;
    return report;
}

}  // namespace sparsehalf
