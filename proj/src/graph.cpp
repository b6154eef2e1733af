#include "sparsehalf/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge rejected");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (n <= 64) {
        g.mask_.assign(n, 0);
        for (const auto& [u, v] : g.edges_) {
            g.mask_[u] |= std::uint64_t{1} << v;
            g.mask_[v] |= std::uint64_t{1} << u;
        }
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

void validate_partition(const Partition& p) {
    std::vector<char> seen(p.n, 0);
    for (const auto& block : p.blocks) {
        for (int v : block) {
            if (v < 0 || v >= p.n) throw std::invalid_argument("partition member out of range");
            if (seen[v]) throw std::invalid_argument("partition blocks overlap");
            seen[v] = 1;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
        throw std::invalid_argument("partition does not cover all vertices");
}

bool is_triangle_free(const Graph& g) {
    // Scan edges, intersect sorted neighbor lists.
    for (const auto& [u, v] : g.edges()) {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) ++i; else ++j;
        }
    }
    return true;
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("common_neighbors: vertex out of range");
    VertexSet out{g.vertex_count(), {}};
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                          g.neighbors(v).begin(), g.neighbors(v).end(),
                          std::back_inserter(out.members));
    return out;
}

MaximalityClass maximality_class(const Graph& g) {
    if (!is_triangle_free(g))
        throw HypothesisError("maximality_class: graph contains a triangle");
    const int n = g.vertex_count();
    MaximalityClass out;
    bool any_nonedge = false;
    long long min_common = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            const long long c = common_neighbors(g, u, v).size();
            if (!any_nonedge || c < min_common) min_common = c;
            any_nonedge = true;
            if (min_common == 0) break;
        }
        if (any_nonedge && min_common == 0) break;
    }
    if (!any_nonedge) {
        out.is_maximal = true;
        out.complete = true;
        return out;
    }
    out.c_star = Rat(min_common, n);
    out.is_maximal = min_common > 0;
    return out;
}

BlowupResult blowup(const Graph& h, const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("blowup: empty sizes list");
    if (static_cast<int>(sizes.size()) != h.vertex_count())
        throw std::invalid_argument("blowup: |sizes| != v(h)");
    for (int s : sizes)
        if (s <= 0) throw std::invalid_argument("blowup: sizes must be positive");

    Partition part;
    part.blocks.resize(sizes.size());
    int n = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (int t = 0; t < sizes[i]; ++t) part.blocks[i].push_back(n++);
    }
    part.n = n;
    std::vector<Edge> edges;
    for (const auto& [a, b] : h.edges()) {
        for (int u : part.blocks[a])
            for (int v : part.blocks[b]) edges.emplace_back(u, v);
    }
    return BlowupResult{Graph::from_edges(n, std::move(edges)), std::move(part)};
}

Graph blowup_along_partition(const Graph& h, const Partition& p) {
    if (static_cast<int>(p.blocks.size()) != h.vertex_count())
        throw std::invalid_argument("blowup_along_partition: block count != v(h)");
    validate_partition(p);
    std::vector<Edge> edges;
    for (const auto& [a, b] : h.edges()) {
        for (int u : p.blocks[a])
            for (int v : p.blocks[b]) edges.emplace_back(u, v);
    }
    return Graph::from_edges(p.n, std::move(edges));
}

PerturbResult perturb(const Graph& g, const std::vector<Edge>& add,
                      const std::vector<Edge>& remove) {
    auto norm = [](Edge e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    std::set<Edge> to_add, to_remove;
    for (Edge e : add) to_add.insert(norm(e));
    for (Edge e : remove) to_remove.insert(norm(e));
    for (const Edge& e : to_add) {
        if (to_remove.count(e)) throw std::invalid_argument("perturb: add/remove overlap");
        if (g.has_edge(e.first, e.second))
            throw std::invalid_argument("perturb: edge to add already present");
    }
    for (const Edge& e : to_remove) {
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("perturb: edge to remove absent");
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!to_remove.count(e)) edges.push_back(e);
    edges.insert(edges.end(), to_add.begin(), to_add.end());
    PerturbResult out{Graph::from_edges(g.vertex_count(), std::move(edges)), false};
    out.triangle_free = is_triangle_free(out.graph);
    return out;
}

long long induced_edge_count(const Graph& g, const VertexSet& s) {
    long long count = 0;
    for (int u : s.members) {
        for (int v : g.neighbors(u)) {
            if (v > u && s.contains(v)) ++count;
        }
    }
    return count;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.vertex_count();
    if (n == 0) return p;
    p.min_deg = g.degree(0);
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        p.min_deg = std::min(p.min_deg, d);
        p.max_deg = std::max(p.max_deg, d);
        p.sum_deg += d;
        p.sum_deg_sq += static_cast<long long>(d) * d;
    }
    return p;
}

namespace {

// Greedy clique-cover bound: candidates are covered by cliques grown
// greedily; an independent set meets each clique at most once.
int clique_cover_bound(const Graph& g, std::uint64_t cand) {
    int bound = 0;
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= ~(std::uint64_t{1} << v);
        std::uint64_t common = g.neighbor_mask(v) & cand;
        while (common) {
            const int u = std::countr_zero(common);
            cand &= ~(std::uint64_t{1} << u);
            common &= g.neighbor_mask(u) & cand;
        }
        ++bound;
    }
    return bound;
}

void best_independent(const Graph& g, std::uint64_t cand, int size, int* best) {
    if (size + std::popcount(cand) <= *best) return;
    if (cand == 0) {
        *best = std::max(*best, size);
        return;
    }
    if (size + clique_cover_bound(g, cand) <= *best) return;
    const int v = std::countr_zero(cand);
    // Branch: take v, or discard it.
    best_independent(g, cand & ~(g.neighbor_mask(v) | (std::uint64_t{1} << v)),
                     size + 1, best);
    best_independent(g, cand & ~(std::uint64_t{1} << v), size, best);
}

void enumerate_of_size(const Graph& g, std::uint64_t cand, std::uint64_t chosen,
                       int size, int target, std::vector<std::uint64_t>* out) {
    if (size == target) {
        out->push_back(chosen);
        return;
    }
    if (size + std::popcount(cand) < target) return;
    const int v = std::countr_zero(cand);
    enumerate_of_size(g, cand & ~(g.neighbor_mask(v) | (std::uint64_t{1} << v)),
                      chosen | (std::uint64_t{1} << v), size + 1, target, out);
    enumerate_of_size(g, cand & ~(std::uint64_t{1} << v), chosen, size, target, out);
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw ResourceLimitError("independence_number: n > 64");
    if (n == 0) return 0;
    int best = 0;
    best_independent(g, full_mask(n), 0, &best);
    return best;
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw ResourceLimitError("maximum_independent_sets: n > 64");
    if (n == 0) return {};
    const int alpha = independence_number(g);
    std::vector<std::uint64_t> masks;
    enumerate_of_size(g, full_mask(n), 0, 0, alpha, &masks);
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
        VertexSet s{n, {}};
        while (m) {
            const int v = std::countr_zero(m);
            s.members.push_back(v);
            m &= m - 1;
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.members < b.members; });
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* old_to_new) {
    std::vector<int> relabel(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (relabel[u] >= 0 && relabel[v] >= 0)
            edges.emplace_back(relabel[u], relabel[v]);
    }
    if (old_to_new) *old_to_new = relabel;
    return Graph::from_edges(static_cast<int>(keep.size()), std::move(edges));
}

}  // namespace sparsehalf
