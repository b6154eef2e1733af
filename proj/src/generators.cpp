#include "sparsehalf/generators.hpp"

#include <algorithm>
#include <set>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

Graph make_fd(int d) {
    if (d < 1) throw std::invalid_argument("make_fd: d must be positive");
    const int n = 3 * d - 1;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int t = 0; t < d; ++t) {
            const int v = (u + d + t) % n;
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph make_c5() { return make_fd(2); }

Graph make_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, std::move(edges));
}

StarExtension star_extension(const Graph& h) {
    const int k = h.vertex_count();
    if (k > 64) throw ResourceLimitError("star_extension: v(h) > 64");
    const auto mis = maximum_independent_sets(h);

    std::set<std::vector<int>> neighborhoods;
    for (int v = 0; v < k; ++v) neighborhoods.insert(h.neighbors(v));

    StarExtension out;
    out.base = h;
    std::vector<Edge> edges = h.edges();
    int next = k;
    for (const auto& s : mis) {  // already in lexicographic order
        if (neighborhoods.count(s.members)) continue;
        for (int v : s.members) edges.emplace_back(v, next);
        out.added.emplace_back(next, s);
        ++next;
    }
    out.extension = Graph::from_edges(next, std::move(edges));
    return out;
}

bool is_entwined(const Graph& h) {
    const auto star = star_extension(h);
    const auto& added = star.added;
    for (std::size_t a = 0; a < added.size(); ++a) {
        for (std::size_t b = a + 1; b < added.size(); ++b) {
            const auto& x = added[a].second.members;
            const auto& y = added[b].second.members;
            std::vector<int> inter;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) return false;
        }
    }
    return true;
}

namespace {

bool color_rec(const Graph& g, int k, int v, std::vector<int>* color) {
    if (v == g.vertex_count()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (u < v && (*color)[u] == c) { ok = false; break; }
        }
        if (!ok) continue;
        (*color)[v] = c;
        if (color_rec(g, k, v + 1, color)) return true;
    }
    (*color)[v] = -1;
    return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
    std::vector<int> color(g.vertex_count(), -1);
    return color_rec(g, k, 0, &color);
}

FdFactReport fd_fact_check(int d) {
    if (d < 1) throw std::invalid_argument("fd_fact_check: d must be positive");
    if (d > 9) throw ResourceLimitError("fd_fact_check: d > 9");
    const Graph g = make_fd(d);
    FdFactReport r;
    r.d = d;
    r.triangle_free = is_triangle_free(g);
    r.three_colorable = is_k_colorable(g, 3);
    const auto mis = maximum_independent_sets(g);
    r.mis_count = static_cast<int>(mis.size());
    r.alpha_is_d = !mis.empty() && mis.front().size() == d;
    std::set<std::vector<int>> neighborhoods;
    for (int v = 0; v < g.vertex_count(); ++v) neighborhoods.insert(g.neighbors(v));
    r.mis_are_neighborhoods =
        std::all_of(mis.begin(), mis.end(), [&](const VertexSet& s) {
            return neighborhoods.count(s.members) > 0;
        }) &&
        mis.size() == neighborhoods.size();
    r.pass = r.triangle_free && r.three_colorable && r.alpha_is_d &&
             r.mis_are_neighborhoods;
    return r;
}

}  // namespace sparsehalf
