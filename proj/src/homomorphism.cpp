#include "sparsehalf/homomorphism.hpp"

#include <algorithm>
#include <cstdint>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"

namespace sparsehalf {

Homomorphism::Homomorphism(std::shared_ptr<const Graph> source,
                           std::shared_ptr<const Graph> target,
                           std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw std::invalid_argument("homomorphism: null graph");
    if (static_cast<int>(map_.size()) != source_->vertex_count())
        throw std::invalid_argument("homomorphism: map size != v(source)");
    for (int img : map_) {
        if (img < 0 || img >= target_->vertex_count())
            throw std::invalid_argument("homomorphism: image out of range");
    }
    // Independent edge-preservation check over all source edges.
    for (const auto& [u, v] : source_->edges()) {
        if (!target_->has_edge(map_[u], map_[v]))
            throw std::invalid_argument("homomorphism: edge not preserved");
    }
}

bool Homomorphism::is_surjective() const {
    std::vector<char> hit(target_->vertex_count(), 0);
    for (int img : map_) hit[img] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<std::vector<int>> Homomorphism::fibers() const {
    std::vector<std::vector<int>> out(target_->vertex_count());
    for (int v = 0; v < source_->vertex_count(); ++v) out[map_[v]].push_back(v);
    return out;
}

namespace {

bool search(const Graph& g, const Graph& h, int v, std::vector<int>* map,
            std::vector<std::uint32_t>* cand) {
    const int n = g.vertex_count();
    if (v == n) return true;
    std::uint32_t options = (*cand)[v];
    while (options) {
        const int c = std::countr_zero(options);
        options &= options - 1;
        (*map)[v] = c;
        // Forward check: restrict unassigned neighbors to N_h(c).
        std::vector<std::pair<int, std::uint32_t>> saved;
        bool dead = false;
        const std::uint32_t allowed = static_cast<std::uint32_t>(h.neighbor_mask(c));
        for (int u : g.neighbors(v)) {
            if (u <= v) continue;
            saved.emplace_back(u, (*cand)[u]);
            (*cand)[u] &= allowed;
            if ((*cand)[u] == 0) { dead = true; break; }
        }
        if (!dead && search(g, h, v + 1, map, cand)) return true;
        for (const auto& [u, old] : saved) (*cand)[u] = old;
    }
    (*map)[v] = -1;
    return false;
}

}  // namespace

std::optional<Homomorphism> find_homomorphism(std::shared_ptr<const Graph> g,
                                              std::shared_ptr<const Graph> h) {
    if (g->vertex_count() > 200) throw ResourceLimitError("find_homomorphism: v(g) > 200");
    if (h->vertex_count() > 32) throw ResourceLimitError("find_homomorphism: v(h) > 32");
    if (g->vertex_count() > 0 && h->vertex_count() == 0) return std::nullopt;
    if (g->edge_count() > 0 && h->edge_count() == 0) return std::nullopt;

    const std::uint32_t all =
        h->vertex_count() == 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << h->vertex_count()) - 1;
    std::vector<std::uint32_t> cand(g->vertex_count(), all);
    std::vector<int> map(g->vertex_count(), -1);
    if (!search(*g, *h, 0, &map, &cand)) return std::nullopt;
    return Homomorphism(std::move(g), std::move(h), std::move(map));
}

bool is_strong_homomorphism(const Homomorphism& phi) {
    const Graph& g = phi.source();
    const Graph& h = phi.target();
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            if (h.has_edge(phi.image(u), phi.image(v))) return false;
        }
    }
    return true;
}

Homomorphism desurject_reduce(const Homomorphism& phi) {
    const int nt = phi.target().vertex_count();
    if ((nt + 1) % 3 != 0) throw std::invalid_argument("desurject_reduce: target is not an F_d");
    const int d = (nt + 1) / 3;
    if (!(phi.target() == make_fd(d)))
        throw std::invalid_argument("desurject_reduce: target is not F_d");
    if (d == 1) throw std::invalid_argument("desurject_reduce: d = 1 has no reduction");

    std::vector<char> hit(nt, 0);
    for (int v = 0; v < phi.source().vertex_count(); ++v) hit[phi.image(v)] = 1;
    int missing = -1;
    for (int t = 0; t < nt; ++t) {
        if (!hit[t]) { missing = t; break; }
    }
    if (missing < 0) throw ConstraintError("desurject_reduce: homomorphism is surjective");

    // Index map on 1-based labels of the rotated F_d (the missed vertex is
    // rotated to v_1, so class 1 is empty). Collapses {d, d+1} -> d-1 and
    // {2d, 2d+1} -> 2d-2; the three arcs in between shift by 1, 2 and 3.
    auto reduce_index = [d](int i) {
        if (i <= d - 1) return i - 1;
        if (i <= d + 1) return d - 1;
        if (i <= 2 * d - 1) return i - 2;
        if (i <= 2 * d + 1) return 2 * d - 2;
        return i - 3;
    };

    std::vector<int> map(phi.source().vertex_count());
    for (int v = 0; v < phi.source().vertex_count(); ++v) {
        const int rotated = ((phi.image(v) - missing) % nt + nt) % nt;  // 0-based, never 0
        map[v] = reduce_index(rotated + 1) - 1;
    }
    auto target = std::make_shared<const Graph>(make_fd(d - 1));
    // The Homomorphism constructor re-verifies edge preservation.
    return Homomorphism(phi.source_ptr(), std::move(target), std::move(map));
}

std::optional<FdHomomorphism> surjective_homomorphism_to_fd(
    std::shared_ptr<const Graph> g, int d_max) {
    if (d_max < 1) throw std::invalid_argument("surjective_homomorphism_to_fd: d_max < 1");
    auto target = std::make_shared<const Graph>(make_fd(d_max));
    auto phi = find_homomorphism(std::move(g), std::move(target));
    if (!phi) return std::nullopt;
    int d = d_max;
    while (d > 1 && !phi->is_surjective()) {
        phi = desurject_reduce(*phi);
        --d;
    }
    return FdHomomorphism{d, std::move(*phi)};
}

}  // namespace sparsehalf
