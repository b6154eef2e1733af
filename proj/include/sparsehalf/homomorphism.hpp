#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace sparsehalf {

/// Edge-preserving vertex map between two graphs. The constructor re-scans
/// every source edge, so a Homomorphism value is always valid.
class Homomorphism {
public:
    Homomorphism(std::shared_ptr<const Graph> source,
                 std::shared_ptr<const Graph> target, std::vector<int> map);

    const Graph& source() const { return *source_; }
    const Graph& target() const { return *target_; }
    const std::shared_ptr<const Graph>& source_ptr() const { return source_; }
    const std::shared_ptr<const Graph>& target_ptr() const { return target_; }

    int image(int v) const { return map_[v]; }
    const std::vector<int>& map() const { return map_; }

    bool is_surjective() const;

    /// Preimages of the target vertices, each sorted ascending.
    std::vector<std::vector<int>> fibers() const;

private:
    std::shared_ptr<const Graph> source_;
    std::shared_ptr<const Graph> target_;
    std::vector<int> map_;
};

/// Backtracking H-coloring search; returns the lexicographically first
/// homomorphism under the source vertex order, or nullopt. Guards:
/// v(g) <= 200 and v(h) <= 32 (ResourceLimitError beyond).
std::optional<Homomorphism> find_homomorphism(std::shared_ptr<const Graph> g,
                                              std::shared_ptr<const Graph> h);

/// True iff non-edges of the source map to non-edges of the target
/// (vertices with equal images count as non-edges of the target).
bool is_strong_homomorphism(const Homomorphism& phi);

/// Given a non-surjective homomorphism into F_d (d >= 2), produces a
/// homomorphism into F_{d-1}: rotate so the missed vertex is first, then
/// collapse the index pairs {d, d+1} and {2d, 2d+1} (1-based) and shift the
/// three remaining arcs down. Throws ConstraintError when phi is already
/// surjective and std::invalid_argument when d = 1 or the target is not F_d.
Homomorphism desurject_reduce(const Homomorphism& phi);

struct FdHomomorphism {
    int d = 0;
    Homomorphism phi;
};

/// Searches for a homomorphism into F_{d_max} and reduces it with
/// desurject_reduce until it is surjective (or d = 1, which can stay
/// non-surjective only for edgeless graphs). nullopt when no homomorphism
/// into F_{d_max} exists.
std::optional<FdHomomorphism> surjective_homomorphism_to_fd(
    std::shared_ptr<const Graph> g, int d_max);

}  // namespace sparsehalf
