#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1. No self-loops,
/// no parallel edges. Safe to share between threads after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; duplicates and self-loops are rejected.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Sorted lexicographically, each with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighborhood as a bitmask. Only valid when vertex_count() <= 64.
    std::uint64_t neighbor_mask(int v) const { return mask_[v]; }
    bool has_masks() const { return !mask_.empty(); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> mask_;  // empty when n_ > 64
};

/// Subset of the vertices of a graph on n vertices; members sorted ascending.
struct VertexSet {
    int n = 0;
    std::vector<int> members;

    bool contains(int v) const;
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const VertexSet& other) const {
        return n == other.n && members == other.members;
    }
};

/// Ordered list of disjoint vertex sets covering 0..n-1. Block order is
/// significant: block i corresponds to template vertex i.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
};

/// Throws std::invalid_argument unless the blocks are disjoint, in range
/// and cover all of 0..n-1.
void validate_partition(const Partition& p);

bool is_triangle_free(const Graph& g);

/// Exact intersection of the two neighborhoods. Throws on u == v.
VertexSet common_neighbors(const Graph& g, int u, int v);

struct MaximalityClass {
    bool is_maximal = false;
    /// True when the graph has no non-edge; c_star is then meaningless
    /// (the minimum runs over an empty set).
    bool complete = false;
    Rat c_star;  // (min common-neighbor count over non-edges) / n
};

/// Classifies a triangle-free graph by how far it is from maximal
/// triangle-free. Precondition violation (a triangle) raises HypothesisError.
MaximalityClass maximality_class(const Graph& g);

struct BlowupResult {
    Graph graph;
    Partition partition;  // block i = the independent set replacing vertex i
};

/// Replaces vertex i of the template by an independent set of sizes[i]
/// vertices; template edges become complete bipartite graphs. Vertices are
/// numbered block by block, so block i occupies a contiguous index range.
BlowupResult blowup(const Graph& h, const std::vector<int>& sizes);

/// The graph H_V on the partition's vertex universe: block i independent,
/// blocks i,j joined completely iff ij is an edge of h.
Graph blowup_along_partition(const Graph& h, const Partition& p);

struct PerturbResult {
    Graph graph;
    bool triangle_free = false;
};

/// Applies the symmetric difference: `add` must be absent from g, `remove`
/// present; the two lists must not overlap.
PerturbResult perturb(const Graph& g, const std::vector<Edge>& add,
                      const std::vector<Edge>& remove);

/// Number of edges with both ends in s.
long long induced_edge_count(const Graph& g, const VertexSet& s);

struct DegreeProfile {
    int min_deg = 0;
    int max_deg = 0;
    long long sum_deg = 0;
    long long sum_deg_sq = 0;
};

DegreeProfile degree_profile(const Graph& g);

/// All independent sets of maximum cardinality, sorted lexicographically.
/// Exact enumeration; guarded to n <= 64 (ResourceLimitError beyond).
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

/// alpha(g), by branch and bound with a greedy-coloring bound. n <= 64.
int independence_number(const Graph& g);

/// Subgraph induced by `keep` (sorted ascending). If old_to_new is given it
/// receives the vertex relabeling (-1 for dropped vertices).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* old_to_new = nullptr);

}  // namespace sparsehalf
