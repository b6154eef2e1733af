#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/weighted.hpp"

namespace sparsehalf {

/// Evidence that g is approximated by the template h along a partition:
/// the induced blowup H_V, the symmetric-difference edge set F and the
/// achieved epsilon = max(block-size deviation / n, |F| / n^2).
struct ApproximationWitness {
    Partition partition;
    Graph template_graph;
    Graph hv;
    std::vector<Edge> diff_edges;
    Rat eps_achieved;
};

ApproximationWitness check_eps_approximation(const Graph& g, const Graph& h,
                                             const Partition& partition);

struct CoveringSet {
    VertexSet d_set;
    std::vector<Edge> covered;
};

/// Minimum-cardinality vertex set touching every edge of f, by exact branch
/// and bound (deterministic: lowest-index uncovered edge, lower endpoint
/// first). Guard |f| <= 10^4; set allow_greedy to accept a maximal-matching
/// 2-approximation beyond the guard instead of failing.
CoveringSet min_covering_set(const Graph& g, const std::vector<Edge>& f,
                             bool allow_greedy = false);

struct DisturbedReport {
    bool holds = false;
    int failed_condition = 0;          // 0 = none, else 1..3
    VertexSet covering;                // the covering set used for condition 2
    int worst_vertex = -1;             // witness for condition 3
    long long worst_excess_degree = 0;
};

/// Checks the three conditions of the eps-disturbed relation between g and
/// g_prime: equal vertex sets, an eps-covering of E(g) \ E(g'), and the
/// per-vertex bound |N_g(v) \ N_g'(v)| <= eps v(g').
DisturbedReport is_eps_disturbed(const Graph& g, const Graph& g_prime, const Rat& eps);

/// min over non-edges uv of omega(N(u) cap N(v)); the weight an added edge's
/// triangles would carry. Requires a triangle-free underlying graph.
/// nullopt when the graph is complete (the minimum over an empty set).
std::optional<Rat> weighted_c_maximality(const WeightFunction& wf);

enum class DichotomyOutcome { kManyHighDegree = 1, kFewLowDegree = 2 };

struct DichotomyReport {
    DichotomyOutcome outcome;
    VertexSet high_degree;  // vertices of degree >= (2/5 + delta) n
    VertexSet low_degree;   // vertices of degree <= (2/5 - 2 sqrt(delta)) n
};

/// Either at least delta*n vertices have degree >= (2/5 + delta) n, or at
/// most 2 sqrt(delta) n vertices have degree <= (2/5 - 2 sqrt(delta)) n.
/// Requires e(g) >= (1/5 - delta) n^2; raises TheoremViolationError if
/// neither side holds, which would falsify the counting lemma.
DichotomyReport degree_dichotomy(const Graph& g, const Rat& delta);

enum class TrichotomyOutcome { kHighDegree, kNearBipartite, kC5Approximable };

struct TrichotomyResult {
    TrichotomyOutcome outcome;
    DichotomyReport dichotomy;
    // kHighDegree: the witness vertices live in dichotomy.high_degree.
    // kNearBipartite:
    std::vector<Edge> removed_edges;  // F with G - F bipartite
    VertexSet bipartition_side;       // one side of the bipartition of G - F
    // kC5Approximable:
    std::optional<ApproximationWitness> witness;
};

/// The constructive trichotomy for dense triangle-free graphs: many
/// high-degree vertices, near-bipartite after removing few edges, or
/// eps-approximable by C5. Outcomes are reported in proof order. delta
/// defaults to (eps/40)^2 when not supplied.
TrichotomyResult classify_trichotomy(std::shared_ptr<const Graph> g, const Rat& eps,
                                     std::optional<Rat> delta = std::nullopt);

/// Fiber-size bounds (1/5 - 3 delta) n <= |phi^{-1}(v)| <= (1/5 + 2 delta) n
/// for a surjective homomorphism onto C5.
bool fiber_bounds_check(const Homomorphism& phi, const Rat& delta);

struct SumSqDegreeReport {
    bool edge_hypothesis = false;    // e(g) >= (1/5 - gamma) n^2
    bool degree_hypothesis = false;  // >= delta n vertices of degree >= (2/5 + delta) n
    bool conclusion = false;         // (1/n) sum d^2 >= (2n/5)^2
    bool implication_holds = false;
};

/// gamma defaults to (25/16) delta^5, the constant of the averaging lemma.
SumSqDegreeReport sum_sq_degree_condition(const Graph& g, const Rat& delta,
                                          std::optional<Rat> gamma = std::nullopt);

}  // namespace sparsehalf
