#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsehalf/rational.hpp"
#include "sparsehalf/weighted.hpp"

namespace sparsehalf {

/// min over i of
///   1/2 (1/2 - (x_i + x_{i+1} + x_{i+2})) (x_i + x_{i+2})
///   + 1/4 (1/2 - (x_i + x_{i+1} + x_{i+2}))^2
/// over the cyclic index range. Requires x_i >= 1/14, sum = 1 and every
/// width-3 window >= 5/14 (ConstraintError otherwise). The lemma asserts
/// the minimum is at most 1/50.
Rat lemma8_min_lhs(const std::array<Rat, 8>& x);

/// The width-4 analogue on 11 variables, ends x_{i+1} + x_{i+4}.
Rat lemma11_min_lhs(const std::array<Rat, 11>& x);

/// The 20-term sum of the P* half masses, instantiated from the same
/// admissible-triple structure used by the half construction. Requires
/// sum x + sum y = 1, x_i >= 1/10 - delta and 0 < delta <= 1/90. The lemma
/// asserts the sum is at most 2/5.
Rat petersen_sum(const std::array<Rat, 10>& x, const std::array<Rat, 5>& y,
                 const Rat& delta);

/// Both sides of the C5 averaging identity: the sum of the five window-half
/// edge masses and the closed form 1/2 - 1/2 sum (w_i + w_{i+1})^2. The sum
/// is at most 1/10 for every weighting.
struct C5JensenReport {
    Rat direct_sum;
    Rat closed_form;
};
C5JensenReport c5_jensen_sum(const std::vector<Rat>& w);

/// A point at which a target inequality fails, re-verified exactly.
struct Counterexample {
    std::vector<double> point;
    double violation = 0.0;   // amount above the bound, in doubles
    std::string detail;
};

struct FalsifyReport {
    std::optional<Counterexample> counterexample;
    std::vector<double> worst_point;  // best-scoring feasible point seen
    double worst_margin = 0.0;        // its score; <= 0 means no violation
};

/// Randomized + projected local-ascent falsification search. Targets:
///   8cycle, 11cycle, petersen, c5jensen — the proved inequalities;
///   claim394  — windows must stay below 0.394 where the per-index mass
///               exceeds 1/50;
///   claim106  — antipodal averages exceed 0.106 once all windows are
///               below 0.394.
/// A violation is flagged only when it exceeds the bound by more than 1e-9
/// in doubles and survives exact rational re-verification.
FalsifyReport falsify_search(const std::string& lemma, long long budget,
                             std::uint64_t seed);

/// nullopt when no feasible sampled point violates the target within the
/// budget; otherwise the exactly re-verified counterexample.
std::optional<Counterexample> falsify(const std::string& lemma, long long budget,
                                      std::uint64_t seed);

}  // namespace sparsehalf
