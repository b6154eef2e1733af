#include "sparsehalf/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/halves.hpp"

namespace sparsehalf {

namespace {

const Rat kSparseBound(1, 50);

template <std::size_t N>
void check_window_box(const std::array<Rat, N>& x, int width) {
    Rat total = 0;
    for (const Rat& v : x) {
        if (v < Rat(1, 14) || v > 1)
            throw ConstraintError("constraint box: variable outside [1/14, 1]");
        total += v;
    }
    if (total != 1) throw ConstraintError("constraint box: variables must sum to 1");
    for (std::size_t i = 0; i < N; ++i) {
        Rat window = 0;
        for (int t = 0; t < width; ++t) window += x[(i + t) % N];
        if (window < Rat(5, 14))
            throw ConstraintError("constraint box: window below 5/14");
    }
}

template <std::size_t N>
Rat cyclic_mass(const std::array<Rat, N>& x, std::size_t i, int width) {
    // Per-window half mass: leftover h = 1/2 - window, ends get h/2,
    // value h/2 * (first + last of window) + (h/2)^2.
    Rat window = 0;
    for (int t = 0; t < width; ++t) window += x[(i + t) % N];
    const Rat leftover = Rat(1, 2) - window;
    return leftover / 2 * (x[i % N] + x[(i + width - 1) % N]) +
           leftover * leftover / 4;
}

}  // namespace

Rat lemma8_min_lhs(const std::array<Rat, 8>& x) {
    check_window_box(x, 3);
    Rat best = cyclic_mass(x, 0, 3);
    for (std::size_t i = 1; i < 8; ++i) best = std::min(best, cyclic_mass(x, i, 3));
    return best;
}

Rat lemma11_min_lhs(const std::array<Rat, 11>& x) {
    check_window_box(x, 4);
    Rat best = cyclic_mass(x, 0, 4);
    for (std::size_t i = 1; i < 11; ++i) best = std::min(best, cyclic_mass(x, i, 4));
    return best;
}

Rat petersen_sum(const std::array<Rat, 10>& x, const std::array<Rat, 5>& y,
                 const Rat& delta) {
    if (delta <= 0 || delta > Rat(1, 90))
        throw ConstraintError("petersen_sum: delta outside (0, 1/90]");
    Rat total = 0;
    for (const Rat& v : x) {
        if (v < Rat(1, 10) - delta || v > 1)
            throw ConstraintError("petersen_sum: x_i outside [1/10 - delta, 1]");
        total += v;
    }
    for (const Rat& v : y) {
        if (v < 0 || v > 1) throw ConstraintError("petersen_sum: y_j outside [0, 1]");
        total += v;
    }
    if (total != 1) throw ConstraintError("petersen_sum: variables must sum to 1");

    const PstarStructure st = pstar_structure();
    if (st.entries.size() != 20)
        throw ConstraintError("petersen_sum: expected 20 terms");
    Rat sum = 0;
    for (const auto& entry : st.entries) {
        Rat triple = 0;
        for (int v : entry.triple) triple += x[v];
        const Rat yi = y[entry.star];
        const Rat yj = y[entry.partner];
        sum += (Rat(1, 2) - triple - yi - yj / 4) * (yj / 4 + triple / 3);
    }
    return sum;
}

C5JensenReport c5_jensen_sum(const std::vector<Rat>& w) {
    if (w.size() != 5) throw std::invalid_argument("c5_jensen_sum: need 5 weights");
    Rat total = 0;
    for (const Rat& v : w) {
        if (v < 0) throw ConstraintError("c5_jensen_sum: negative weight");
        total += v;
    }
    if (total != 1) throw ConstraintError("c5_jensen_sum: weights must sum to 1");
    C5JensenReport report{Rat(0), Rat(1, 2)};
    for (int i = 0; i < 5; ++i) {
        report.direct_sum += w[i] * (Rat(1, 2) - w[i] - w[(i + 1) % 5]);
        const Rat pair = w[i] + w[(i + 1) % 5];
        report.closed_form -= pair * pair / 2;
    }
    return report;
}

namespace {

// ---- falsification search (doubles, exact re-verification) ----

struct SearchSpec {
    int dim = 0;
    std::vector<double> lower;
    int window_width = 0;       // 0 = no window constraints
    double window_bound = 0.0;
    int window_vars = 0;        // windows run over the first window_vars coordinates
};

double window_sum(const std::vector<double>& p, const SearchSpec& spec, int i) {
    double s = 0;
    for (int t = 0; t < spec.window_width; ++t)
        s += p[(i + t) % spec.window_vars];
    return s;
}

bool feasible(const std::vector<double>& p, const SearchSpec& spec, double tol) {
    double total = 0;
    for (int i = 0; i < spec.dim; ++i) {
        if (p[i] < spec.lower[i] - tol || p[i] > 1 + tol) return false;
        total += p[i];
    }
    if (std::abs(total - 1) > tol) return false;
    if (spec.window_width > 0) {
        for (int i = 0; i < spec.window_vars; ++i) {
            if (window_sum(p, spec, i) < spec.window_bound - tol) return false;
        }
    }
    return true;
}

// Alternating projection onto the box, the sum-1 hyperplane and the window
// half-spaces. Returns false if still infeasible after the iteration cap.
bool project(std::vector<double>* p, const SearchSpec& spec) {
    for (int iter = 0; iter < 100; ++iter) {
        for (int i = 0; i < spec.dim; ++i)
            (*p)[i] = std::clamp((*p)[i], spec.lower[i], 1.0);
        double total = 0;
        for (double v : *p) total += v;
        const double shift = (1 - total) / spec.dim;
        for (double& v : *p) v += shift;
        if (spec.window_width > 0) {
            for (int i = 0; i < spec.window_vars; ++i) {
                const double deficit = spec.window_bound - window_sum(*p, spec, i);
                if (deficit > 0) {
                    for (int t = 0; t < spec.window_width; ++t)
                        (*p)[(i + t) % spec.window_vars] += deficit / spec.window_width;
                }
            }
        }
        if (feasible(*p, spec, 1e-12)) return true;
    }
    return feasible(*p, spec, 1e-9);
}

double mass_term(const std::vector<double>& p, int n, int i, int width) {
    double window = 0;
    for (int t = 0; t < width; ++t) window += p[(i + t) % n];
    const double leftover = 0.5 - window;
    return leftover / 2 * (p[i % n] + p[(i + width - 1) % n]) +
           leftover * leftover / 4;
}

struct Target {
    SearchSpec spec;
    // Positive score = candidate violation in doubles.
    std::function<double(const std::vector<double>&)> score;
    // Exact re-verification; returns a description on success.
    std::function<std::optional<std::string>(const std::vector<Rat>&)> verify;
};

std::vector<Rat> rationalize(const std::vector<double>& p) {
    std::vector<Rat> out;
    out.reserve(p.size());
    Rat total = 0;
    for (double v : p) {
        out.emplace_back(v);  // exact binary value
        total += out.back();
    }
    // Repair the sum on the largest coordinate so the simplex constraint
    // holds exactly.
    std::size_t arg = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (out[i] > out[arg]) arg = i;
    }
    out[arg] += 1 - total;
    return out;
}

template <std::size_t N>
std::optional<std::array<Rat, N>> to_array(const std::vector<Rat>& v) {
    if (v.size() != N) return std::nullopt;
    std::array<Rat, N> out;
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

Target make_target(const std::string& lemma) {
    const Rat bound394(394, 1000);
    const Rat bound106(106, 1000);
    if (lemma == "8cycle" || lemma == "claim394" || lemma == "claim106") {
        SearchSpec spec{8, std::vector<double>(8, 1.0 / 14), 3, 5.0 / 14, 8};
        if (lemma == "8cycle") {
            return Target{
                spec,
                [](const std::vector<double>& p) {
                    double best = mass_term(p, 8, 0, 3);
                    for (int i = 1; i < 8; ++i) best = std::min(best, mass_term(p, 8, i, 3));
                    return best - 0.02;
                },
                [](const std::vector<Rat>& p) -> std::optional<std::string> {
                    auto x = to_array<8>(p);
                    if (!x) return std::nullopt;
                    try {
                        const Rat value = lemma8_min_lhs(*x);
                        if (value > kSparseBound)
                            return "min lhs = " + format_rational(value) + " > 1/50";
                    } catch (const ConstraintError&) {
                    }
                    return std::nullopt;
                }};
        }
        if (lemma == "claim394") {
            return Target{
                spec,
                [](const std::vector<double>& p) {
                    double best = -1;
                    for (int i = 0; i < 8; ++i) {
                        double window = p[i] + p[(i + 1) % 8] + p[(i + 2) % 8];
                        best = std::max(best, std::min(mass_term(p, 8, i, 3) - 0.02,
                                                       window - 0.394));
                    }
                    return best;
                },
                [bound394](const std::vector<Rat>& p) -> std::optional<std::string> {
                    auto x = to_array<8>(p);
                    if (!x) return std::nullopt;
                    try {
                        check_window_box(*x, 3);
                    } catch (const ConstraintError&) {
                        return std::nullopt;
                    }
                    for (int i = 0; i < 8; ++i) {
                        const Rat window = (*x)[i] + (*x)[(i + 1) % 8] + (*x)[(i + 2) % 8];
                        if (cyclic_mass(*x, i, 3) > kSparseBound && window >= bound394)
                            return "index " + std::to_string(i) + " has mass > 1/50 and window " +
                                   format_rational(window) + " >= 0.394";
                    }
                    return std::nullopt;
                }};
        }
        // claim106
        return Target{
            spec,
            [](const std::vector<double>& p) {
                double min_margin = 1;
                for (int i = 0; i < 8; ++i) {
                    double window = p[i] + p[(i + 1) % 8] + p[(i + 2) % 8];
                    min_margin = std::min(min_margin, 0.394 - window);
                }
                double min_z = 1;
                for (int i = 0; i < 4; ++i)
                    min_z = std::min(min_z, (p[i] + p[i + 4]) / 2);
                return std::min(min_margin, 0.106 - min_z);
            },
            [bound394, bound106](const std::vector<Rat>& p) -> std::optional<std::string> {
                auto x = to_array<8>(p);
                if (!x) return std::nullopt;
                try {
                    check_window_box(*x, 3);
                } catch (const ConstraintError&) {
                    return std::nullopt;
                }
                for (int i = 0; i < 8; ++i) {
                    const Rat window = (*x)[i] + (*x)[(i + 1) % 8] + (*x)[(i + 2) % 8];
                    if (window >= bound394) return std::nullopt;
                }
                for (int i = 0; i < 4; ++i) {
                    const Rat z = ((*x)[i] + (*x)[i + 4]) / 2;
                    if (z <= bound106)
                        return "z_" + std::to_string(i + 1) + " = " + format_rational(z) +
                               " <= 0.106 with all windows below 0.394";
                }
                return std::nullopt;
            }};
    }
    if (lemma == "11cycle") {
        SearchSpec spec{11, std::vector<double>(11, 1.0 / 14), 4, 5.0 / 14, 11};
        return Target{
            spec,
            [](const std::vector<double>& p) {
                double best = mass_term(p, 11, 0, 4);
                for (int i = 1; i < 11; ++i) best = std::min(best, mass_term(p, 11, i, 4));
                return best - 0.02;
            },
            [](const std::vector<Rat>& p) -> std::optional<std::string> {
                auto x = to_array<11>(p);
                if (!x) return std::nullopt;
                try {
                    const Rat value = lemma11_min_lhs(*x);
                    if (value > kSparseBound)
                        return "min lhs = " + format_rational(value) + " > 1/50";
                } catch (const ConstraintError&) {
                }
                return std::nullopt;
            }};
    }
    if (lemma == "petersen") {
        // Search at the most permissive delta = 1/90.
        SearchSpec spec{15, std::vector<double>(15, 0.0), 0, 0.0, 0};
        for (int i = 0; i < 10; ++i) spec.lower[i] = 0.1 - 1.0 / 90;
        const PstarStructure st = pstar_structure();
        auto entries = st.entries;
        return Target{
            spec,
            [entries](const std::vector<double>& p) {
                double sum = 0;
                for (const auto& e : entries) {
                    double triple = p[e.triple[0]] + p[e.triple[1]] + p[e.triple[2]];
                    const double yi = p[10 + e.star];
                    const double yj = p[10 + e.partner];
                    sum += (0.5 - triple - yi - yj / 4) * (yj / 4 + triple / 3);
                }
                return sum - 0.4;
            },
            [](const std::vector<Rat>& p) -> std::optional<std::string> {
                if (p.size() != 15) return std::nullopt;
                std::array<Rat, 10> x;
                std::array<Rat, 5> y;
                std::copy(p.begin(), p.begin() + 10, x.begin());
                std::copy(p.begin() + 10, p.end(), y.begin());
                try {
                    const Rat value = petersen_sum(x, y, Rat(1, 90));
                    if (value > Rat(2, 5))
                        return "sum = " + format_rational(value) + " > 2/5";
                } catch (const ConstraintError&) {
                }
                return std::nullopt;
            }};
    }
    if (lemma == "c5jensen") {
        SearchSpec spec{5, std::vector<double>(5, 0.0), 0, 0.0, 0};
        return Target{
            spec,
            [](const std::vector<double>& p) {
                double sum = 0;
                for (int i = 0; i < 5; ++i)
                    sum += p[i] * (0.5 - p[i] - p[(i + 1) % 5]);
                return sum - 0.1;
            },
            [](const std::vector<Rat>& p) -> std::optional<std::string> {
                if (p.size() != 5) return std::nullopt;
                try {
                    const auto report = c5_jensen_sum(p);
                    if (report.direct_sum > Rat(1, 10))
                        return "sum = " + format_rational(report.direct_sum) + " > 1/10";
                } catch (const ConstraintError&) {
                }
                return std::nullopt;
            }};
    }
    throw std::invalid_argument("falsify: unknown lemma '" + lemma + "'");
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FalsifyReport falsify_search(const std::string& lemma, long long budget,
                             std::uint64_t seed) {
    if (budget <= 0) throw std::invalid_argument("falsify: budget must be positive");
    Target target = make_target(lemma);
    const SearchSpec& spec = target.spec;
    std::mt19937_64 rng(seed);

    // The uniform-ish start point must be feasible, otherwise the box is
    // empty or mis-specified.
    std::vector<double> uniform(spec.dim, 1.0 / spec.dim);
    if (!project(&uniform, spec) || !feasible(uniform, spec, 1e-9))
        throw ConstraintError("falsify: constraint box rejects the uniform point");

    double best_score = -1;
    std::vector<double> best_point;
    for (long long sample = 0; sample < budget; ++sample) {
        std::vector<double> p(spec.dim);
        if (sample % 3 == 0) {
            // Dirichlet(1) start.
            double total = 0;
            for (double& v : p) {
                v = -std::log(std::max(unit_double(rng), 1e-300));
                total += v;
            }
            for (double& v : p) v /= total;
        } else {
            // Perturbed uniform start, occasionally pushed to the box floor.
            const double scale = sample % 3 == 1 ? 0.05 : 0.5;
            for (int i = 0; i < spec.dim; ++i)
                p[i] = uniform[i] + scale * (unit_double(rng) - 0.5);
        }
        if (!project(&p, spec)) continue;

        double score = target.score(p);
        // Local ascent by feasibility-preserving pairwise transfers.
        for (int step = 0; step < 40; ++step) {
            const int a = static_cast<int>(rng() % spec.dim);
            const int b = static_cast<int>(rng() % spec.dim);
            if (a == b) continue;
            const double t = (p[a] - spec.lower[a]) * unit_double(rng) * 0.5;
            if (t <= 0) continue;
            std::vector<double> q = p;
            q[a] -= t;
            q[b] += t;
            if (!feasible(q, spec, 1e-12)) continue;
            const double s = target.score(q);
            if (s > score) {
                p = std::move(q);
                score = s;
            }
        }
        if (score > best_score && feasible(p, spec, 1e-12)) {
            best_score = score;
            best_point = p;
        }
        if (score > 1e-9) {
            const auto exact = target.verify(rationalize(p));
            if (exact) {
                Counterexample ce;
                ce.point = p;
                ce.violation = score;
                ce.detail = *exact;
                return FalsifyReport{std::move(ce), best_point, best_score};
            }
        }
    }
    return FalsifyReport{std::nullopt, best_point, best_score};
}

std::optional<Counterexample> falsify(const std::string& lemma, long long budget,
                                      std::uint64_t seed) {
    return falsify_search(lemma, budget, seed).counterexample;
}

}  // namespace sparsehalf
