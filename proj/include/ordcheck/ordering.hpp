#pragma once

#include "ordcheck/parallel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordcheck {

// Evaluation window and tolerance policy for the grid checkers. The window
// is quantile-anchored: [min of both systems' quantile(q_lo), max of both
// systems' quantile(q_hi)] on a geometric grid.
struct GridSpec {
    double q_lo = 1e-6;
    double q_hi = 1.0 - 1e-6;
    int points = 2048;
    int refine_rounds = 4;
    double mono_tol = 1e-9; // relative to local magnitude
};

void validate(const GridSpec& g);

enum class CheckedOrder { st, hr, rh, lr, rhr_ratio };
enum class Verdict { holds_on_grid, violated, inconclusive };

[[nodiscard]] std::string to_string(CheckedOrder o);
[[nodiscard]] std::string to_string(Verdict v);

// Violation location: a single t for pointwise checks, a grid cell (t1, t2)
// for monotonicity checks. magnitude is the raw deficit, margin the deficit
// divided by the local tolerance (violations have margin < -1).
struct Witness {
    double t1 = 0.0;
    std::optional<double> t2;
    double magnitude = 0.0;
};

struct SystemEcho {
    double alpha = 0.0;
    std::vector<double> lambdas;
    [[nodiscard]] bool operator==(const SystemEcho&) const = default;
};

// A grid pass is evidence at finite resolution, never proof: holds_on_grid
// asserts only that no violation beyond tolerance was found on the refined
// grid.
struct OrderingVerdict {
    CheckedOrder order = CheckedOrder::st;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Witness> witness;
    double min_margin = 0.0; // most adverse deficit/tolerance ratio seen
    GridSpec grid;
    SystemEcho a, b;
};

// Geometric grid over the union quantile window of the two systems.
[[nodiscard]] std::vector<double> comparison_grid(const ParallelSystem& a, const ParallelSystem& b,
                                                  const GridSpec& g);

// a <=_st b: survival_a <= survival_b pointwise, checked as cdf_a >= cdf_b.
// Deficits smaller than the probability mass outside the window cannot be
// attributed to in-window behavior, so the violation threshold is
// max(mono_tol, 2 * (mass above q_hi + mass below q_lo)).
[[nodiscard]] OrderingVerdict check_st(const ParallelSystem& a, const ParallelSystem& b,
                                       const GridSpec& g);

// a <=_hr b: survival ratio S_b/S_a nondecreasing, via increments of
// log S_b - log S_a.
[[nodiscard]] OrderingVerdict check_hr(const ParallelSystem& a, const ParallelSystem& b,
                                       const GridSpec& g);

// a <=_rh b: cdf ratio F_b/F_a nondecreasing; equivalent, for smooth positive
// densities, to the pointwise reverse-hazard comparison r_b >= r_a used here.
[[nodiscard]] OrderingVerdict check_rh(const ParallelSystem& a, const ParallelSystem& b,
                                       const GridSpec& g);

// a <=_lr b: density ratio f_b/f_a nondecreasing, checked through the
// analytic log-derivatives as t*(dlog_pdf_b - dlog_pdf_a) >= 0 (the log-time
// form is dimensionless, so one relative tolerance covers the whole window).
[[nodiscard]] OrderingVerdict check_lr(const ParallelSystem& a, const ParallelSystem& b,
                                       const GridSpec& g);

// Monotonicity of the reverse-hazard ratio r_b/r_a; the hypothesis feeding
// compose_1c4.
[[nodiscard]] OrderingVerdict check_rhr_ratio_increasing(const ParallelSystem& a,
                                                         const ParallelSystem& b,
                                                         const GridSpec& g);

// Composition rule: a <=_rh b together with r_b/r_a nondecreasing implies
// a <=_lr b. Sufficient only, so anything short of both-hold yields
// inconclusive, never violated. Throws std::invalid_argument unless the two
// verdicts come from the same pair and grid with the expected orders.
[[nodiscard]] OrderingVerdict compose_1c4(const OrderingVerdict& rh, const OrderingVerdict& ratio);

} // namespace ordcheck
