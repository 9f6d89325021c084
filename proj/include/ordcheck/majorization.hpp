#pragma once

#include "ordcheck/rng.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ordcheck {

// Vector preorders on positive parameter vectors, stated on the increasing
// arrangement: x is majorized by y when every partial sum of the j smallest
// entries of x dominates that of y and the totals agree; the weak form drops
// the total-equality requirement (and checks j = n as an inequality).
//
// Partial-sum comparisons and the total-equality test both use the relative
// tolerance 1e-12 * n * max|entry|; exact arithmetic would make several
// partial sums of a T-transformed pair tie exactly, and a zero-slack
// comparison would then flip on 1-ulp rounding.
[[nodiscard]] bool is_majorized(std::span<const double> x, std::span<const double> y);
[[nodiscard]] bool is_weakly_majorized(std::span<const double> x, std::span<const double> y);

// One averaging T-transform on coordinates (i, j):
//   x_i <- b x_i + (1-b) x_j,  x_j <- (1-b) x_i + b x_j,  b in [0,1].
// Finite chains of these generate exactly the vectors majorized by the start.
void apply_t_transform(std::vector<double>& v, std::size_t i, std::size_t j, double b);

struct MajorizedPair {
    std::vector<double> x; // majorized by y
    std::vector<double> y;
};

// y log-uniform in [lo, hi]^n, x obtained by 1..5 random T-transforms.
// The returned pair always satisfies is_majorized(x, y).
[[nodiscard]] MajorizedPair sample_majorized_pair(std::size_t n, rng::Engine& eng,
                                                  double lo = 0.2, double hi = 5.0);

struct SchurViolation {
    std::size_t trial;
    std::vector<double> x, y;
    double fx, fy;
};

// Falsification probe for Schur-convexity of f: samples majorized pairs
// x <=^m y and records every f(x) > f(y) + tol, with tol relative to the
// larger magnitude. No violations is evidence, not proof.
struct SchurProbeReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<SchurViolation> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

[[nodiscard]] SchurProbeReport
schur_convexity_probe(const std::function<double(std::span<const double>)>& f,
                      std::size_t n, std::size_t trials, std::uint64_t seed,
                      double rel_tol = 1e-12);

} // namespace ordcheck
