#pragma once

#include "ordcheck/ordering.hpp"
#include "ordcheck/parallel.hpp"

#include <cstdint>
#include <vector>

namespace ordcheck {

struct EmpiricalCdf {
    std::vector<double> sorted_samples;

    [[nodiscard]] std::size_t n() const noexcept { return sorted_samples.size(); }

    // Right-continuous step function: fraction of samples <= t.
    [[nodiscard]] double value(double t) const;
};

// n parallel-system lifetimes: each draw is the max of one inversion draw
// per component, all from a single mt19937_64 seeded with `seed` (component
// uniforms are consumed in storage order, so a 1-component system replays
// the component sampler's stream exactly).
[[nodiscard]] EmpiricalCdf sample_parallel(const ParallelSystem& sys, std::size_t n,
                                           std::uint64_t seed);

// Dvoretzky-Kiefer-Wolfowitz comparison of an empirical cdf against the
// analytic one: pass iff sup_t |F_hat - F| <= sqrt(ln(2/(1-confidence))/(2n)).
struct DkwResult {
    double sup_distance = 0.0;
    double bound = 0.0;
    double confidence = 0.0;
    std::size_t n = 0;
    [[nodiscard]] bool pass() const noexcept { return sup_distance <= bound; }
};

[[nodiscard]] DkwResult dkw_compare(const EmpiricalCdf& emp, const ParallelSystem& sys,
                                    double confidence);

// Empirical check of a <=_st b on the merged sample grid, with a two-sample
// DKW band at 99% per sample. Streams: a uses derive_stream(seed, 0), b uses
// derive_stream(seed, 1).
struct EmpiricalStReport {
    Verdict analytic = Verdict::inconclusive; // from check_st at the given grid
    double band = 0.0;                        // eps_a + eps_b
    double max_excess = 0.0;                  // max over grid of S_hat_a - S_hat_b
    bool empirical_violation = false;         // max_excess > band
    bool agree = false;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

[[nodiscard]] EmpiricalStReport empirical_st_check(const ParallelSystem& a,
                                                   const ParallelSystem& b, std::size_t n,
                                                   std::uint64_t seed,
                                                   const GridSpec& g = GridSpec{});

} // namespace ordcheck
