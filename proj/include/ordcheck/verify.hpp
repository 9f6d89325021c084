#pragma once

#include "ordcheck/ordering.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordcheck {

// Registered ordering results. Each entry pairs a hypothesis sampler (the
// sampled parameter sets always satisfy the stated conditions, asserted via
// the majorization predicates before any conclusion runs) with the checker
// that must come back holds_on_grid.
//
//   th07  n>=2, shape in (0,1]: lambda weakly majorized by theta  => rh order
//   cor1  same with full majorization (delegates to th07's checker) => rh order
//   th08  n=2, shape in (0,1], majorization                  => rhr ratio increasing
//   th09  n=2, shape in (0,1], majorization                  => lr order
//   th15  multiple-outlier, shape in (0,1], majorization     => rhr ratio increasing
//   th16  multiple-outlier, shape in (0,1], majorization     => lr order
//   th10  n=2, any shape, lambda1* = min(all)                => rhr ratio increasing
//   th01  n=2, any shape, lambda1* = min(all)                => lr order
//   th11  n=2, shape in (0,1], theta1<=l1<=l2<=theta2 + weak majorization => lr order
//   th17  multiple-outlier, any shape, lambda1* = min(all)   => rhr ratio increasing
//   th14  multiple-outlier, any shape, lambda1* = min(all)   => lr order
enum class TheoremId { th07, cor1, th08, th09, th15, th16, th10, th01, th11, th17, th14 };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::th07, TheoremId::cor1, TheoremId::th08, TheoremId::th09,
    TheoremId::th15, TheoremId::th16, TheoremId::th10, TheoremId::th01,
    TheoremId::th11, TheoremId::th17, TheoremId::th14,
};

[[nodiscard]] std::string to_string(TheoremId id);
[[nodiscard]] TheoremId theorem_id_from_string(const std::string& name); // throws on unknown id

struct TheoremInfo {
    TheoremId id;
    double alpha_lo, alpha_hi; // sampled shape range
    std::size_t n_lo, n_hi;    // sampled system size range
    CheckedOrder conclusion;
    const char* hypothesis;
};

[[nodiscard]] const TheoremInfo& theorem_info(TheoremId id);

struct TrialFailure {
    std::size_t trial = 0;
    double alpha = 0.0;
    std::vector<double> lambdas_a, lambdas_b;
    OrderingVerdict verdict;
};

struct TheoremReport {
    TheoremId id = TheoremId::th07;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::uint64_t seed = 0;
    std::vector<TrialFailure> failures; // sorted by trial index
    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

// Runs `trials` independent hypothesis-satisfying parameter draws (trial k
// uses rng stream derive_stream(seed, k)) and applies the theorem's
// conclusion checker to each. Trials run in parallel up to max_threads().
[[nodiscard]] TheoremReport run_theorem(TheoremId id, std::size_t trials, std::uint64_t seed,
                                        const GridSpec& g);

// The two published counterexamples (three parameter sets):
//   ex1   shape 2.0, rates (1.5, 2) vs (1, 2.5): majorized, lr fails
//   ex2a  shape 0.3, rates (0.2, 3.5) vs (0.2, 2): weakly majorized with
//         lambda <= lambda1* <= lambda1, lr fails
//   ex2b  same rates at shape 1.3
enum class ExampleId { ex1, ex2a, ex2b };

[[nodiscard]] std::string to_string(ExampleId id);
[[nodiscard]] ExampleId example_id_from_string(const std::string& name);

struct ExampleReport {
    ExampleId id = ExampleId::ex1;
    bool preconditions_ok = false; // majorization / ordering hypotheses of the example
    OrderingVerdict lr;            // expected: violated
    std::vector<std::pair<double, double>> curve; // (t, f_b/f_a) for plotting
};

[[nodiscard]] ExampleReport reproduce_example(ExampleId id, const GridSpec& g);

// Random search for lr violations under a majorization-type hypothesis.
enum class ScanTarget { maj_implies_lr, weakmaj_implies_lr };

struct ScanHit {
    std::size_t trial = 0;
    double alpha = 0.0;
    std::vector<double> lambdas_a, lambdas_b;
    OrderingVerdict verdict;
};

struct ScanReport {
    ScanTarget target = ScanTarget::maj_implies_lr;
    double alpha_lo = 0.0, alpha_hi = 0.0;
    std::size_t n = 0, trials = 0;
    bool multiple_outlier = false;
    std::uint64_t seed = 0;
    std::vector<ScanHit> hits; // sorted by trial index
};

[[nodiscard]] ScanReport scan_counterexamples(double alpha_lo, double alpha_hi, std::size_t n,
                                              std::size_t trials, std::uint64_t seed,
                                              ScanTarget target, bool multiple_outlier,
                                              const GridSpec& g);

// (t, f_b/f_a) samples over the comparison grid; the ratio is formed in log
// space and exponentiated.
[[nodiscard]] std::vector<std::pair<double, double>>
density_ratio_curve(const ParallelSystem& a, const ParallelSystem& b, const GridSpec& g);

} // namespace ordcheck
