#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ordcheck {

// One Weibull component in rate form:
//
//   cdf(t) = 1 - exp(-(lambda t)^alpha),   pdf(t) = alpha lambda (lambda t)^(alpha-1) e^{-(lambda t)^alpha}
//
// NOTE: lambda is a *rate*, not the usual scale (scale = 1/lambda). A larger
// rate gives a stochastically smaller lifetime. All ordering results in this
// library compare rate vectors, so everything downstream sticks to this
// convention; convert before mixing with scale-parameterized libraries.
struct WeibullParams {
    double alpha;  // shape, > 0
    double lambda; // rate, > 0
};

// Throws std::invalid_argument unless both parameters are positive and finite.
void validate(const WeibullParams& p);

// Signals a density that is unbounded at the evaluation point (alpha < 1 at
// t = 0). Raised instead of returning an infinity so no non-finite value
// leaks into downstream grids.
class DensityDivergesError : public std::domain_error {
public:
    DensityDivergesError() : std::domain_error("density diverges at t = 0 for alpha < 1") {}
};

[[nodiscard]] double pdf(const WeibullParams& p, double t);
[[nodiscard]] double cdf(const WeibullParams& p, double t);
[[nodiscard]] double log_cdf(const WeibullParams& p, double t);
[[nodiscard]] double survival(const WeibullParams& p, double t);

// hazard = pdf/survival = alpha lambda (lambda t)^(alpha-1); t > 0.
[[nodiscard]] double hazard(const WeibullParams& p, double t);

// reverse hazard = pdf/cdf = (alpha/t) u((lambda t)^alpha); t > 0 (diverges at 0).
[[nodiscard]] double reverse_hazard(const WeibullParams& p, double t);

// Inverse cdf: (-ln(1-q))^(1/alpha) / lambda for q in (0,1).
[[nodiscard]] double quantile(const WeibullParams& p, double q);

// n inversion draws from an mt19937_64 seeded with `seed`; one uniform is
// consumed per draw, so the stream position after k draws is k.
[[nodiscard]] std::vector<double> sample(const WeibullParams& p, std::size_t n, std::uint64_t seed);

} // namespace ordcheck
