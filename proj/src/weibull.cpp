#include "ordcheck/weibull.hpp"

#include "ordcheck/rng.hpp"
#include "ordcheck/special_fns.hpp"

#include <cmath>

namespace ordcheck {

void validate(const WeibullParams& p)
{
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
        throw std::invalid_argument("Weibull shape must be positive and finite");
    if (!(p.lambda > 0.0) || !std::isfinite(p.lambda))
        throw std::invalid_argument("Weibull rate must be positive and finite");
}

namespace {

void check_t(double t, bool strict)
{
    if (strict ? !(t > 0.0) : !(t >= 0.0))
        throw std::domain_error(strict ? "t must be > 0" : "t must be >= 0");
    if (std::isinf(t))
        throw std::domain_error("t must be finite");
}

} // namespace

double pdf(const WeibullParams& p, double t)
{
    validate(p);
    check_t(t, false);
    if (t == 0.0) {
        if (p.alpha == 1.0)
            return p.lambda;
        if (p.alpha > 1.0)
            return 0.0;
        throw DensityDivergesError{};
    }
    // alpha lambda (lambda t)^(a-1) e^-x = (alpha x / t) e^-x with x = (lambda t)^a
    const double x = std::pow(p.lambda * t, p.alpha);
    return p.alpha * (x / t) * std::exp(-x);
}

double cdf(const WeibullParams& p, double t)
{
    validate(p);
    check_t(t, false);
    return -std::expm1(-std::pow(p.lambda * t, p.alpha));
}

double log_cdf(const WeibullParams& p, double t)
{
    validate(p);
    check_t(t, false);
    const double x = std::pow(p.lambda * t, p.alpha);
    if (x > 1.0)
        return std::log1p(-std::exp(-x));
    return std::log(-std::expm1(-x));
}

double survival(const WeibullParams& p, double t)
{
    validate(p);
    check_t(t, false);
    return std::exp(-std::pow(p.lambda * t, p.alpha));
}

double hazard(const WeibullParams& p, double t)
{
    validate(p);
    check_t(t, true);
    const double x = std::pow(p.lambda * t, p.alpha);
    return p.alpha * x / t;
}

double reverse_hazard(const WeibullParams& p, double t)
{
    validate(p);
    check_t(t, true);
    const double x = std::pow(p.lambda * t, p.alpha);
    return (p.alpha / t) * kernel_u_scaled(x);
}

double quantile(const WeibullParams& p, double q)
{
    validate(p);
    if (!(q > 0.0) || !(q < 1.0))
        throw std::domain_error("quantile level must be in (0,1)");
    return std::pow(-std::log1p(-q), 1.0 / p.alpha) / p.lambda;
}

std::vector<double> sample(const WeibullParams& p, std::size_t n, std::uint64_t seed)
{
    validate(p);
    std::vector<double> out;
    out.reserve(n);
    rng::Engine eng(seed);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(quantile(p, rng::uniform01(eng)));
    return out;
}

} // namespace ordcheck
