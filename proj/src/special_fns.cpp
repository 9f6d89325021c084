#include "ordcheck/special_fns.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ordcheck {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Above this the direct x/expm1(x) form degrades; x e^-x is exact to double
// precision there (the dropped correction is O(e^-x) ~ 5e-15 at x = 33).
constexpr double kTailSwitch = 33.0;

// Below this the subtractions in s and w cancel; series take over. Both
// series keep terms through x^10/x^11, giving ~1e-15 relative error at the
// switch point.
constexpr double kSeriesSwitch = 0.2;

// s(x) = -x/2 - x^2/12 + x^4/720 - x^6/30240 + x^8/1209600 - x^10/47900160
double s_series(double x) noexcept
{
    const double x2 = x * x;
    double acc = -1.0 / 47900160.0;
    acc = acc * x2 + 1.0 / 1209600.0;
    acc = acc * x2 - 1.0 / 30240.0;
    acc = acc * x2 + 1.0 / 720.0;
    acc = acc * x2 - 1.0 / 12.0;
    return (acc * x - 0.5) * x;
}

// w(x) around 0: -1/2 + x/12 + x^2/24 - x^3/120 - x^4/480 + x^5/2016
//   + x^6/12096 - x^7/43200 - x^8/345600 + x^9/1064448 + x^10/10644480
//   - 691 x^11/19813248000
double w_series(double x) noexcept
{
    static const double c[] = {
        -0.5,
        1.0 / 12.0,
        1.0 / 24.0,
        -1.0 / 120.0,
        -1.0 / 480.0,
        1.0 / 2016.0,
        1.0 / 12096.0,
        -1.0 / 43200.0,
        -1.0 / 345600.0,
        1.0 / 1064448.0,
        1.0 / 10644480.0,
        -691.0 / 19813248000.0,
    };
    double acc = 0.0;
    for (int i = 11; i >= 0; --i)
        acc = acc * x + c[i];
    return acc;
}

void check_time_shape(double t, double alpha, bool strict_t)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("shape alpha must be positive and finite");
    if (strict_t ? !(t > 0.0) : !(t >= 0.0))
        throw std::domain_error(strict_t ? "t must be > 0" : "t must be >= 0");
    if (std::isinf(t))
        throw std::domain_error("t must be finite");
}

} // namespace

double kernel_u_scaled(double x) noexcept
{
    if (x == 0.0)
        return 1.0;
    if (x > kTailSwitch)
        return std::isinf(x) ? 0.0 : x * std::exp(-x);
    return x / std::expm1(x);
}

double kernel_v_scaled(double x) noexcept
{
    return x + kernel_u_scaled(x);
}

double kernel_s_scaled(double x) noexcept
{
    if (x < kSeriesSwitch)
        return s_series(x);
    const double em = -std::expm1(-x); // 1 - e^-x, equals 1 for x = +inf
    return (em - x) / em;
}

double kernel_w_scaled(double x) noexcept
{
    if (x < kSeriesSwitch)
        return w_series(x);
    if (std::isinf(x))
        return 0.0;
    // Exact rewrite with negative exponentials only:
    //   w(x) = -x e^-x (1 - (1+x) e^-x) / (1 - e^-x)^3
    const double em = std::exp(-x);
    const double den = -std::expm1(-x);
    return -x * em * (1.0 - (1.0 + x) * em) / (den * den * den);
}

double log_kernel_u_scaled(double x) noexcept
{
    if (x == 0.0)
        return 0.0;
    if (x > kTailSwitch)
        return std::isinf(x) ? -kInf : std::log(x) - x;
    return std::log(x / std::expm1(x));
}

double kernel_u(double t, double alpha)
{
    check_time_shape(t, alpha, false);
    return kernel_u_scaled(std::pow(t, alpha));
}

double kernel_v(double t, double alpha)
{
    check_time_shape(t, alpha, false);
    return kernel_v_scaled(std::pow(t, alpha));
}

double kernel_s(double t, double alpha)
{
    check_time_shape(t, alpha, false);
    return kernel_s_scaled(std::pow(t, alpha));
}

double kernel_w(double t, double alpha)
{
    check_time_shape(t, alpha, false);
    if (t == 0.0) {
        if (alpha > 1.0)
            return 0.0;
        if (alpha == 1.0)
            return -0.5;
        return -kInf; // w ~ -(alpha/2) t^(alpha-1) blows up for alpha < 1
    }
    const double x = std::pow(t, alpha);
    // alpha * t^(alpha-1) = alpha * x / t
    return alpha * (x / t) * kernel_w_scaled(x);
}

double kernel_u_prime(double t, double alpha)
{
    check_time_shape(t, alpha, true);
    const double x = std::pow(t, alpha);
    return (alpha / t) * kernel_u_scaled(x) * kernel_s_scaled(x);
}

} // namespace ordcheck
