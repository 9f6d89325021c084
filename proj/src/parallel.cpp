#include "ordcheck/parallel.hpp"

#include "ordcheck/special_fns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ordcheck {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_t(double t, bool strict)
{
    if (strict ? !(t > 0.0) : !(t >= 0.0))
        throw std::domain_error(strict ? "t must be > 0" : "t must be >= 0");
    if (std::isinf(t))
        throw std::domain_error("t must be finite");
}

} // namespace

ParallelSystem::ParallelSystem(double alpha, std::vector<double> lambdas)
    : alpha_(alpha), lambdas_(std::move(lambdas))
{
    if (lambdas_.empty())
        throw std::invalid_argument("parallel system needs at least one component");
    for (double l : lambdas_)
        validate(WeibullParams{alpha_, l});
}

ParallelSystem ParallelSystem::multiple_outlier(double alpha, std::size_t p, double lambda1,
                                                std::size_t q, double lambda2)
{
    std::vector<double> ls;
    ls.reserve(p + q);
    ls.insert(ls.end(), p, lambda1);
    ls.insert(ls.end(), q, lambda2);
    return ParallelSystem(alpha, std::move(ls));
}

double ParallelSystem::log_cdf(double t) const
{
    check_t(t, false);
    double acc = 0.0;
    for (double l : lambdas_)
        acc += ordcheck::log_cdf(WeibullParams{alpha_, l}, t);
    return acc;
}

double ParallelSystem::cdf(double t) const
{
    check_t(t, false);
    if (size() > 16)
        return std::exp(log_cdf(t));
    double prod = 1.0;
    for (double l : lambdas_) {
        const double f = ordcheck::cdf(WeibullParams{alpha_, l}, t);
        if (f < 1e-300)
            return std::exp(log_cdf(t));
        prod *= f;
    }
    return prod;
}

double ParallelSystem::log_survival(double t) const
{
    check_t(t, false);
    const double lc = log_cdf(t);
    if (lc < 0.0)
        return std::log(-std::expm1(lc));
    // Every factor rounded to 1: switch to the tail sum
    // 1 - prod(1 - e_i) ~ sum e_i with e_i = exp(-x_i), via logsumexp.
    double m = -kInf;
    for (double l : lambdas_)
        m = std::max(m, -std::pow(l * t, alpha_));
    if (m == -kInf)
        return -kInf;
    double sum = 0.0;
    for (double l : lambdas_)
        sum += std::exp(-std::pow(l * t, alpha_) - m);
    return m + std::log(sum);
}

double ParallelSystem::survival(double t) const
{
    check_t(t, false);
    return -std::expm1(log_cdf(t));
}

double ParallelSystem::reverse_hazard(double t) const
{
    check_t(t, true);
    double sum = 0.0;
    for (double l : lambdas_)
        sum += kernel_u_scaled(std::pow(l * t, alpha_));
    return alpha_ / t * sum;
}

double ParallelSystem::log_reverse_hazard(double t) const
{
    check_t(t, true);
    double m = -kInf;
    for (double l : lambdas_)
        m = std::max(m, log_kernel_u_scaled(std::pow(l * t, alpha_)));
    if (m == -kInf)
        throw TailUnderflowError{};
    double sum = 0.0;
    for (double l : lambdas_)
        sum += std::exp(log_kernel_u_scaled(std::pow(l * t, alpha_)) - m);
    return std::log(alpha_ / t) + m + std::log(sum);
}

double ParallelSystem::log_pdf(double t) const
{
    return log_cdf(t) + log_reverse_hazard(t);
}

double ParallelSystem::pdf(double t) const
{
    return std::exp(log_pdf(t));
}

double ParallelSystem::dlog_pdf(double t) const
{
    check_t(t, true);
    const std::size_t n = size();
    double m = -kInf;
    std::vector<double> lu(n), sv(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::pow(lambdas_[i] * t, alpha_);
        lu[i] = log_kernel_u_scaled(x);
        sv[i] = kernel_s_scaled(x);
        m = std::max(m, lu[i]);
    }
    if (m == -kInf)
        throw TailUnderflowError{};
    double sumw = 0.0, acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = std::exp(lu[i] - m);
        sumw += w;
        acc += w * (alpha_ * sv[i] - 1.0);
    }
    const double rhr = alpha_ / t * std::exp(m) * sumw; // may underflow, harmless
    return rhr + acc / (sumw * t);
}

double ParallelSystem::quantile(double q) const
{
    if (!(q > 0.0) || !(q < 1.0))
        throw std::domain_error("quantile level must be in (0,1)");
    const std::size_t n = size();
    double lo = 0.0;
    for (double l : lambdas_)
        lo = std::max(lo, ordcheck::quantile(WeibullParams{alpha_, l}, q));
    if (n == 1)
        return lo;

    double qn = std::exp(std::log(q) / static_cast<double>(n));
    qn = std::min(qn, std::nextafter(1.0, 0.0));
    double hi = 0.0;
    for (double l : lambdas_)
        hi = std::max(hi, ordcheck::quantile(WeibullParams{alpha_, l}, qn));
    if (!(hi > lo))
        hi = lo * (1.0 + 1e-12);

    const double target = std::log(q);
    const auto g = [&](double logt) { return log_cdf(std::exp(logt)) - target; };

    double a = std::log(lo), b = std::log(hi);
    double ga = g(a), gb = g(b);
    for (int i = 0; i < 60 && ga > 0.0; ++i) {
        a -= 0.7;
        ga = g(a);
    }
    for (int i = 0; i < 60 && gb < 0.0; ++i) {
        b += 0.7;
        gb = g(b);
    }

    for (int i = 0; i < 30 && (b - a) > 1e-6; ++i) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (gm < 0.0) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
            gb = gm;
        }
    }
    // Secant polish inside the bracket.
    double x0 = a, x1 = b, g0 = ga, g1 = gb;
    for (int i = 0; i < 16; ++i) {
        if (g1 == g0)
            break;
        double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
        if (!(x2 > a) || !(x2 < b))
            x2 = 0.5 * (a + b);
        const double g2 = g(x2);
        if (g2 < 0.0)
            a = x2;
        else
            b = x2;
        x0 = x1;
        g0 = g1;
        x1 = x2;
        g1 = g2;
        if (std::abs(x1 - x0) < 1e-14)
            break;
    }
    return std::exp(x1);
}

} // namespace ordcheck
