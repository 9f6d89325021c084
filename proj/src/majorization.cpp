#include "ordcheck/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ordcheck {

namespace {

double comparison_tol(std::span<const double> x, std::span<const double> y)
{
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    for (double v : y)
        m = std::max(m, std::abs(v));
    return 1e-12 * static_cast<double>(x.size()) * m;
}

// Partial sums of the increasing arrangement.
std::vector<double> ascending_partial_sums(std::span<const double> v)
{
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    double acc = 0.0;
    for (double& e : s) {
        acc += e;
        e = acc;
    }
    return s;
}

void check_lengths(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("majorization requires equal-length vectors");
    if (x.empty())
        throw std::invalid_argument("majorization requires nonempty vectors");
}

} // namespace

bool is_majorized(std::span<const double> x, std::span<const double> y)
{
    check_lengths(x, y);
    const double tol = comparison_tol(x, y);
    const auto sx = ascending_partial_sums(x);
    const auto sy = ascending_partial_sums(y);
    const std::size_t n = sx.size();
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (sx[j] < sy[j] - tol)
            return false;
    return std::abs(sx[n - 1] - sy[n - 1]) <= tol;
}

bool is_weakly_majorized(std::span<const double> x, std::span<const double> y)
{
    check_lengths(x, y);
    const double tol = comparison_tol(x, y);
    const auto sx = ascending_partial_sums(x);
    const auto sy = ascending_partial_sums(y);
    for (std::size_t j = 0; j < sx.size(); ++j)
        if (sx[j] < sy[j] - tol)
            return false;
    return true;
}

void apply_t_transform(std::vector<double>& v, std::size_t i, std::size_t j, double b)
{
    if (i >= v.size() || j >= v.size() || i == j)
        throw std::invalid_argument("T-transform needs two distinct coordinates");
    if (!(b >= 0.0) || !(b <= 1.0))
        throw std::invalid_argument("T-transform weight must lie in [0,1]");
    const double vi = v[i], vj = v[j];
    v[i] = b * vi + (1.0 - b) * vj;
    v[j] = (1.0 - b) * vi + b * vj;
}

MajorizedPair sample_majorized_pair(std::size_t n, rng::Engine& eng, double lo, double hi)
{
    if (n < 1)
        throw std::invalid_argument("need n >= 1");
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<double> y(n);
        for (double& v : y)
            v = rng::log_uniform(eng, lo, hi);
        std::vector<double> x = y;
        if (n >= 2) {
            const std::size_t k = rng::uniform_index(eng, 1, 5);
            for (std::size_t c = 0; c < k; ++c) {
                std::size_t i = rng::uniform_index(eng, 0, n - 1);
                std::size_t j = rng::uniform_index(eng, 0, n - 2);
                if (j >= i)
                    ++j;
                apply_t_transform(x, i, j, rng::uniform01(eng));
            }
        }
        if (is_majorized(x, y))
            return {std::move(x), std::move(y)};
    }
    throw std::runtime_error("majorized-pair sampler failed to verify its output");
}

SchurProbeReport schur_convexity_probe(const std::function<double(std::span<const double>)>& f,
                                       std::size_t n, std::size_t trials, std::uint64_t seed,
                                       double rel_tol)
{
    SchurProbeReport report;
    report.trials = trials;
    report.seed = seed;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        rng::Engine eng(rng::derive_stream(seed, trial));
        MajorizedPair pair = sample_majorized_pair(n, eng);
        const double fx = f(pair.x);
        const double fy = f(pair.y);
        const double tol = rel_tol * std::max({1.0, std::abs(fx), std::abs(fy)});
        if (fx > fy + tol)
            report.violations.push_back({trial, std::move(pair.x), std::move(pair.y), fx, fy});
    }
    return report;
}

} // namespace ordcheck
