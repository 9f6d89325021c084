#include "ordcheck/mc_oracle.hpp"

#include "ordcheck/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ordcheck {

double EmpiricalCdf::value(double t) const
{
    const auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), t);
    return static_cast<double>(it - sorted_samples.begin()) / static_cast<double>(n());
}

EmpiricalCdf sample_parallel(const ParallelSystem& sys, std::size_t n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("need at least one draw");
    EmpiricalCdf emp;
    emp.sorted_samples.reserve(n);
    rng::Engine eng(seed);
    const std::size_t k = sys.size();
    for (std::size_t i = 0; i < n; ++i) {
        double mx = 0.0;
        for (std::size_t c = 0; c < k; ++c)
            mx = std::max(mx, quantile(sys.component(c), rng::uniform01(eng)));
        emp.sorted_samples.push_back(mx);
    }
    std::sort(emp.sorted_samples.begin(), emp.sorted_samples.end());
    return emp;
}

DkwResult dkw_compare(const EmpiricalCdf& emp, const ParallelSystem& sys, double confidence)
{
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw std::invalid_argument("confidence must be in (0,1)");
    const std::size_t n = emp.n();
    DkwResult res;
    res.confidence = confidence;
    res.n = n;
    res.bound = std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(n)));
    // Sup over the staircase: check both sides of each jump.
    for (std::size_t i = 0; i < n; ++i) {
        const double f = sys.cdf(emp.sorted_samples[i]);
        const double above = static_cast<double>(i + 1) / static_cast<double>(n);
        const double below = static_cast<double>(i) / static_cast<double>(n);
        res.sup_distance = std::max({res.sup_distance, std::abs(above - f), std::abs(below - f)});
    }
    return res;
}

EmpiricalStReport empirical_st_check(const ParallelSystem& a, const ParallelSystem& b,
                                     std::size_t n, std::uint64_t seed, const GridSpec& g)
{
    if (n < 1000)
        throw std::invalid_argument("empirical st check needs n >= 1000");
    EmpiricalStReport rep;
    rep.n = n;
    rep.seed = seed;

    const EmpiricalCdf ea = sample_parallel(a, n, rng::derive_stream(seed, 0));
    const EmpiricalCdf eb = sample_parallel(b, n, rng::derive_stream(seed, 1));

    const double eps = std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(n)));
    rep.band = 2.0 * eps;

    // a <=_st b requires S_a <= S_b everywhere; excess = S_hat_a - S_hat_b.
    std::vector<double> grid = ea.sorted_samples;
    grid.insert(grid.end(), eb.sorted_samples.begin(), eb.sorted_samples.end());
    std::sort(grid.begin(), grid.end());
    double max_excess = -1.0;
    for (double t : grid) {
        const double sa = 1.0 - ea.value(t);
        const double sb = 1.0 - eb.value(t);
        max_excess = std::max(max_excess, sa - sb);
    }
    rep.max_excess = max_excess;
    rep.empirical_violation = max_excess > rep.band;

    rep.analytic = check_st(a, b, g).verdict;
    switch (rep.analytic) {
    case Verdict::holds_on_grid:
        rep.agree = !rep.empirical_violation;
        break;
    case Verdict::violated:
        rep.agree = rep.empirical_violation;
        break;
    case Verdict::inconclusive:
        rep.agree = true;
        break;
    }
    return rep;
}

} // namespace ordcheck
