#include "ordcheck/verify.hpp"

#include "ordcheck/majorization.hpp"
#include "ordcheck/parallel_for.hpp"
#include "ordcheck/rng.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace ordcheck {

namespace {

// Shapes below this make the q_lo quantile anchor underflow double range
// ((1e-6)^(1/alpha) collapses), so samplers floor the drawn shape here.
constexpr double kAlphaFloor = 0.05;

constexpr double kRateLo = 0.2;
constexpr double kRateHi = 5.0;

struct TrialDraw {
    double alpha = 0.0;
    std::vector<double> a, b; // compared as X^a <= X^b
};

double draw_alpha(rng::Engine& eng, const TheoremInfo& info)
{
    return rng::uniform(eng, std::max(info.alpha_lo, kAlphaFloor), info.alpha_hi);
}

// Entrywise shrink keeps every ascending partial sum from growing, so the
// weak-majorization hypothesis survives.
std::vector<double> shrink_entrywise(std::vector<double> v, rng::Engine& eng)
{
    for (double& x : v)
        x *= rng::uniform(eng, 0.6, 1.0);
    return v;
}

// Multiple-outlier majorized pair: p copies of theta1 and q of theta2,
// contracted toward the weighted mean.
TrialDraw draw_outlier_majorized(rng::Engine& eng, double alpha, std::size_t n, std::size_t p)
{
    const std::size_t q = n - p;
    const double th1 = rng::log_uniform(eng, kRateLo, kRateHi);
    const double th2 = rng::log_uniform(eng, kRateLo, kRateHi);
    const double c = (static_cast<double>(p) * th1 + static_cast<double>(q) * th2) /
                     static_cast<double>(n);
    const double beta = rng::uniform01(eng);
    const double l1 = (1.0 - beta) * th1 + beta * c;
    const double l2 = (1.0 - beta) * th2 + beta * c;

    TrialDraw d;
    d.alpha = alpha;
    d.a.insert(d.a.end(), p, l1);
    d.a.insert(d.a.end(), q, l2);
    d.b.insert(d.b.end(), p, th1);
    d.b.insert(d.b.end(), q, th2);
    return d;
}

// Outlier pair with the shared-rate pattern of the any-shape results:
// X = (l1 x p, l x q), Y = (l1* x p, l x q), l1* = min of everything.
TrialDraw draw_outlier_min_constrained(rng::Engine& eng, double alpha, std::size_t n,
                                       std::size_t p)
{
    const double l = rng::log_uniform(eng, kRateLo, kRateHi);
    const double l1 = rng::log_uniform(eng, kRateLo, kRateHi);
    const double l1s = std::min(l, l1) * rng::uniform01(eng);

    TrialDraw d;
    d.alpha = alpha;
    d.a.insert(d.a.end(), p, l1);
    d.a.insert(d.a.end(), n - p, l);
    d.b.insert(d.b.end(), p, l1s);
    d.b.insert(d.b.end(), n - p, l);
    return d;
}

TrialDraw sample_trial(const TheoremInfo& info, rng::Engine& eng)
{
    const double alpha = draw_alpha(eng, info);
    const std::size_t n = rng::uniform_index(eng, info.n_lo, info.n_hi);

    switch (info.id) {
    case TheoremId::th07: {
        TrialDraw d;
        d.alpha = alpha;
        MajorizedPair pair = sample_majorized_pair(n, eng, kRateLo, kRateHi);
        d.a = std::move(pair.x);
        d.b = rng::uniform01(eng) < 0.5 ? shrink_entrywise(std::move(pair.y), eng)
                                        : std::move(pair.y);
        if (!is_weakly_majorized(d.a, d.b))
            throw std::logic_error("th07 sampler broke its hypothesis");
        return d;
    }
    case TheoremId::cor1:
    case TheoremId::th08:
    case TheoremId::th09: {
        TrialDraw d;
        d.alpha = alpha;
        MajorizedPair pair = sample_majorized_pair(n, eng, kRateLo, kRateHi);
        d.a = std::move(pair.x);
        d.b = std::move(pair.y);
        if (!is_majorized(d.a, d.b))
            throw std::logic_error("majorized sampler broke its hypothesis");
        return d;
    }
    case TheoremId::th15:
    case TheoremId::th16: {
        const std::size_t p = rng::uniform_index(eng, 1, n - 1);
        TrialDraw d = draw_outlier_majorized(eng, alpha, n, p);
        if (!is_majorized(d.a, d.b))
            throw std::logic_error("outlier sampler broke its hypothesis");
        return d;
    }
    case TheoremId::th10:
    case TheoremId::th01: {
        TrialDraw d = draw_outlier_min_constrained(eng, alpha, 2, 1);
        if (!is_weakly_majorized(d.a, d.b) || d.b[0] > std::min(d.a[0], d.a[1]))
            throw std::logic_error("min-constrained sampler broke its hypothesis");
        return d;
    }
    case TheoremId::th11: {
        double l1 = rng::log_uniform(eng, kRateLo, kRateHi);
        double l2 = rng::log_uniform(eng, kRateLo, kRateHi);
        if (l1 > l2)
            std::swap(l1, l2);
        const double th1 = l1 * rng::uniform01(eng);
        const double th2 = rng::uniform(eng, l2, l1 + l2 - th1);
        TrialDraw d;
        d.alpha = alpha;
        d.a = {l1, l2};
        d.b = {th1, th2};
        const bool chain = th1 <= l1 && l1 <= l2 && l2 <= th2;
        if (!chain || !is_weakly_majorized(d.a, d.b))
            throw std::logic_error("th11 sampler broke its hypothesis");
        return d;
    }
    case TheoremId::th17:
    case TheoremId::th14: {
        const std::size_t p = rng::uniform_index(eng, 1, n - 1);
        TrialDraw d = draw_outlier_min_constrained(eng, alpha, n, p);
        if (!is_weakly_majorized(d.a, d.b))
            throw std::logic_error("outlier min-constrained sampler broke its hypothesis");
        return d;
    }
    }
    throw std::logic_error("unreachable theorem id");
}

OrderingVerdict run_conclusion(const TheoremInfo& info, const TrialDraw& d, const GridSpec& g)
{
    const ParallelSystem a(d.alpha, d.a);
    const ParallelSystem b(d.alpha, d.b);
    switch (info.conclusion) {
    case CheckedOrder::rh:
        return check_rh(a, b, g);
    case CheckedOrder::lr:
        return check_lr(a, b, g);
    case CheckedOrder::rhr_ratio:
        return check_rhr_ratio_increasing(a, b, g);
    case CheckedOrder::st:
        return check_st(a, b, g);
    case CheckedOrder::hr:
        return check_hr(a, b, g);
    }
    throw std::logic_error("unreachable conclusion kind");
}

const TheoremInfo kRegistry[] = {
    {TheoremId::th07, 0.0, 1.0, 2, 6, CheckedOrder::rh,
     "rates weakly majorized, shape in (0,1]"},
    {TheoremId::cor1, 0.0, 1.0, 2, 6, CheckedOrder::rh, "rates majorized, shape in (0,1]"},
    {TheoremId::th08, 0.0, 1.0, 2, 2, CheckedOrder::rhr_ratio,
     "two components, rates majorized, shape in (0,1]"},
    {TheoremId::th09, 0.0, 1.0, 2, 2, CheckedOrder::lr,
     "two components, rates majorized, shape in (0,1]"},
    {TheoremId::th15, 0.0, 1.0, 2, 6, CheckedOrder::rhr_ratio,
     "multiple-outlier, rates majorized, shape in (0,1]"},
    {TheoremId::th16, 0.0, 1.0, 2, 6, CheckedOrder::lr,
     "multiple-outlier, rates majorized, shape in (0,1]"},
    {TheoremId::th10, 0.0, 4.0, 2, 2, CheckedOrder::rhr_ratio,
     "two components sharing one rate, replaced rate is the minimum, any shape"},
    {TheoremId::th01, 0.0, 4.0, 2, 2, CheckedOrder::lr,
     "two components sharing one rate, replaced rate is the minimum, any shape"},
    {TheoremId::th11, 0.0, 1.0, 2, 2, CheckedOrder::lr,
     "theta1 <= l1 <= l2 <= theta2 with weak majorization, shape in (0,1]"},
    {TheoremId::th17, 0.0, 4.0, 2, 6, CheckedOrder::rhr_ratio,
     "multiple-outlier sharing one rate, replaced rate is the minimum, any shape"},
    {TheoremId::th14, 0.0, 4.0, 2, 6, CheckedOrder::lr,
     "multiple-outlier sharing one rate, replaced rate is the minimum, any shape"},
};

} // namespace

std::string to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::th07: return "th07";
    case TheoremId::cor1: return "cor1";
    case TheoremId::th08: return "th08";
    case TheoremId::th09: return "th09";
    case TheoremId::th15: return "th15";
    case TheoremId::th16: return "th16";
    case TheoremId::th10: return "th10";
    case TheoremId::th01: return "th01";
    case TheoremId::th11: return "th11";
    case TheoremId::th17: return "th17";
    case TheoremId::th14: return "th14";
    }
    return "?";
}

TheoremId theorem_id_from_string(const std::string& name)
{
    for (TheoremId id : kAllTheorems)
        if (to_string(id) == name)
            return id;
    throw std::invalid_argument("unknown theorem id: " + name);
}

const TheoremInfo& theorem_info(TheoremId id)
{
    for (const TheoremInfo& info : kRegistry)
        if (info.id == id)
            return info;
    throw std::logic_error("theorem missing from registry");
}

TheoremReport run_theorem(TheoremId id, std::size_t trials, std::uint64_t seed, const GridSpec& g)
{
    validate(g);
    const TheoremInfo& info = theorem_info(id);

    TheoremReport report;
    report.id = id;
    report.trials = trials;
    report.seed = seed;

    std::vector<std::optional<TrialFailure>> slots(trials);
    parallel_for_index(trials, [&](std::size_t trial) {
        rng::Engine eng(rng::derive_stream(seed, trial));
        const TrialDraw d = sample_trial(info, eng);
        OrderingVerdict v = run_conclusion(info, d, g);
        if (v.verdict != Verdict::holds_on_grid)
            slots[trial] = TrialFailure{trial, d.alpha, d.a, d.b, std::move(v)};
    });

    for (auto& slot : slots)
        if (slot)
            report.failures.push_back(std::move(*slot));
    report.passes = trials - report.failures.size();
    return report;
}

std::string to_string(ExampleId id)
{
    switch (id) {
    case ExampleId::ex1: return "ex1";
    case ExampleId::ex2a: return "ex2a";
    case ExampleId::ex2b: return "ex2b";
    }
    return "?";
}

ExampleId example_id_from_string(const std::string& name)
{
    for (ExampleId id : {ExampleId::ex1, ExampleId::ex2a, ExampleId::ex2b})
        if (to_string(id) == name)
            return id;
    throw std::invalid_argument("unknown example id: " + name);
}

std::vector<std::pair<double, double>> density_ratio_curve(const ParallelSystem& a,
                                                           const ParallelSystem& b,
                                                           const GridSpec& g)
{
    std::vector<std::pair<double, double>> curve;
    for (double t : comparison_grid(a, b, g))
        curve.emplace_back(t, std::exp(b.log_pdf(t) - a.log_pdf(t)));
    return curve;
}

ExampleReport reproduce_example(ExampleId id, const GridSpec& g)
{
    validate(g);
    ExampleReport rep;
    rep.id = id;

    double alpha = 0.0;
    std::vector<double> la, lb;
    switch (id) {
    case ExampleId::ex1:
        alpha = 2.0;
        la = {1.5, 2.0};
        lb = {1.0, 2.5};
        rep.preconditions_ok = is_majorized(la, lb);
        break;
    case ExampleId::ex2a:
    case ExampleId::ex2b:
        alpha = (id == ExampleId::ex2a) ? 0.3 : 1.3;
        la = {0.2, 3.5}; // (lambda, lambda1)
        lb = {0.2, 2.0}; // (lambda, lambda1*)
        // Weak majorization plus lambda <= lambda1* <= lambda1 (the ordering
        // pattern outside the min-constrained results).
        rep.preconditions_ok = is_weakly_majorized(la, lb) && 0.2 <= 2.0 && 2.0 <= 3.5;
        break;
    }

    const ParallelSystem a(alpha, la);
    const ParallelSystem b(alpha, lb);
    rep.lr = check_lr(a, b, g);
    rep.curve = density_ratio_curve(a, b, g);
    return rep;
}

ScanReport scan_counterexamples(double alpha_lo, double alpha_hi, std::size_t n,
                                std::size_t trials, std::uint64_t seed, ScanTarget target,
                                bool multiple_outlier, const GridSpec& g)
{
    validate(g);
    if (n < 2)
        throw std::invalid_argument("scan needs systems of size >= 2");
    if (!(alpha_lo < alpha_hi) || !(alpha_hi > 0.0))
        throw std::invalid_argument("bad shape range");

    ScanReport report;
    report.target = target;
    report.alpha_lo = alpha_lo;
    report.alpha_hi = alpha_hi;
    report.n = n;
    report.trials = trials;
    report.multiple_outlier = multiple_outlier;
    report.seed = seed;

    const double lo = std::max(alpha_lo, kAlphaFloor);

    std::vector<std::optional<ScanHit>> slots(trials);
    parallel_for_index(trials, [&](std::size_t trial) {
        rng::Engine eng(rng::derive_stream(seed, trial));
        const double alpha = rng::uniform(eng, lo, alpha_hi);

        std::vector<double> xa, xb;
        if (multiple_outlier) {
            const std::size_t p = rng::uniform_index(eng, 1, n - 1);
            TrialDraw d = draw_outlier_majorized(eng, alpha, n, p);
            xa = std::move(d.a);
            xb = std::move(d.b);
        } else {
            MajorizedPair pair = sample_majorized_pair(n, eng, kRateLo, kRateHi);
            xa = std::move(pair.x);
            xb = std::move(pair.y);
        }
        if (target == ScanTarget::weakmaj_implies_lr)
            xb = shrink_entrywise(std::move(xb), eng);

        const bool hypothesis = target == ScanTarget::maj_implies_lr
                                    ? is_majorized(xa, xb)
                                    : is_weakly_majorized(xa, xb);
        if (!hypothesis)
            throw std::logic_error("scan sampler broke its hypothesis");

        OrderingVerdict v = check_lr(ParallelSystem(alpha, xa), ParallelSystem(alpha, xb), g);
        if (v.verdict == Verdict::violated)
            slots[trial] = ScanHit{trial, alpha, std::move(xa), std::move(xb), std::move(v)};
    });

    for (auto& slot : slots)
        if (slot)
            report.hits.push_back(std::move(*slot));
    return report;
}

} // namespace ordcheck
