#include "ordcheck/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ordcheck {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kRefinePerRound = 8;

double geomean(double a, double b)
{
    return std::sqrt(a) * std::sqrt(b);
}

// One evaluated check point: raw deficit plus the local tolerance it is
// measured against. margin = deficit/tol; a violation is margin < -1.
struct PointEval {
    double t = 0.0;
    double deficit = kNaN;
    double tol = 1.0;
    [[nodiscard]] double margin() const noexcept { return deficit / tol; }
};

struct CheckOutcome {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Witness> witness;
    double min_margin = 0.0;
};

// Indices of the k smallest finite margins (ties resolved by index, so the
// refinement pattern is deterministic).
template <class Margin>
std::vector<std::size_t> worst_indices(std::size_t count, std::size_t k, Margin margin)
{
    std::vector<std::size_t> idx;
    idx.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        if (std::isfinite(margin(i)))
            idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        const double mi = margin(i), mj = margin(j);
        return mi != mj ? mi < mj : i < j;
    });
    if (idx.size() > k)
        idx.resize(k);
    return idx;
}

// Pointwise requirement deficit(t) >= 0 with per-point tolerance; refinement
// bisects the cells around the smallest margins.
template <class Eval>
CheckOutcome run_pointwise_check(const std::vector<double>& grid, Eval eval, int refine_rounds)
{
    std::vector<PointEval> pts;
    pts.reserve(grid.size() + static_cast<std::size_t>(refine_rounds) * 2 * kRefinePerRound);
    for (double t : grid)
        pts.push_back(eval(t));

    for (int round = 0; round < refine_rounds; ++round) {
        const auto worst =
            worst_indices(pts.size(), kRefinePerRound, [&](std::size_t i) { return pts[i].margin(); });
        std::vector<double> fresh;
        for (std::size_t i : worst) {
            if (i > 0)
                fresh.push_back(geomean(pts[i - 1].t, pts[i].t));
            if (i + 1 < pts.size())
                fresh.push_back(geomean(pts[i].t, pts[i + 1].t));
        }
        bool grew = false;
        for (double t : fresh) {
            const auto near = [&](const PointEval& p) { return std::abs(p.t - t) <= 1e-12 * t; };
            if (std::none_of(pts.begin(), pts.end(), near)) {
                pts.push_back(eval(t));
                grew = true;
            }
        }
        if (!grew)
            break;
        std::sort(pts.begin(), pts.end(), [](const PointEval& a, const PointEval& b) { return a.t < b.t; });
    }

    CheckOutcome out;
    bool any_nan = false;
    double min_margin = std::numeric_limits<double>::infinity();
    const PointEval* worst = nullptr;
    for (const auto& p : pts) {
        const double m = p.margin();
        if (!std::isfinite(m)) {
            any_nan = true;
            continue;
        }
        if (m < min_margin) {
            min_margin = m;
            worst = &p;
        }
    }
    if (worst == nullptr) {
        out.verdict = Verdict::inconclusive;
        return out;
    }
    out.min_margin = min_margin;
    if (min_margin < -1.0) {
        out.verdict = Verdict::violated;
        out.witness = Witness{worst->t, std::nullopt, -worst->deficit};
    } else {
        out.verdict = any_nan ? Verdict::inconclusive : Verdict::holds_on_grid;
        if (any_nan)
            out.witness = std::nullopt;
    }
    return out;
}

// Monotonicity of a sequence L(t): increments across grid cells must not
// drop below -tol, tol relative to the local |L|. Refinement splits the
// worst cells.
template <class Eval>
CheckOutcome run_increment_check(const std::vector<double>& grid, Eval evalL, int refine_rounds,
                                 double mono_tol)
{
    struct Node {
        double t, L;
    };
    std::vector<Node> pts;
    pts.reserve(grid.size() + static_cast<std::size_t>(refine_rounds) * kRefinePerRound);
    for (double t : grid)
        pts.push_back({t, evalL(t)});

    const auto cell_margin = [&](std::size_t i) {
        const double d = pts[i + 1].L - pts[i].L;
        const double tol = mono_tol * std::max({1.0, std::abs(pts[i].L), std::abs(pts[i + 1].L)});
        return d / tol;
    };

    for (int round = 0; round < refine_rounds; ++round) {
        if (pts.size() < 2)
            break;
        const auto worst = worst_indices(pts.size() - 1, kRefinePerRound, cell_margin);
        std::vector<double> fresh;
        for (std::size_t i : worst) {
            const double mid = geomean(pts[i].t, pts[i + 1].t);
            if (mid > pts[i].t && mid < pts[i + 1].t)
                fresh.push_back(mid);
        }
        if (fresh.empty())
            break;
        for (double t : fresh)
            pts.push_back({t, evalL(t)});
        std::sort(pts.begin(), pts.end(), [](const Node& a, const Node& b) { return a.t < b.t; });
    }

    CheckOutcome out;
    bool any_nan = false;
    double min_margin = std::numeric_limits<double>::infinity();
    std::size_t worst_cell = 0;
    bool have = false;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!std::isfinite(pts[i].L) || !std::isfinite(pts[i + 1].L)) {
            any_nan = true;
            continue;
        }
        const double m = cell_margin(i);
        if (m < min_margin) {
            min_margin = m;
            worst_cell = i;
            have = true;
        }
    }
    if (!have) {
        out.verdict = Verdict::inconclusive;
        return out;
    }
    out.min_margin = min_margin;
    if (min_margin < -1.0) {
        out.verdict = Verdict::violated;
        out.witness = Witness{pts[worst_cell].t, pts[worst_cell + 1].t,
                              pts[worst_cell].L - pts[worst_cell + 1].L};
    } else {
        out.verdict = any_nan ? Verdict::inconclusive : Verdict::holds_on_grid;
    }
    return out;
}

OrderingVerdict make_verdict(CheckedOrder order, const CheckOutcome& out, const GridSpec& g,
                             const ParallelSystem& a, const ParallelSystem& b)
{
    OrderingVerdict v;
    v.order = order;
    v.verdict = out.verdict;
    v.witness = out.witness;
    v.min_margin = out.min_margin;
    v.grid = g;
    v.a = {a.alpha(), a.lambdas()};
    v.b = {b.alpha(), b.lambdas()};
    return v;
}

} // namespace

void validate(const GridSpec& g)
{
    if (!(g.q_lo > 0.0) || !(g.q_hi < 1.0) || !(g.q_lo < g.q_hi))
        throw std::invalid_argument("grid anchors must satisfy 0 < q_lo < q_hi < 1");
    if (g.points < 16)
        throw std::invalid_argument("grid needs at least 16 points");
    if (g.refine_rounds < 0 || !(g.mono_tol >= 0.0))
        throw std::invalid_argument("bad grid refinement/tolerance");
}

std::string to_string(CheckedOrder o)
{
    switch (o) {
    case CheckedOrder::st: return "st";
    case CheckedOrder::hr: return "hr";
    case CheckedOrder::rh: return "rh";
    case CheckedOrder::lr: return "lr";
    case CheckedOrder::rhr_ratio: return "rhr_ratio";
    }
    return "?";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds_on_grid: return "holds_on_grid";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<double> comparison_grid(const ParallelSystem& a, const ParallelSystem& b,
                                    const GridSpec& g)
{
    validate(g);
    const double lo = std::min(a.quantile(g.q_lo), b.quantile(g.q_lo));
    const double hi = std::max(a.quantile(g.q_hi), b.quantile(g.q_hi));
    std::vector<double> grid(static_cast<std::size_t>(g.points));
    const double step = std::log(hi / lo) / (g.points - 1);
    for (int i = 0; i < g.points; ++i)
        grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

OrderingVerdict check_st(const ParallelSystem& a, const ParallelSystem& b, const GridSpec& g)
{
    const auto grid = comparison_grid(a, b, g);
    // Mass outside the window bounds any cdf deficit that in-window rates
    // cannot explain; treat deficits below that as unresolved rather than
    // violations.
    const double out_of_window = 2.0 * (a.survival(grid.back()) + b.survival(grid.back())) +
                                 2.0 * (a.cdf(grid.front()) + b.cdf(grid.front()));
    const double guard = std::max(g.mono_tol, out_of_window);
    const auto eval = [&](double t) {
        return PointEval{t, a.cdf(t) - b.cdf(t), guard};
    };
    return make_verdict(CheckedOrder::st, run_pointwise_check(grid, eval, g.refine_rounds), g, a, b);
}

OrderingVerdict check_rh(const ParallelSystem& a, const ParallelSystem& b, const GridSpec& g)
{
    const auto grid = comparison_grid(a, b, g);
    const auto eval = [&](double t) {
        double d = kNaN;
        try {
            d = b.log_reverse_hazard(t) - a.log_reverse_hazard(t);
        } catch (const TailUnderflowError&) {
        }
        return PointEval{t, d, g.mono_tol};
    };
    return make_verdict(CheckedOrder::rh, run_pointwise_check(grid, eval, g.refine_rounds), g, a, b);
}

OrderingVerdict check_lr(const ParallelSystem& a, const ParallelSystem& b, const GridSpec& g)
{
    const auto grid = comparison_grid(a, b, g);
    const auto eval = [&](double t) {
        PointEval p{t, kNaN, 1.0};
        try {
            // Log-time form: d log(f_b/f_a) / d log t, dimensionless.
            const double da = t * a.dlog_pdf(t);
            const double db = t * b.dlog_pdf(t);
            p.deficit = db - da;
            p.tol = g.mono_tol * std::max({1.0, std::abs(da), std::abs(db)});
        } catch (const TailUnderflowError&) {
        }
        return p;
    };
    return make_verdict(CheckedOrder::lr, run_pointwise_check(grid, eval, g.refine_rounds), g, a, b);
}

OrderingVerdict check_hr(const ParallelSystem& a, const ParallelSystem& b, const GridSpec& g)
{
    const auto grid = comparison_grid(a, b, g);
    const auto eval = [&](double t) { return b.log_survival(t) - a.log_survival(t); };
    return make_verdict(CheckedOrder::hr,
                        run_increment_check(grid, eval, g.refine_rounds, g.mono_tol), g, a, b);
}

OrderingVerdict check_rhr_ratio_increasing(const ParallelSystem& a, const ParallelSystem& b,
                                           const GridSpec& g)
{
    const auto grid = comparison_grid(a, b, g);
    const auto eval = [&](double t) {
        try {
            return b.log_reverse_hazard(t) - a.log_reverse_hazard(t);
        } catch (const TailUnderflowError&) {
            return kNaN;
        }
    };
    return make_verdict(CheckedOrder::rhr_ratio,
                        run_increment_check(grid, eval, g.refine_rounds, g.mono_tol), g, a, b);
}

OrderingVerdict compose_1c4(const OrderingVerdict& rh, const OrderingVerdict& ratio)
{
    if (rh.order != CheckedOrder::rh || ratio.order != CheckedOrder::rhr_ratio)
        throw std::invalid_argument("compose_1c4 needs an rh verdict and an rhr-ratio verdict");
    const bool same_pair = rh.a == ratio.a && rh.b == ratio.b;
    const bool same_grid = rh.grid.q_lo == ratio.grid.q_lo && rh.grid.q_hi == ratio.grid.q_hi &&
                           rh.grid.points == ratio.grid.points &&
                           rh.grid.refine_rounds == ratio.grid.refine_rounds &&
                           rh.grid.mono_tol == ratio.grid.mono_tol;
    if (!same_pair || !same_grid)
        throw std::invalid_argument("compose_1c4 inputs must come from the same pair and grid");

    OrderingVerdict out;
    out.order = CheckedOrder::lr;
    out.grid = rh.grid;
    out.a = rh.a;
    out.b = rh.b;
    out.verdict = (rh.verdict == Verdict::holds_on_grid && ratio.verdict == Verdict::holds_on_grid)
                      ? Verdict::holds_on_grid
                      : Verdict::inconclusive;
    out.min_margin = std::min(rh.min_margin, ratio.min_margin);
    return out;
}

} // namespace ordcheck
