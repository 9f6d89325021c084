// ordcheck: stochastic-order checks for parallel systems of Weibull
// components, with theorem-style property verification, counterexample
// reproduction/search and a Monte Carlo cross-check. All data output is
// machine readable (JSON or CSV) and byte-stable for fixed flags and seed.

#include "ordcheck/io.hpp"
#include "ordcheck/majorization.hpp"
#include "ordcheck/mc_oracle.hpp"
#include "ordcheck/ordering.hpp"
#include "ordcheck/parallel.hpp"
#include "ordcheck/verify.hpp"
#include "ordcheck/weibull.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordcheck::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitInconclusive = 3;

std::vector<double> parse_rates(const std::string& csv, const char* flag)
{
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || !(v > 0.0))
            throw CLI::ValidationError(std::string(flag) + ": entries must be positive reals");
        out.push_back(v);
    }
    if (out.empty())
        throw CLI::ValidationError(std::string(flag) + ": expected a comma-separated list");
    return out;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    if (!f)
        throw std::runtime_error("write failed: " + out_path);
}

void emit_json(const Json& j, const std::string& out_path)
{
    emit(j.dump(2) + "\n", out_path);
}

int verdict_exit_code(ordcheck::Verdict v)
{
    switch (v) {
    case ordcheck::Verdict::holds_on_grid: return kExitOk;
    case ordcheck::Verdict::violated: return kExitViolated;
    case ordcheck::Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

struct GridFlags {
    ordcheck::GridSpec spec;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--points", spec.points, "grid points")->check(CLI::Range(16, 1 << 22));
        cmd->add_option("--q-lo", spec.q_lo, "lower quantile anchor");
        cmd->add_option("--q-hi", spec.q_hi, "upper quantile anchor");
        cmd->add_option("--refine-rounds", spec.refine_rounds, "refinement rounds");
        cmd->add_option("--tol", spec.mono_tol, "relative monotonicity tolerance");
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stochastic-order toolkit for Weibull parallel systems"};
    app.require_subcommand(1);

    // dist -------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "evaluate one Weibull component");
    double d_shape = 1.0, d_rate = 1.0;
    std::optional<double> d_t, d_q;
    bool d_pdf = false, d_cdf = false, d_surv = false, d_haz = false, d_rhaz = false,
         d_quant = false;
    std::string d_out;
    dist->add_option("--shape", d_shape, "shape alpha")->required();
    dist->add_option("--rate", d_rate, "rate lambda")->required();
    dist->add_option("--t", d_t, "evaluation time");
    dist->add_option("--q", d_q, "quantile level in (0,1)");
    dist->add_flag("--pdf", d_pdf, "density");
    dist->add_flag("--cdf", d_cdf, "distribution function");
    dist->add_flag("--survival", d_surv, "survival function");
    dist->add_flag("--hazard", d_haz, "hazard rate");
    dist->add_flag("--reverse-hazard", d_rhaz, "reverse hazard rate");
    dist->add_flag("--quantile", d_quant, "inverse cdf (needs --q)");
    dist->add_option("--out", d_out, "write JSON here instead of stdout");

    // check-order --------------------------------------------------------
    auto* chk = app.add_subcommand("check-order", "grid check of a stochastic order");
    std::string c_order, c_lambda, c_theta, c_out;
    double c_shape = 1.0;
    GridFlags c_grid;
    chk->add_option("--order", c_order, "one of st|hr|rh|lr")
        ->required()
        ->check(CLI::IsMember({"st", "hr", "rh", "lr"}));
    chk->add_option("--shape", c_shape, "common shape alpha")->required();
    chk->add_option("--lambda", c_lambda, "rates of the lower system")->required();
    chk->add_option("--theta", c_theta, "rates of the upper system")->required();
    chk->add_option("--out", c_out, "write JSON here instead of stdout");
    c_grid.attach(chk);

    // check-majorization ---------------------------------------------------
    auto* maj = app.add_subcommand("check-majorization", "majorization predicate");
    std::string m_x, m_y, m_out;
    bool m_weak = false;
    maj->add_option("--x", m_x, "candidate majorized vector")->required();
    maj->add_option("--y", m_y, "candidate majorizing vector")->required();
    maj->add_flag("--weak", m_weak, "test weak majorization");
    maj->add_option("--out", m_out, "write JSON here instead of stdout");

    // verify-theorem -------------------------------------------------------
    auto* ver = app.add_subcommand("verify-theorem", "sample a registered result's hypothesis");
    std::string v_id, v_out;
    std::size_t v_trials = 200;
    std::uint64_t v_seed = 1;
    GridFlags v_grid;
    ver->add_option("--id", v_id, "registered theorem id")->required();
    ver->add_option("--trials", v_trials, "hypothesis draws");
    ver->add_option("--seed", v_seed, "rng seed");
    ver->add_option("--out", v_out, "write JSON here instead of stdout");
    v_grid.attach(ver);

    // reproduce-figure -------------------------------------------------------
    auto* fig = app.add_subcommand("reproduce-figure", "density-ratio curve of a counterexample");
    int f_figure = 1;
    std::string f_out;
    GridFlags f_grid;
    fig->add_option("--figure", f_figure, "figure number 1..3")->required()->check(CLI::Range(1, 3));
    fig->add_option("--out", f_out, "CSV output path")->required();
    f_grid.attach(fig);

    // scan --------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "random search for lr violations");
    double s_alpha_lo = 1.5, s_alpha_hi = 3.0;
    std::size_t s_n = 2, s_trials = 100;
    std::uint64_t s_seed = 1;
    std::string s_target = "maj", s_out;
    bool s_outlier = false;
    GridFlags s_grid;
    scan->add_option("--alpha-lo", s_alpha_lo, "shape range lower end");
    scan->add_option("--alpha-hi", s_alpha_hi, "shape range upper end");
    scan->add_option("--n", s_n, "system size")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    scan->add_option("--trials", s_trials, "random pairs to test");
    scan->add_option("--seed", s_seed, "rng seed");
    scan->add_option("--target", s_target, "maj | weakmaj")
        ->check(CLI::IsMember({"maj", "weakmaj"}));
    scan->add_flag("--outlier", s_outlier, "restrict to multiple-outlier structure");
    scan->add_option("--out", s_out, "write JSON here instead of stdout");
    s_grid.attach(scan);

    // mc-compare -----------------------------------------------------------
    auto* mc = app.add_subcommand("mc-compare", "Monte Carlo cross-check");
    double mc_shape = 1.0, mc_conf = 0.99;
    std::string mc_lambda, mc_theta, mc_out;
    std::size_t mc_n = 100000;
    std::uint64_t mc_seed = 1;
    GridFlags mc_grid;
    mc->add_option("--shape", mc_shape, "common shape alpha")->required();
    mc->add_option("--lambda", mc_lambda, "rates of the system under test")->required();
    mc->add_option("--theta", mc_theta, "optional second system: run the empirical st check");
    mc->add_option("--n", mc_n, "sample size");
    mc->add_option("--seed", mc_seed, "rng seed");
    mc->add_option("--confidence", mc_conf, "DKW confidence level");
    mc->add_option("--out", mc_out, "write JSON here instead of stdout");
    mc_grid.attach(mc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints usage/help
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dist->parsed()) {
            const ordcheck::WeibullParams p{d_shape, d_rate};
            validate(p);
            Json j;
            j["schema_version"] = ordcheck::io::kSchemaVersion;
            j["alpha"] = p.alpha;
            j["lambda"] = p.lambda;
            if (d_pdf || d_cdf || d_surv || d_haz || d_rhaz) {
                if (!d_t)
                    throw CLI::ValidationError("--t is required for value queries");
                j["t"] = *d_t;
            }
            if (d_pdf) {
                try {
                    j["pdf"] = ordcheck::pdf(p, *d_t);
                } catch (const ordcheck::DensityDivergesError&) {
                    j["pdf"] = "diverges";
                }
            }
            if (d_cdf)
                j["cdf"] = ordcheck::cdf(p, *d_t);
            if (d_surv)
                j["survival"] = ordcheck::survival(p, *d_t);
            if (d_haz)
                j["hazard"] = ordcheck::hazard(p, *d_t);
            if (d_rhaz)
                j["reverse_hazard"] = ordcheck::reverse_hazard(p, *d_t);
            if (d_quant) {
                if (!d_q)
                    throw CLI::ValidationError("--quantile needs --q");
                j["q"] = *d_q;
                j["quantile"] = ordcheck::quantile(p, *d_q);
            }
            emit_json(j, d_out);
            return kExitOk;
        }

        if (chk->parsed()) {
            const auto la = parse_rates(c_lambda, "--lambda");
            const auto lb = parse_rates(c_theta, "--theta");
            if (la.size() != lb.size())
                throw CLI::ValidationError("--lambda and --theta must have equal length");
            const ordcheck::ParallelSystem a(c_shape, la), b(c_shape, lb);
            ordcheck::OrderingVerdict v;
            if (c_order == "st")
                v = ordcheck::check_st(a, b, c_grid.spec);
            else if (c_order == "hr")
                v = ordcheck::check_hr(a, b, c_grid.spec);
            else if (c_order == "rh")
                v = ordcheck::check_rh(a, b, c_grid.spec);
            else
                v = ordcheck::check_lr(a, b, c_grid.spec);
            emit_json(ordcheck::io::to_json(v), c_out);
            return verdict_exit_code(v.verdict);
        }

        if (maj->parsed()) {
            const auto x = parse_rates(m_x, "--x");
            const auto y = parse_rates(m_y, "--y");
            const bool result = m_weak ? ordcheck::is_weakly_majorized(x, y)
                                       : ordcheck::is_majorized(x, y);
            Json j{{"schema_version", ordcheck::io::kSchemaVersion},
                   {"x", x},
                   {"y", y},
                   {"weak", m_weak},
                   {"result", result}};
            emit_json(j, m_out);
            return kExitOk;
        }

        if (ver->parsed()) {
            const auto id = ordcheck::theorem_id_from_string(v_id);
            const auto report = ordcheck::run_theorem(id, v_trials, v_seed, v_grid.spec);
            emit_json(ordcheck::io::to_json(report), v_out);
            return report.ok() ? kExitOk : kExitViolated;
        }

        if (fig->parsed()) {
            const ordcheck::ExampleId id = f_figure == 1   ? ordcheck::ExampleId::ex1
                                           : f_figure == 2 ? ordcheck::ExampleId::ex2a
                                                           : ordcheck::ExampleId::ex2b;
            const auto rep = ordcheck::reproduce_example(id, f_grid.spec);
            emit(ordcheck::io::curve_to_csv(rep.curve), f_out);
            emit_json(ordcheck::io::to_json(rep), ""); // witness summary to stdout
            return kExitOk;
        }

        if (scan->parsed()) {
            const auto target = s_target == "maj" ? ordcheck::ScanTarget::maj_implies_lr
                                                  : ordcheck::ScanTarget::weakmaj_implies_lr;
            const auto rep = ordcheck::scan_counterexamples(s_alpha_lo, s_alpha_hi, s_n, s_trials,
                                                            s_seed, target, s_outlier, s_grid.spec);
            emit_json(ordcheck::io::to_json(rep), s_out);
            return kExitOk;
        }

        if (mc->parsed()) {
            const auto la = parse_rates(mc_lambda, "--lambda");
            const ordcheck::ParallelSystem a(mc_shape, la);
            if (mc_theta.empty()) {
                const auto emp = ordcheck::sample_parallel(a, mc_n, mc_seed);
                const auto res = ordcheck::dkw_compare(emp, a, mc_conf);
                emit_json(ordcheck::io::to_json(res), mc_out);
                return res.pass() ? kExitOk : kExitViolated;
            }
            const auto lb = parse_rates(mc_theta, "--theta");
            const ordcheck::ParallelSystem b(mc_shape, lb);
            const auto rep = ordcheck::empirical_st_check(a, b, mc_n, mc_seed, mc_grid.spec);
            emit_json(ordcheck::io::to_json(rep), mc_out);
            return rep.agree ? kExitOk : kExitViolated;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
