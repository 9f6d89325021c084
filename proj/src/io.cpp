#include "ordcheck/io.hpp"

#include <cstdio>

namespace ordcheck::io {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const GridSpec& g)
{
    return Json{{"q_lo", g.q_lo},
                {"q_hi", g.q_hi},
                {"points", g.points},
                {"refine_rounds", g.refine_rounds},
                {"mono_tol", g.mono_tol}};
}

namespace {

Json system_json(const SystemEcho& s)
{
    return Json{{"alpha", s.alpha}, {"lambdas", s.lambdas}};
}

} // namespace

Json to_json(const OrderingVerdict& v)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["order"] = to_string(v.order);
    j["verdict"] = to_string(v.verdict);
    j["witness_t"] = v.witness ? Json(v.witness->t1) : Json(nullptr);
    j["witness_t2"] = (v.witness && v.witness->t2) ? Json(*v.witness->t2) : Json(nullptr);
    j["margin"] = v.witness ? Json(v.witness->magnitude) : Json(nullptr);
    j["min_margin"] = v.min_margin;
    j["grid"] = to_json(v.grid);
    j["system_a"] = system_json(v.a);
    j["system_b"] = system_json(v.b);
    return j;
}

Json to_json(const TheoremReport& r)
{
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        fails.push_back(Json{{"trial", f.trial},
                             {"alpha", f.alpha},
                             {"lambdas_a", f.lambdas_a},
                             {"lambdas_b", f.lambdas_b},
                             {"verdict", to_json(f.verdict)}});
    }
    const TheoremInfo& info = theorem_info(r.id);
    return Json{{"schema_version", kSchemaVersion},
                {"id", to_string(r.id)},
                {"hypothesis", info.hypothesis},
                {"conclusion", to_string(info.conclusion)},
                {"trials", r.trials},
                {"passes", r.passes},
                {"seed", r.seed},
                {"failures", std::move(fails)}};
}

Json to_json(const ScanReport& r)
{
    Json hits = Json::array();
    for (const auto& h : r.hits) {
        hits.push_back(Json{{"trial", h.trial},
                            {"alpha", h.alpha},
                            {"lambdas_a", h.lambdas_a},
                            {"lambdas_b", h.lambdas_b},
                            {"verdict", to_json(h.verdict)}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"target", r.target == ScanTarget::maj_implies_lr ? "maj_implies_lr"
                                                                  : "weakmaj_implies_lr"},
                {"alpha_lo", r.alpha_lo},
                {"alpha_hi", r.alpha_hi},
                {"n", r.n},
                {"multiple_outlier", r.multiple_outlier},
                {"trials", r.trials},
                {"seed", r.seed},
                {"violations", std::move(hits)}};
}

Json to_json(const DkwResult& r)
{
    return Json{{"schema_version", kSchemaVersion},
                {"sup_distance", r.sup_distance},
                {"bound", r.bound},
                {"confidence", r.confidence},
                {"n", r.n},
                {"pass", r.pass()}};
}

Json to_json(const EmpiricalStReport& r)
{
    return Json{{"schema_version", kSchemaVersion},
                {"analytic_verdict", to_string(r.analytic)},
                {"band", r.band},
                {"max_excess", r.max_excess},
                {"empirical_violation", r.empirical_violation},
                {"agree", r.agree},
                {"n", r.n},
                {"seed", r.seed}};
}

Json to_json(const ExampleReport& r)
{
    return Json{{"schema_version", kSchemaVersion},
                {"id", to_string(r.id)},
                {"preconditions_ok", r.preconditions_ok},
                {"lr", to_json(r.lr)}};
}

Json to_json(const SchurProbeReport& r)
{
    Json vio = Json::array();
    for (const auto& v : r.violations) {
        vio.push_back(Json{{"trial", v.trial},
                           {"x", v.x},
                           {"y", v.y},
                           {"fx", v.fx},
                           {"fy", v.fy}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"trials", r.trials},
                {"seed", r.seed},
                {"ok", r.ok()},
                {"violations", std::move(vio)}};
}

std::string curve_to_csv(const std::vector<std::pair<double, double>>& curve)
{
    std::string out = "t,ratio\n";
    for (const auto& [t, ratio] : curve) {
        out += format_double(t);
        out += ',';
        out += format_double(ratio);
        out += '\n';
    }
    return out;
}

} // namespace ordcheck::io
