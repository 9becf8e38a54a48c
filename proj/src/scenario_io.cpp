#include "olg/scenario_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "olg/errors.hpp"

namespace olg {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<const char*> known) {
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) throw ValidationError(path.empty() ? key : path + "." + key, "unknown field");
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

double number(const json& obj, const std::string& path, const char* key, std::optional<double> fallback = {}) {
    const json* value = find(obj, key);
    if (!value) {
        if (fallback) return *fallback;
        throw ValidationError(join(path, key), "missing required field");
    }
    if (!value->is_number()) throw ValidationError(join(path, key), "expected a number");
    return value->get<double>();
}

std::string text(const json& obj, const std::string& path, const char* key) {
    const json* value = find(obj, key);
    if (!value) throw ValidationError(join(path, key), "missing required field");
    if (!value->is_string()) throw ValidationError(join(path, key), "expected a string");
    return value->get<std::string>();
}

const json& object(const json& obj, const std::string& path, const char* key) {
    const json* value = find(obj, key);
    if (!value) throw ValidationError(join(path, key), "missing required field");
    if (!value->is_object()) throw ValidationError(join(path, key), "expected an object");
    return *value;
}

constexpr std::array<const char*, 6> kSweepable{"q", "d", "g", "gamma_adj", "theta", "sigma"};

EconomyParams params_from_json(const json& p) {
    reject_unknown_keys(p, "params",
                        {"sigma", "theta", "eta", "gamma0", "kappa", "y", "L_f", "g", "d", "q", "gamma_adj", "W"});
    EconomyParams params;
    params.sigma = number(p, "params", "sigma");
    params.theta = number(p, "params", "theta");
    params.eta = number(p, "params", "eta");
    params.gamma0 = number(p, "params", "gamma0");
    params.kappa = number(p, "params", "kappa", 0.0);
    params.y = number(p, "params", "y");
    params.labor_force = number(p, "params", "L_f");
    params.g = number(p, "params", "g");
    params.d = number(p, "params", "d");
    params.q = number(p, "params", "q");
    params.gamma_adj = number(p, "params", "gamma_adj");
    params.wage = number(p, "params", "W");
    params.validate();
    return params;
}

json params_to_json(const EconomyParams& p) {
    return json{{"sigma", p.sigma}, {"theta", p.theta}, {"eta", p.eta},   {"gamma0", p.gamma0},
                {"kappa", p.kappa}, {"y", p.y},         {"L_f", p.labor_force}, {"g", p.g},
                {"d", p.d},         {"q", p.q},         {"gamma_adj", p.gamma_adj}, {"W", p.wage}};
}

json optional_number(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

std::optional<double> optional_number_from(const json& obj, const char* key) {
    const json* value = find(obj, key);
    if (!value || value->is_null()) return std::nullopt;
    if (!value->is_number()) throw ValidationError(key, "expected a number or null");
    return value->get<double>();
}

bool flag(const json& obj, const char* key) {
    const json* value = find(obj, key);
    if (!value || !value->is_boolean()) throw ValidationError(key, "expected a boolean");
    return value->get<bool>();
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("", "scenario must be a JSON object");
    reject_unknown_keys(doc, "", {"name", "params", "mode", "carry", "horizon", "shock", "tol",
                                  "divergence_bound", "sweep"});
    Scenario s;
    s.name = text(doc, "", "name");
    s.params = params_from_json(object(doc, "", "params"));

    if (const json* mode = find(doc, "mode")) {
        auto parsed = mode->is_string() ? expectations_from_string(mode->get<std::string>()) : std::nullopt;
        if (!parsed) throw ValidationError("mode", "expected \"foresight\" or \"static\"");
        s.mode = *parsed;
    }
    if (const json* carry = find(doc, "carry")) {
        auto parsed = carry->is_string() ? carry_from_string(carry->get<std::string>()) : std::nullopt;
        if (!parsed) throw ValidationError("carry", "expected \"predetermined\" or \"generational\"");
        s.carry = *parsed;
    }
    if (const json* horizon = find(doc, "horizon")) {
        if (!horizon->is_number_integer() || horizon->get<long>() < 1)
            throw ValidationError("horizon", "expected an integer >= 1");
        s.horizon = horizon->get<long>();
    }
    if (find(doc, "shock")) {
        const json& shock = object(doc, "", "shock");
        reject_unknown_keys(shock, "shock", {"price_factor", "net_savings_delta", "debt_factor"});
        s.shock.price_factor = number(shock, "shock", "price_factor", 1.0);
        s.shock.net_savings_delta = number(shock, "shock", "net_savings_delta", 0.0);
        s.shock.debt_factor = number(shock, "shock", "debt_factor", 1.0);
        if (!(s.shock.price_factor > 0.0)) throw ValidationError("shock.price_factor", "must be > 0");
        if (!(s.shock.debt_factor > 0.0)) throw ValidationError("shock.debt_factor", "must be > 0");
        if (!std::isfinite(s.shock.net_savings_delta))
            throw ValidationError("shock.net_savings_delta", "must be finite");
    }
    s.tol = number(doc, "", "tol", s.tol);
    if (!(s.tol > 0.0)) throw ValidationError("tol", "must be > 0");
    s.divergence_bound = number(doc, "", "divergence_bound", s.divergence_bound);
    if (!(s.divergence_bound > 0.0)) throw ValidationError("divergence_bound", "must be > 0");

    if (find(doc, "sweep")) {
        const json& sw = object(doc, "", "sweep");
        reject_unknown_keys(sw, "sweep", {"param", "lo", "hi", "count"});
        SweepSpec spec;
        spec.param = text(sw, "sweep", "param");
        if (std::find(kSweepable.begin(), kSweepable.end(), spec.param) == kSweepable.end())
            throw ValidationError("sweep.param", "must be one of q, d, g, gamma_adj, theta, sigma");
        spec.lo = number(sw, "sweep", "lo");
        spec.hi = number(sw, "sweep", "hi");
        if (!(spec.lo < spec.hi)) throw ValidationError("sweep.hi", "range must be non-empty (lo < hi)");
        const json* count = find(sw, "count");
        if (!count || !count->is_number_integer() || count->get<long>() < 2)
            throw ValidationError("sweep.count", "expected an integer >= 2");
        spec.count = count->get<int>();
        s.sweep = spec;
    }
    return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("", "cannot open scenario file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("", path.string() + ": malformed JSON: " + e.what());
    }
    return scenario_from_json(doc);
}

json to_json(const Scenario& s) {
    json doc{{"name", s.name},
             {"params", params_to_json(s.params)},
             {"mode", to_string(s.mode)},
             {"carry", to_string(s.carry)},
             {"horizon", s.horizon},
             {"shock",
              {{"price_factor", s.shock.price_factor},
               {"net_savings_delta", s.shock.net_savings_delta},
               {"debt_factor", s.shock.debt_factor}}},
             {"tol", s.tol},
             {"divergence_bound", s.divergence_bound}};
    if (s.sweep)
        doc["sweep"] = {{"param", s.sweep->param}, {"lo", s.sweep->lo}, {"hi", s.sweep->hi}, {"count", s.sweep->count}};
    return doc;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

json to_json(const SteadyState& s) {
    return json{{"p_star", s.p_star},
                {"l_star", s.l_star},
                {"ll_star", s.ll_star},
                {"m_star", s.m_star},
                {"m_tilde_star", s.m_tilde_star},
                {"d_bar_star", s.d_bar_star},
                {"y_star_nominal", s.y_star_nominal},
                {"alpha", s.alpha},
                {"denominator", s.denominator},
                {"fprime", optional_number(s.fprime)},
                {"criterion", s.criterion}};
}

SteadyState steady_state_from_json(const json& doc) {
    SteadyState s{};
    s.p_star = number(doc, "", "p_star");
    s.l_star = number(doc, "", "l_star");
    s.ll_star = number(doc, "", "ll_star");
    s.m_star = number(doc, "", "m_star");
    s.m_tilde_star = number(doc, "", "m_tilde_star");
    s.d_bar_star = number(doc, "", "d_bar_star");
    s.y_star_nominal = number(doc, "", "y_star_nominal");
    s.alpha = number(doc, "", "alpha");
    s.denominator = number(doc, "", "denominator");
    s.fprime = optional_number_from(doc, "fprime");
    s.criterion = number(doc, "", "criterion");
    return s;
}

json to_json(const StabilityReport& r) {
    return json{{"classification", to_string(r.classification)},
                {"criterion", r.criterion},
                {"fprime", optional_number(r.fprime)},
                {"denominator", r.denominator},
                {"marginal_tolerance", r.marginal_tolerance},
                {"fprime_positive", r.fprime_positive},
                {"denominator_positive", r.denominator_positive},
                {"overshoot", r.overshoot}};
}

StabilityReport stability_report_from_json(const json& doc) {
    StabilityReport r{};
    auto classification = stability_from_string(text(doc, "", "classification"));
    if (!classification) throw ValidationError("classification", "unknown classification");
    r.classification = *classification;
    r.criterion = number(doc, "", "criterion");
    r.fprime = optional_number_from(doc, "fprime");
    r.denominator = number(doc, "", "denominator");
    r.marginal_tolerance = number(doc, "", "marginal_tolerance");
    r.fprime_positive = flag(doc, "fprime_positive");
    r.denominator_positive = flag(doc, "denominator_positive");
    r.overshoot = flag(doc, "overshoot");
    return r;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
    out << kTrajectoryHeader << '\n';
    for (const auto& r : trajectory.records) {
        out << r.t << ',' << format_double(r.p) << ',' << format_double(r.p_next) << ','
            << format_double(r.ll_notional) << ',' << format_double(r.ll_actual) << ','
            << format_double(r.employment) << ',' << format_double(r.unemployment_rate) << ','
            << to_string(r.regime) << ',' << format_double(r.y_nominal) << ',' << format_double(r.m) << ','
            << format_double(r.m_tilde) << ',' << format_double(r.d_bar) << '\n';
    }
}

void emit_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path) {
    if (trajectory.records.empty()) throw DomainError("emit_trajectory_csv: empty trajectory");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_trajectory_csv(trajectory, out);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

json trajectory_summary(const Scenario& scenario, const Trajectory& trajectory) {
    const auto& last = trajectory.records.back();
    const auto report = stability_classification(trajectory.params, trajectory.steady);
    return json{{"scenario", scenario.name},
                {"mode", to_string(trajectory.options.expectations)},
                {"carry", to_string(trajectory.options.carry)},
                {"termination", to_string(trajectory.termination)},
                {"reason", trajectory.reason},
                {"verdict", to_string(path_verdict(trajectory))},
                {"analytic_classification", to_string(report.classification)},
                {"periods", trajectory.records.size()},
                {"p_star", trajectory.steady.p_star},
                {"final_p", last.p},
                {"final_relative_gap", std::abs(last.p - trajectory.steady.p_star) / trajectory.steady.p_star},
                {"final_unemployment_rate", last.unemployment_rate}};
}

Trajectory simulate_scenario(const Scenario& scenario) {
    const auto steady = full_employment_steady_state(scenario.params);
    return simulate(scenario.params, apply_shock(steady, scenario.shock), scenario.horizon,
                    scenario.step_options(), scenario.stop_rule());
}

void set_parameter(EconomyParams& params, const std::string& name, double value) {
    static const std::map<std::string, double EconomyParams::*> fields{
        {"q", &EconomyParams::q},         {"d", &EconomyParams::d},
        {"g", &EconomyParams::g},         {"gamma_adj", &EconomyParams::gamma_adj},
        {"theta", &EconomyParams::theta}, {"sigma", &EconomyParams::sigma}};
    auto it = fields.find(name);
    if (it == fields.end()) throw ValidationError("sweep.param", "unknown parameter " + name);
    params.*(it->second) = value;
}

std::vector<SweepRow> run_sweep(const Scenario& scenario) {
    if (!scenario.sweep) throw ValidationError("sweep", "scenario has no sweep section");
    const auto& spec = *scenario.sweep;
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        const double value = i + 1 == spec.count
                                 ? spec.hi
                                 : spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) / (spec.count - 1);
        Scenario point = scenario;
        set_parameter(point.params, spec.param, value);

        SweepRow row{value, std::nullopt, std::nullopt, "Infeasible", "Error"};
        try {
            const auto steady = full_employment_steady_state(point.params);
            const auto report = stability_classification(point.params, steady);
            row.criterion = report.criterion;
            row.fprime = report.fprime;
            row.classification = std::string(to_string(report.classification));
        } catch (const std::exception&) {
            rows.push_back(row);
            continue;
        }
        try {
            row.simulated = std::string(to_string(path_verdict(simulate_scenario(point))));
        } catch (const std::exception&) {
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "value,criterion,fprime,classification,simulated\n";
    for (const auto& r : rows) {
        out << format_double(r.value) << ',' << (r.criterion ? format_double(*r.criterion) : "") << ','
            << (r.fprime ? format_double(*r.fprime) : "") << ',' << r.classification << ',' << r.simulated
            << '\n';
    }
}

}  // namespace olg
