#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "potdyn/dynamics.hpp"
#include "potdyn/econ.hpp"
#include "potdyn/energy.hpp"
#include "potdyn/io.hpp"
#include "potdyn/price.hpp"
#include "potdyn/scenarios.hpp"
#include "potdyn/units.hpp"

namespace {

using nlohmann::ordered_json;

// Flag combinations the parser cannot express on its own; exit 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* event_kind_name(potdyn::EventKind kind) {
    switch (kind) {
        case potdyn::EventKind::JunctionCross: return "JunctionCross";
        case potdyn::EventKind::Absorbed: return "Absorbed";
        case potdyn::EventKind::Breakdown: return "Breakdown";
    }
    return "?";
}

std::string fmt(double v) { return potdyn::format_number(v, 12); }

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string csv_report(const Rows& rows) {
    std::string out = "field,value\n";
    for (const auto& [field, value] : rows) out += field + "," + value + "\n";
    return out;
}

std::string json_document(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_document(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw potdyn::io_error("cannot open " + path + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw potdyn::io_error("cannot write " + path);
}

struct OutFlags {
    std::string format;
    std::string path;
};

void add_output_options(CLI::App* cmd, OutFlags& f, const char* default_format) {
    f.format = default_format;
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", f.path, "Write the document to this file instead of stdout");
}

struct SystemFlags {
    std::string preset_id;
    double p_plus = 0.0;
    double p_minus = 0.0;
    double t_plus = 0.0;
    double t_minus = 0.0;
    std::string stock_unit = "stock units";
    CLI::Option* preset = nullptr;
    CLI::Option* params[4] = {nullptr, nullptr, nullptr, nullptr};
};

void add_system_options(CLI::App* cmd, SystemFlags& f) {
    f.preset = cmd->add_option("--preset", f.preset_id, "Preset id; see preset-list");
    f.params[0] = cmd->add_option("--p-plus", f.p_plus, "Saturated production rate, stock-units/yr");
    f.params[1] =
        cmd->add_option("--p-minus", f.p_minus, "Stock-independent consumption rate, stock-units/yr");
    f.params[2] = cmd->add_option("--t-plus", f.t_plus, "Turnover time via production, yr");
    f.params[3] = cmd->add_option("--t-minus", f.t_minus, "Turnover time via consumption, yr");
    cmd->add_option("--stock-unit", f.stock_unit, "Unit label for explicit rates")
        ->capture_default_str();
    for (auto* opt : f.params) f.preset->excludes(opt);
}

struct ResolvedSystem {
    const potdyn::Preset* pre = nullptr;
    const potdyn::PiecewiseSystem* eco = nullptr;
    const potdyn::PriceSystem* price = nullptr;
    potdyn::PiecewiseSystem local;
};

// Fills a caller-owned struct so eco may point at r.local.
void resolve_system(const SystemFlags& f, bool allow_price, ResolvedSystem& r) {
    if (f.preset->count() > 0) {
        r.pre = &potdyn::preset(f.preset_id);
        if (const auto* eco = std::get_if<potdyn::EcosystemPayload>(&r.pre->payload)) {
            r.eco = &eco->sys;
            return;
        }
        if (const auto* pp = std::get_if<potdyn::PricePayload>(&r.pre->payload)) {
            if (allow_price) {
                r.price = &pp->psys;
                return;
            }
            throw std::domain_error("preset '" + r.pre->id +
                                    "' is a Price preset; this command needs a stock system");
        }
        throw std::domain_error("preset '" + r.pre->id + "' (" +
                                potdyn::preset_kind_name(r.pre->kind) +
                                ") has no dynamical system to evaluate");
    }
    for (auto* opt : f.params)
        if (opt->count() == 0)
            throw usage_error(
                "provide --preset or all of --p-plus, --p-minus, --t-plus, --t-minus");
    r.local = {f.p_plus, f.p_minus, f.t_plus, f.t_minus, f.stock_unit};
    potdyn::validate(r.local);
    r.eco = &r.local;
}

std::string exact_set_name() {
    return potdyn::constant_set_name(potdyn::ConstantSet::Exact);
}

ordered_json system_provenance(const ResolvedSystem& r) {
    ordered_json p;
    if (r.pre)
        p["preset"] = r.pre->id;
    else
        p["parameters"] = "command line";
    p["constants"] = exact_set_name();
    return p;
}

struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

double parse_sweep_part(const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw usage_error("--sweep expects start:stop:step with numeric parts (got '" + text +
                          "')");
    return v;
}

Sweep parse_sweep(const std::string& text) {
    auto c1 = text.find(':');
    auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos)
        throw usage_error("--sweep expects start:stop:step (got '" + text + "')");
    Sweep s;
    s.start = parse_sweep_part(text.substr(0, c1));
    s.stop = parse_sweep_part(text.substr(c1 + 1, c2 - c1 - 1));
    s.step = parse_sweep_part(text.substr(c2 + 1));
    return s;
}

// Same inclusive-grid rule as the curve emitters.
std::vector<double> sweep_grid(const Sweep& s) {
    if (!(s.step > 0.0)) throw std::domain_error("step must be > 0");
    if (s.stop < s.start) throw std::domain_error("stop must be >= start");
    auto n = static_cast<std::size_t>(std::floor((s.stop - s.start) / s.step * (1.0 + 1e-12))) + 1;
    std::vector<double> grid;
    grid.reserve(n);
    for (std::size_t i = 0; i < n; ++i) grid.push_back(s.start + static_cast<double>(i) * s.step);
    return grid;
}

ordered_json points_json(const std::vector<potdyn::StationaryPoint>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& sp : pts)
        arr.push_back({{"location", sp.location}, {"kind", potdyn::point_kind_name(sp.kind)}});
    return arr;
}

void append_points_csv(Rows& rows, const std::vector<potdyn::StationaryPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string base = "stationary_point_" + std::to_string(i + 1);
        rows.emplace_back(base + "_location", fmt(pts[i].location));
        rows.emplace_back(base + "_kind", potdyn::point_kind_name(pts[i].kind));
    }
}

ordered_json events_json(const std::vector<potdyn::Event>& events) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : events)
        arr.push_back({{"kind", event_kind_name(e.kind)}, {"t", e.t}, {"direction", e.direction}});
    return arr;
}

void append_series_csv(std::string& out, const std::vector<double>& x,
                       const std::vector<double>& y, const std::string& label) {
    for (std::size_t i = 0; i < x.size(); ++i)
        out += fmt(x[i]) + "," + fmt(y[i]) + "," + label + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Piecewise production-consumption dynamics: stability analysis, price and "
        "employment landscapes, markup accounting, country-table ingestion and "
        "global energy-flux estimators",
        "potdyn"};
    app.require_subcommand(1);

    // classify
    auto* c_classify =
        app.add_subcommand("classify", "Regime, derived constants and stationary points");
    SystemFlags cl_sys;
    add_system_options(c_classify, cl_sys);
    OutFlags cl_out;
    add_output_options(c_classify, cl_out, "json");

    // potential / flux
    auto* c_potential = app.add_subcommand("potential", "Potential value at one point");
    SystemFlags po_sys;
    add_system_options(c_potential, po_sys);
    OutFlags po_out;
    add_output_options(c_potential, po_out, "json");
    double po_at = 0.0;
    c_potential->add_option("--at", po_at, "Evaluation point (stock, or price for price presets)")
        ->required();

    auto* c_flux = app.add_subcommand("flux", "Flux value at one point");
    SystemFlags fl_sys;
    add_system_options(c_flux, fl_sys);
    OutFlags fl_out;
    add_output_options(c_flux, fl_out, "json");
    double fl_at = 0.0;
    c_flux->add_option("--at", fl_at, "Evaluation point (stock, or price for price presets)")
        ->required();

    // simulate
    auto* c_simulate = app.add_subcommand("simulate", "Fixed-step trajectory with event log");
    SystemFlags sim_sys;
    add_system_options(c_simulate, sim_sys);
    OutFlags sim_out;
    add_output_options(c_simulate, sim_out, "csv");
    double sim_m0 = 0.0;
    double sim_dt = 0.0;
    long long sim_steps = 0;
    std::string sim_sweep_text;
    auto* sim_m0_opt = c_simulate->add_option("--m0", sim_m0, "Initial stock (or price)");
    c_simulate->add_option("--dt", sim_dt, "Step size, yr")->required();
    c_simulate->add_option("--steps", sim_steps, "Step count; 0 emits a header-only table")
        ->required();
    auto* sim_sweep_opt = c_simulate->add_option(
        "--sweep", sim_sweep_text, "Sweep of initial values, start:stop:step");
    sim_m0_opt->excludes(sim_sweep_opt);

    // price
    auto* c_price =
        app.add_subcommand("price", "Price-space image of a stock system, with stationary points");
    SystemFlags pr_sys;
    add_system_options(c_price, pr_sys);
    OutFlags pr_out;
    add_output_options(c_price, pr_out, "json");
    double pr_c = 0.0;
    double pr_dmax = 0.0;
    auto* pr_c_opt =
        c_price->add_option("--c", pr_c, "Price-stock product c, currency * stock-units");
    auto* pr_dmax_opt = c_price->add_option("--d-max", pr_dmax, "Breakdown cap, > d_u");

    // calibrate
    auto* c_calibrate = app.add_subcommand(
        "calibrate", "Price constant and labor productivity from observed market values");
    OutFlags ca_out;
    add_output_options(c_calibrate, ca_out, "json");
    double ca_d_s = 0.0, ca_n_s = 0.0, ca_p_s_minus = 0.0, ca_t_minus = 0.0;
    c_calibrate->add_option("--d-s", ca_d_s, "Observed cost price")->required();
    c_calibrate->add_option("--n-s", ca_n_s, "Observed saturated employment")->required();
    c_calibrate->add_option("--p-s-minus", ca_p_s_minus, "Observed consumption rate")->required();
    c_calibrate->add_option("--t-minus", ca_t_minus, "Consumption turnover time, yr")->required();

    // markup
    auto* c_markup = app.add_subcommand("markup", "Two-sector markup ratio");
    OutFlags mk_out;
    add_output_options(c_markup, mk_out, "json");
    std::string mk_preset;
    double mk_gdp = 0.0, mk_revenue = 0.0, mk_ratio = 0.0, mk_n1 = 0.0, mk_n2 = 0.0;
    double mk_consumption = 0.0, mk_unit_price = 0.0;
    auto* mk_preset_opt = c_markup->add_option("--preset", mk_preset, "Preset id; see preset-list");
    auto* mk_gdp_opt = c_markup->add_option("--gdp", mk_gdp, "GDP, currency/yr");
    auto* mk_rev_opt =
        c_markup->add_option("--sector2-revenue", mk_revenue, "Marked-up sector revenue, currency/yr");
    auto* mk_cons_opt = c_markup->add_option("--consumption-gj", mk_consumption,
                                             "Energy flow behind the revenue, GJ/yr");
    auto* mk_price_opt =
        c_markup->add_option("--unit-price", mk_unit_price, "Energy price, currency/GJ");
    auto* mk_ratio_opt =
        c_markup->add_option("--n1-over-n2", mk_ratio, "Workforce ratio of the two sectors");
    auto* mk_n1_opt = c_markup->add_option("--n1", mk_n1, "Cost-price sector workforce, persons");
    auto* mk_n2_opt = c_markup->add_option("--n2", mk_n2, "Marked-up sector workforce, persons");
    mk_preset_opt->excludes(mk_gdp_opt);
    mk_preset_opt->excludes(mk_rev_opt);
    mk_preset_opt->excludes(mk_cons_opt);
    mk_preset_opt->excludes(mk_price_opt);
    mk_preset_opt->excludes(mk_ratio_opt);
    mk_preset_opt->excludes(mk_n1_opt);
    mk_preset_opt->excludes(mk_n2_opt);
    mk_rev_opt->excludes(mk_cons_opt);
    mk_rev_opt->excludes(mk_price_opt);
    mk_ratio_opt->excludes(mk_n1_opt);
    mk_ratio_opt->excludes(mk_n2_opt);

    // three-sector
    auto* c_three = app.add_subcommand(
        "three-sector", "Vacant GDP share and redirection equivalents of an energy markup");
    OutFlags th_out;
    add_output_options(c_three, th_out, "json");
    std::string th_preset;
    double th_gdp = 45e12;
    double th_revenue_share = 0.10;
    double th_employment_share = 0.001;
    double th_markup = 0.0;
    auto* th_preset_opt = c_three->add_option("--preset", th_preset, "Preset id; see preset-list");
    auto* th_gdp_opt =
        c_three->add_option("--gdp", th_gdp, "GDP, currency/yr")->capture_default_str();
    auto* th_rev_opt =
        c_three->add_option("--revenue-share", th_revenue_share, "Energy revenue share of GDP")
            ->capture_default_str();
    auto* th_emp_opt = c_three
                           ->add_option("--employment-share", th_employment_share,
                                        "Energy sector employment share")
                           ->capture_default_str();
    auto* th_markup_opt = c_three->add_option("--markup", th_markup, "Energy markup ratio, >= 1");
    th_preset_opt->excludes(th_gdp_opt);
    th_preset_opt->excludes(th_rev_opt);
    th_preset_opt->excludes(th_emp_opt);
    th_preset_opt->excludes(th_markup_opt);

    // ingest
    auto* c_ingest =
        app.add_subcommand("ingest", "Country energy/employment table: totals and shares");
    OutFlags in_out;
    add_output_options(c_ingest, in_out, "json");
    std::string in_file, in_data_dir;
    double in_split = 0.0, in_food = 0.0;
    auto* in_file_opt = c_ingest->add_option("--file", in_file, "Input table path");
    c_ingest->add_option("--data-dir", in_data_dir,
                         "Directory holding the bundled tables (default: POTDYN_DATA_DIR or the "
                         "build-time copy)");
    auto* in_split_opt = c_ingest->add_option(
        "--split", in_split, "Energy fraction of mining employment for the sector split");
    auto* in_food_opt = c_ingest->add_option("--food-threshold", in_food,
                                             "Food-share grouping threshold, percent");

    // budget
    auto* c_budget =
        app.add_subcommand("budget", "Reference energy tables and the flux estimator suite");
    OutFlags bu_out;
    add_output_options(c_budget, bu_out, "json");
    std::string bu_table = "a1";
    std::string bu_scope, bu_data_dir;
    bool bu_estimators = false;
    double bu_biota_tw = 100.0;
    double bu_land_fraction = 2.0 / 3.0;
    double bu_disturbed_fraction = 0.6;
    auto* bu_table_opt = c_budget->add_option("--table", bu_table, "Which reference table")
                             ->check(CLI::IsMember({"a1", "a2", "a3"}))
                             ->capture_default_str();
    auto* bu_scope_opt = c_budget->add_option(
        "--scope", bu_scope, "Row filter; with --estimators, the energy-mix scope (default world)");
    c_budget->add_option("--data-dir", bu_data_dir,
                         "Directory holding the bundled tables (default: POTDYN_DATA_DIR or the "
                         "build-time copy)");
    auto* bu_est_opt = c_budget->add_flag("--estimators", bu_estimators,
                                          "Run the flux estimator suite instead of listing rows");
    bu_est_opt->excludes(bu_table_opt);
    c_budget->add_option("--biota-power-tw", bu_biota_tw, "Total biotic power, TW")
        ->needs(bu_est_opt)
        ->capture_default_str();
    c_budget->add_option("--land-fraction", bu_land_fraction, "Land fraction of biotic power")
        ->needs(bu_est_opt)
        ->capture_default_str();
    c_budget
        ->add_option("--disturbed-fraction", bu_disturbed_fraction,
                     "Disturbed fraction of land biota")
        ->needs(bu_est_opt)
        ->capture_default_str();

    // convert
    auto* c_convert = app.add_subcommand("convert", "Unit conversion through a constant set");
    OutFlags co_out;
    add_output_options(c_convert, co_out, "json");
    double co_value = 0.0;
    std::string co_from, co_to;
    std::string co_constants = "exact";
    c_convert->add_option("--value", co_value, "Value to convert")->required();
    c_convert->add_option("--from", co_from, "Source unit name")->required();
    c_convert->add_option("--to", co_to, "Target unit name")->required();
    c_convert->add_option("--constants", co_constants, "Constant set")
        ->check(CLI::IsMember({"exact", "paper-approximate"}))
        ->capture_default_str();

    // preset-list
    auto* c_presets = app.add_subcommand("preset-list", "Bundled presets");
    OutFlags pl_out;
    add_output_options(c_presets, pl_out, "json");

    // emit
    auto* c_emit = app.add_subcommand("emit", "Curve or trajectory series for a preset");
    OutFlags em_out;
    add_output_options(c_emit, em_out, "csv");
    std::string em_preset, em_curve, em_sweep_text;
    double em_start = 0.0, em_stop = 0.0, em_step = 0.0, em_m0 = 0.0, em_dt = 0.0;
    long long em_steps = 0;
    c_emit->add_option("--preset", em_preset, "Preset id; see preset-list")->required();
    c_emit->add_option("--curve", em_curve, "Series kind")
        ->check(CLI::IsMember({"potential", "flux", "trajectory"}))
        ->required();
    auto* em_start_opt = c_emit->add_option("--start", em_start, "Grid start (curves)");
    auto* em_stop_opt = c_emit->add_option("--stop", em_stop, "Grid stop, inclusive (curves)");
    auto* em_step_opt = c_emit->add_option("--step", em_step, "Grid step (curves)");
    auto* em_m0_opt = c_emit->add_option("--m0", em_m0, "Initial value (trajectory)");
    auto* em_dt_opt = c_emit->add_option("--dt", em_dt, "Step size, yr (trajectory)");
    auto* em_steps_opt = c_emit->add_option(
        "--steps", em_steps, "Step count (trajectory); 0 emits a header-only table");
    auto* em_sweep_opt = c_emit->add_option("--sweep", em_sweep_text,
                                            "Sweep of initial values, start:stop:step (trajectory)");
    em_m0_opt->excludes(em_sweep_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto data_dir_or_default = [](const std::string& flag_value) {
        return flag_value.empty() ? potdyn::default_data_dir() : flag_value;
    };

    auto run_classify = [&]() -> std::string {
        ResolvedSystem r;
        resolve_system(cl_sys, false, r);
        const potdyn::PiecewiseSystem& sys = *r.eco;
        auto d = potdyn::derive(sys);
        auto regime = potdyn::classify_regime(sys);
        auto pts = potdyn::stationary_points(sys);
        if (cl_out.format == "json") {
            ordered_json j;
            j["provenance"] = system_provenance(r);
            j["system"] = {{"p_plus", sys.p_plus},
                           {"p_minus", sys.p_minus},
                           {"t_plus", sys.t_plus},
                           {"t_minus", sys.t_minus},
                           {"stock_unit", sys.stock_unit}};
            j["alpha"] = regime.alpha;
            j["regime"] = potdyn::regime_name(regime.tag);
            j["m_u"] = d.m_u;
            j["m_r"] = d.m_r;
            j["m_s"] = d.m_s;
            j["r"] = d.r;
            j["stationary_points"] = points_json(pts);
            return json_document(j);
        }
        Rows rows;
        rows.emplace_back("alpha", fmt(regime.alpha));
        rows.emplace_back("regime", potdyn::regime_name(regime.tag));
        rows.emplace_back("m_u", fmt(d.m_u));
        rows.emplace_back("m_r", fmt(d.m_r));
        rows.emplace_back("m_s", fmt(d.m_s));
        rows.emplace_back("r", fmt(d.r));
        append_points_csv(rows, pts);
        return csv_report(rows);
    };

    auto run_eval = [&](const SystemFlags& sysf, const OutFlags& outf, double at,
                        bool want_potential) -> std::string {
        ResolvedSystem r;
        resolve_system(sysf, true, r);
        std::string at_unit, value_unit;
        double value = 0.0;
        std::optional<bool> breakdown;
        if (r.price) {
            at_unit = "d_s units";
            if (want_potential) {
                value = potdyn::price_potential(at, *r.price);
                value_unit = "(d_s units)^2/yr";
            } else {
                auto pf = potdyn::price_flux(at, *r.price);
                value = pf.value;
                value_unit = "d_s units/yr";
                breakdown = pf.breakdown;
            }
        } else {
            const potdyn::PiecewiseSystem& sys = *r.eco;
            at_unit = sys.stock_unit;
            if (want_potential) {
                value = potdyn::potential(at, sys);
                value_unit = "(" + sys.stock_unit + ")^2/yr";
            } else {
                value = potdyn::flux(at, sys);
                value_unit = sys.stock_unit + "/yr";
            }
        }
        if (outf.format == "json") {
            ordered_json j;
            j["provenance"] = system_provenance(r);
            j["at"] = at;
            j["at_unit"] = at_unit;
            j["value"] = value;
            j["value_unit"] = value_unit;
            if (breakdown) j["breakdown"] = *breakdown;
            return json_document(j);
        }
        Rows rows;
        rows.emplace_back("at", fmt(at));
        rows.emplace_back("at_unit", at_unit);
        rows.emplace_back("value", fmt(value));
        rows.emplace_back("value_unit", value_unit);
        if (breakdown) rows.emplace_back("breakdown", *breakdown ? "true" : "false");
        return csv_report(rows);
    };

    auto run_simulate = [&]() -> std::string {
        ResolvedSystem r;
        resolve_system(sim_sys, true, r);
        bool has_sweep = sim_sweep_opt->count() > 0;
        if ((sim_m0_opt->count() > 0) == has_sweep)
            throw usage_error("provide exactly one of --m0 or --sweep");
        std::vector<double> starts =
            has_sweep ? sweep_grid(parse_sweep(sim_sweep_text)) : std::vector<double>{sim_m0};
        std::string base_label = r.pre ? r.pre->id + " trajectory" : "trajectory";
        auto label_for = [&](std::size_t i) {
            return has_sweep ? "m0=" + fmt(starts[i]) : base_label;
        };
        auto integrate_one = [&](double m0) {
            return r.price ? potdyn::integrate_price(*r.price, m0, sim_dt, sim_steps)
                           : potdyn::integrate(*r.eco, m0, sim_dt, sim_steps);
        };
        if (sim_out.format == "csv") {
            std::string out = "x,y,label\n";
            if (sim_steps == 0) return out;  // empty trajectory: header only
            for (std::size_t i = 0; i < starts.size(); ++i) {
                auto traj = integrate_one(starts[i]);
                append_series_csv(out, traj.t, traj.m, label_for(i));
            }
            return out;
        }
        ordered_json j;
        j["provenance"] = system_provenance(r);
        j["dt"] = sim_dt;
        j["steps"] = sim_steps;
        auto entry = [&](double m0) {
            ordered_json e;
            e["m0"] = m0;
            if (sim_steps == 0) {
                e["t"] = ordered_json::array();
                e["m"] = ordered_json::array();
                e["events"] = ordered_json::array();
                return e;
            }
            auto traj = integrate_one(m0);
            e["dt_above_recommended"] = traj.dt_above_recommended;
            e["events"] = events_json(traj.events);
            e["t"] = traj.t;
            e["m"] = traj.m;
            return e;
        };
        if (has_sweep) {
            ordered_json arr = ordered_json::array();
            for (double m0 : starts) arr.push_back(entry(m0));
            j["sweep"] = arr;
        } else {
            for (auto& [k, v] : entry(starts[0]).items()) j[k] = v;
        }
        return json_document(j);
    };

    auto run_price = [&]() -> std::string {
        ResolvedSystem r;
        resolve_system(pr_sys, true, r);
        potdyn::PriceSystem built{};
        const potdyn::PriceSystem* psys = nullptr;
        if (r.price) {
            if (pr_c_opt->count() > 0 || pr_dmax_opt->count() > 0)
                throw usage_error("--c and --d-max apply only when building from a stock system");
            psys = r.price;
        } else {
            if (pr_c_opt->count() == 0)
                throw usage_error("--c is required when building a price system from stock parameters");
            std::optional<double> dmax;
            if (pr_dmax_opt->count() > 0) dmax = pr_dmax;
            built = potdyn::build_price_system(*r.eco, pr_c, dmax);
            psys = &built;
        }
        double r_d = potdyn::price_r_d(*psys);
        auto pts = potdyn::price_stationary_points(*psys);
        if (pr_out.format == "json") {
            ordered_json j;
            j["provenance"] = system_provenance(r);
            j["c"] = psys->c;
            j["d_s"] = psys->d_s;
            j["d_u"] = psys->d_u;
            j["d_r"] = psys->d_r;
            j["d_max"] = psys->d_max ? ordered_json(*psys->d_max) : ordered_json(nullptr);
            j["t_plus"] = psys->t_plus;
            j["t_minus"] = psys->t_minus;
            j["r_d"] = r_d;
            j["stationary_points"] = points_json(pts);
            return json_document(j);
        }
        Rows rows;
        rows.emplace_back("c", fmt(psys->c));
        rows.emplace_back("d_s", fmt(psys->d_s));
        rows.emplace_back("d_u", fmt(psys->d_u));
        rows.emplace_back("d_r", fmt(psys->d_r));
        if (psys->d_max) rows.emplace_back("d_max", fmt(*psys->d_max));
        rows.emplace_back("t_plus", fmt(psys->t_plus));
        rows.emplace_back("t_minus", fmt(psys->t_minus));
        rows.emplace_back("r_d", fmt(r_d));
        append_points_csv(rows, pts);
        return csv_report(rows);
    };

    auto run_calibrate = [&]() -> std::string {
        auto cal = potdyn::calibrate(ca_d_s, ca_n_s, ca_p_s_minus, ca_t_minus);
        if (ca_out.format == "json") {
            ordered_json j;
            j["provenance"] = {{"parameters", "command line"}, {"constants", exact_set_name()}};
            j["d_s"] = ca_d_s;
            j["n_s"] = ca_n_s;
            j["p_s_minus"] = ca_p_s_minus;
            j["t_minus"] = ca_t_minus;
            j["c"] = cal.c;
            j["a"] = cal.a;
            return json_document(j);
        }
        Rows rows;
        rows.emplace_back("d_s", fmt(ca_d_s));
        rows.emplace_back("n_s", fmt(ca_n_s));
        rows.emplace_back("p_s_minus", fmt(ca_p_s_minus));
        rows.emplace_back("t_minus", fmt(ca_t_minus));
        rows.emplace_back("c", fmt(cal.c));
        rows.emplace_back("a", fmt(cal.a));
        return csv_report(rows);
    };

    auto run_markup = [&]() -> std::string {
        ordered_json j;
        Rows rows;
        if (mk_preset_opt->count() > 0) {
            const potdyn::Preset& p = potdyn::preset(mk_preset);
            const auto* pay = std::get_if<potdyn::MarkupPayload>(&p.payload);
            if (!pay)
                throw std::domain_error("preset '" + p.id + "' (" +
                                        potdyn::preset_kind_name(p.kind) +
                                        ") has no two-sector markup decomposition");
            double markup = potdyn::markup_ratio(pay->econ);
            double revenue = potdyn::energy_revenue(pay->consumption_gj, pay->unit_price);
            potdyn::TwoSectorEconomy alt = pay->econ;
            alt.sector2_revenue = revenue;
            double markup_alt = potdyn::markup_ratio(alt);
            j["provenance"] = {{"preset", p.id}, {"constants", exact_set_name()}};
            j["gdp"] = pay->econ.gdp;
            j["n1"] = pay->econ.n1;
            j["n2"] = pay->econ.n2;
            j["sector2_revenue"] = pay->econ.sector2_revenue;
            j["markup"] = markup;
            j["consumption_gj"] = pay->consumption_gj;
            j["unit_price"] = pay->unit_price;
            j["energy_revenue"] = revenue;
            j["markup_at_energy_revenue"] = markup_alt;
            rows.emplace_back("gdp", fmt(pay->econ.gdp));
            rows.emplace_back("n1", fmt(pay->econ.n1));
            rows.emplace_back("n2", fmt(pay->econ.n2));
            rows.emplace_back("sector2_revenue", fmt(pay->econ.sector2_revenue));
            rows.emplace_back("markup", fmt(markup));
            rows.emplace_back("consumption_gj", fmt(pay->consumption_gj));
            rows.emplace_back("unit_price", fmt(pay->unit_price));
            rows.emplace_back("energy_revenue", fmt(revenue));
            rows.emplace_back("markup_at_energy_revenue", fmt(markup_alt));
        } else {
            if (mk_gdp_opt->count() == 0) throw usage_error("--gdp is required without --preset");
            double revenue = 0.0;
            bool via_energy = false;
            if (mk_rev_opt->count() > 0) {
                revenue = mk_revenue;
            } else if (mk_cons_opt->count() > 0 && mk_price_opt->count() > 0) {
                revenue = potdyn::energy_revenue(mk_consumption, mk_unit_price);
                via_energy = true;
            } else {
                throw usage_error(
                    "provide --sector2-revenue or both --consumption-gj and --unit-price");
            }
            potdyn::TwoSectorEconomy econ;
            econ.gdp = mk_gdp;
            econ.sector2_revenue = revenue;
            bool via_ratio = mk_ratio_opt->count() > 0;
            if (via_ratio) {
                // The decomposition uses only n1/n2; carry the ratio directly.
                econ.n1 = mk_ratio;
                econ.n2 = 1.0;
            } else if (mk_n1_opt->count() > 0 && mk_n2_opt->count() > 0) {
                econ.n1 = mk_n1;
                econ.n2 = mk_n2;
            } else {
                throw usage_error("provide --n1-over-n2 or both --n1 and --n2");
            }
            double markup = potdyn::markup_ratio(econ);
            j["provenance"] = {{"parameters", "command line"}, {"constants", exact_set_name()}};
            j["gdp"] = mk_gdp;
            rows.emplace_back("gdp", fmt(mk_gdp));
            if (via_ratio) {
                j["n1_over_n2"] = mk_ratio;
                rows.emplace_back("n1_over_n2", fmt(mk_ratio));
            } else {
                j["n1"] = mk_n1;
                j["n2"] = mk_n2;
                rows.emplace_back("n1", fmt(mk_n1));
                rows.emplace_back("n2", fmt(mk_n2));
            }
            if (via_energy) {
                j["consumption_gj"] = mk_consumption;
                j["unit_price"] = mk_unit_price;
                rows.emplace_back("consumption_gj", fmt(mk_consumption));
                rows.emplace_back("unit_price", fmt(mk_unit_price));
            }
            j["sector2_revenue"] = revenue;
            j["markup"] = markup;
            rows.emplace_back("sector2_revenue", fmt(revenue));
            rows.emplace_back("markup", fmt(markup));
        }
        return mk_out.format == "json" ? json_document(j) : csv_report(rows);
    };

    auto run_three_sector = [&]() -> std::string {
        potdyn::ThreeSectorEconomy econ;
        ordered_json prov;
        if (th_preset_opt->count() > 0) {
            const potdyn::Preset& p = potdyn::preset(th_preset);
            const auto* pay = std::get_if<potdyn::ThreeSectorPayload>(&p.payload);
            if (!pay)
                throw std::domain_error("preset '" + p.id + "' (" +
                                        potdyn::preset_kind_name(p.kind) +
                                        ") has no three-sector decomposition");
            econ = pay->econ;
            prov = {{"preset", p.id}, {"constants", exact_set_name()}};
        } else {
            if (th_markup_opt->count() == 0)
                throw usage_error("--markup is required without --preset");
            econ = {th_gdp, th_revenue_share, th_employment_share, th_markup};
            prov = {{"parameters", "command line"}, {"constants", exact_set_name()}};
        }
        auto rep = potdyn::three_sector_report(econ);
        if (th_out.format == "json") {
            ordered_json j;
            j["provenance"] = prov;
            j["gdp"] = econ.gdp;
            j["energy_revenue_share"] = econ.energy_revenue_share;
            j["energy_employment_share"] = econ.energy_employment_share;
            j["markup"] = econ.markup;
            j["vacant_share"] = rep.vacant_share;
            j["cost_labor_share"] = rep.cost_labor_share;
            j["parity_employment_share"] = rep.parity_employment_share;
            j["green_share"] = rep.green_share;
            j["workweek_reduction_days"] = rep.workweek_reduction_days;
            j["retirement_reduction_years"] = rep.retirement_reduction_years;
            return json_document(j);
        }
        Rows rows;
        rows.emplace_back("gdp", fmt(econ.gdp));
        rows.emplace_back("energy_revenue_share", fmt(econ.energy_revenue_share));
        rows.emplace_back("energy_employment_share", fmt(econ.energy_employment_share));
        rows.emplace_back("markup", fmt(econ.markup));
        rows.emplace_back("vacant_share", fmt(rep.vacant_share));
        rows.emplace_back("cost_labor_share", fmt(rep.cost_labor_share));
        rows.emplace_back("parity_employment_share", fmt(rep.parity_employment_share));
        rows.emplace_back("green_share", fmt(rep.green_share));
        rows.emplace_back("workweek_reduction_days", fmt(rep.workweek_reduction_days));
        rows.emplace_back("retirement_reduction_years", fmt(rep.retirement_reduction_years));
        return csv_report(rows);
    };

    auto run_ingest = [&]() -> std::string {
        std::string path = in_file_opt->count() > 0
                               ? in_file
                               : data_dir_or_default(in_data_dir) + "/table1_2005.csv";
        auto res = potdyn::ingest_file(path);
        if (in_out.format == "csv") {
            if (in_split_opt->count() > 0 || in_food_opt->count() > 0)
                throw usage_error("--split and --food-threshold reports need --format json");
            return potdyn::serialize_table(res.records);
        }
        ordered_json j;
        j["provenance"] = {{"input_file", path}, {"constants", exact_set_name()}};
        j["countries"] = res.records.size();
        j["totals"] = {{"energy_consumption_1e15btu", res.aggregates.total_consumption},
                       {"energy_production_1e15btu", res.aggregates.total_production},
                       {"population_1e3", res.aggregates.total_population},
                       {"working_1e3", res.aggregates.total_working}};
        ordered_json shares;
        for (std::size_t i = 0; i < potdyn::kSectorColumns.size(); ++i)
            shares[potdyn::kSectorColumns[i]] = res.aggregates.weighted_shares[i];
        j["weighted_shares_pct"] = shares;
        j["warnings"] = res.warnings;
        if (in_split_opt->count() > 0) {
            auto split = potdyn::energy_sector_split(res.aggregates, in_split);
            j["energy_sector_split"] = {{"energy_fraction_of_mining", in_split},
                                        {"n1_1e3", split.n1},
                                        {"n2_1e3", split.n2},
                                        {"n1_over_n2", split.n1_over_n2}};
        }
        if (in_food_opt->count() > 0) {
            auto groups = potdyn::food_sector_groups(res.records, in_food);
            auto group_json = [](const potdyn::FoodGroupStats& g) {
                return ordered_json{
                    {"count", g.count}, {"mean", g.mean}, {"min", g.min}, {"max", g.max}};
            };
            j["food_groups"] = {{"threshold_percent", groups.threshold_percent},
                                {"low", group_json(groups.low)},
                                {"high", group_json(groups.high)}};
        }
        return json_document(j);
    };

    auto run_budget = [&]() -> std::string {
        std::string dir = data_dir_or_default(bu_data_dir);
        auto tables = potdyn::budget_table(dir);
        if (bu_estimators) {
            const potdyn::Preset& p = potdyn::preset("appendix_budget");
            const auto& pay = std::get<potdyn::EnergyBudgetPayload>(p.payload);
            auto th = potdyn::thermohaline_power(pay.thermohaline);
            auto wu = potdyn::wind_upwelling_power(pay.wind);
            auto wd = potdyn::wind_dissipation_power(pay.wind);
            double hp = potdyn::hydropower(pay.hydro_osmotic);
            auto os = potdyn::osmotic_power(pay.hydro_osmotic);
            std::string scope = bu_scope_opt->count() > 0 ? bu_scope : "world";
            auto nuc = potdyn::nuclear_usable(potdyn::mix_from_tables(tables, scope));
            double biotic =
                potdyn::biotic_disturbance(bu_biota_tw, bu_land_fraction, bu_disturbed_fraction);
            if (bu_out.format == "json") {
                ordered_json j;
                j["provenance"] = {{"preset", p.id},
                                   {"data_dir", dir},
                                   {"constants", exact_set_name()}};
                j["thermohaline"] = {{"upwelling_velocity", th.upwelling_velocity},
                                     {"power", th.power}};
                j["wind_upwelling"] = {
                    {"f_e", wu.f_e}, {"power", wu.power}, {"w_from_precip", wu.w_from_precip}};
                j["wind_dissipation"] = {{"literal", wd.literal},
                                         {"printed_variant", wd.printed_variant},
                                         {"claimed_reference", wd.claimed_reference},
                                         {"literal_within_factor2", wd.literal_within_factor2},
                                         {"printed_within_factor2", wd.printed_within_factor2}};
                j["hydropower"] = hp;
                j["osmotic"] = {{"head", os.head}, {"power", os.power}};
                j["nuclear_usable"] = {{"scope", scope},
                                       {"nuclear_total", nuc.nuclear_total},
                                       {"usable_nuclear", nuc.usable_nuclear},
                                       {"usable_total", nuc.usable_total},
                                       {"share_of_usable", nuc.share_of_usable},
                                       {"share_of_total", nuc.share_of_total},
                                       {"waste_heat", nuc.waste_heat},
                                       {"implied_efficiency", nuc.implied_efficiency}};
                j["biotic_disturbance_tw"] = biotic;
                return json_document(j);
            }
            Rows rows;
            rows.emplace_back("thermohaline.upwelling_velocity", fmt(th.upwelling_velocity));
            rows.emplace_back("thermohaline.power", fmt(th.power));
            rows.emplace_back("wind_upwelling.f_e", fmt(wu.f_e));
            rows.emplace_back("wind_upwelling.power", fmt(wu.power));
            rows.emplace_back("wind_upwelling.w_from_precip", fmt(wu.w_from_precip));
            rows.emplace_back("wind_dissipation.literal", fmt(wd.literal));
            rows.emplace_back("wind_dissipation.printed_variant", fmt(wd.printed_variant));
            rows.emplace_back("wind_dissipation.claimed_reference", fmt(wd.claimed_reference));
            rows.emplace_back("wind_dissipation.literal_within_factor2",
                              wd.literal_within_factor2 ? "true" : "false");
            rows.emplace_back("wind_dissipation.printed_within_factor2",
                              wd.printed_within_factor2 ? "true" : "false");
            rows.emplace_back("hydropower", fmt(hp));
            rows.emplace_back("osmotic.head", fmt(os.head));
            rows.emplace_back("osmotic.power", fmt(os.power));
            rows.emplace_back("nuclear_usable.scope", scope);
            rows.emplace_back("nuclear_usable.nuclear_total", fmt(nuc.nuclear_total));
            rows.emplace_back("nuclear_usable.usable_nuclear", fmt(nuc.usable_nuclear));
            rows.emplace_back("nuclear_usable.usable_total", fmt(nuc.usable_total));
            rows.emplace_back("nuclear_usable.share_of_usable", fmt(nuc.share_of_usable));
            rows.emplace_back("nuclear_usable.share_of_total", fmt(nuc.share_of_total));
            rows.emplace_back("nuclear_usable.waste_heat", fmt(nuc.waste_heat));
            rows.emplace_back("nuclear_usable.implied_efficiency", fmt(nuc.implied_efficiency));
            rows.emplace_back("biotic_disturbance_tw", fmt(biotic));
            return csv_report(rows);
        }
        const std::vector<potdyn::BudgetRow>* rows = &tables.a1;
        if (bu_table == "a2") rows = &tables.a2;
        if (bu_table == "a3") rows = &tables.a3;
        if (bu_out.format == "csv") {
            std::string out = "quantity,value,unit,scope,source_tag\n";
            for (const auto& row : *rows) {
                if (bu_scope_opt->count() > 0 && row.scope != bu_scope) continue;
                out += row.quantity + "," + fmt(row.value) + "," + row.unit + "," + row.scope +
                       "," + row.source_tag + "\n";
            }
            return out;
        }
        ordered_json j;
        j["provenance"] = {{"data_dir", dir}, {"constants", exact_set_name()}};
        j["table"] = bu_table;
        ordered_json arr = ordered_json::array();
        for (const auto& row : *rows) {
            if (bu_scope_opt->count() > 0 && row.scope != bu_scope) continue;
            arr.push_back({{"quantity", row.quantity},
                           {"value", row.value},
                           {"unit", row.unit},
                           {"scope", row.scope},
                           {"source_tag", row.source_tag}});
        }
        j["rows"] = arr;
        return json_document(j);
    };

    auto run_convert = [&]() -> std::string {
        auto set = co_constants == "paper-approximate" ? potdyn::ConstantSet::PaperApproximate
                                                       : potdyn::ConstantSet::Exact;
        const auto& from_def = potdyn::unit_lookup(co_from, set);
        double result = potdyn::convert(co_value, co_from, co_to, set);
        if (co_out.format == "json") {
            ordered_json j;
            j["provenance"] = {{"constants", potdyn::constant_set_name(set)}};
            j["value"] = co_value;
            j["from"] = co_from;
            j["to"] = co_to;
            j["dimension"] = potdyn::dimension_name(from_def.dimension);
            j["result"] = result;
            return json_document(j);
        }
        Rows rows;
        rows.emplace_back("value", fmt(co_value));
        rows.emplace_back("from", co_from);
        rows.emplace_back("to", co_to);
        rows.emplace_back("dimension", potdyn::dimension_name(from_def.dimension));
        rows.emplace_back("result", fmt(result));
        return csv_report(rows);
    };

    auto run_preset_list = [&]() -> std::string {
        if (pl_out.format == "json") {
            ordered_json j;
            j["provenance"] = {{"source", "bundled preset registry"},
                               {"constants", exact_set_name()}};
            ordered_json arr = ordered_json::array();
            for (const auto& p : potdyn::presets())
                arr.push_back({{"id", p.id},
                               {"kind", potdyn::preset_kind_name(p.kind)},
                               {"title", p.title},
                               {"citation", p.citation},
                               {"notes", p.notes},
                               {"inconsistent", p.inconsistent}});
            j["presets"] = arr;
            return json_document(j);
        }
        // Titles and notes may contain commas; the csv view keeps comma-free fields.
        std::string out = "id,kind,inconsistent\n";
        for (const auto& p : potdyn::presets())
            out += p.id + "," + potdyn::preset_kind_name(p.kind) + "," +
                   (p.inconsistent ? "true" : "false") + "\n";
        return out;
    };

    auto run_emit = [&]() -> std::string {
        bool is_trajectory = em_curve == "trajectory";
        bool grid_given =
            em_start_opt->count() > 0 || em_stop_opt->count() > 0 || em_step_opt->count() > 0;
        bool trajectory_given = em_m0_opt->count() > 0 || em_dt_opt->count() > 0 ||
                                em_steps_opt->count() > 0 || em_sweep_opt->count() > 0;
        if (!is_trajectory) {
            if (trajectory_given)
                throw usage_error("--m0, --dt, --steps and --sweep apply only to --curve trajectory");
            if (em_start_opt->count() == 0 || em_stop_opt->count() == 0 ||
                em_step_opt->count() == 0)
                throw usage_error("--start, --stop and --step are required for potential and flux curves");
            auto kind = em_curve == "potential" ? potdyn::CurveKind::Potential
                                                : potdyn::CurveKind::Flux;
            auto series = potdyn::emit_curve(em_preset, kind, em_start, em_stop, em_step);
            if (em_out.format == "csv") {
                std::string out = "x,y,label\n";
                append_series_csv(out, series.x, series.y, series.label);
                return out;
            }
            ordered_json j;
            j["provenance"] = {{"preset", em_preset}, {"constants", exact_set_name()}};
            j["label"] = series.label;
            j["x_unit"] = series.x_unit;
            j["y_unit"] = series.y_unit;
            j["x"] = series.x;
            j["y"] = series.y;
            return json_document(j);
        }
        if (grid_given)
            throw usage_error("--start, --stop and --step apply only to potential and flux curves");
        if (em_dt_opt->count() == 0 || em_steps_opt->count() == 0)
            throw usage_error("--dt and --steps are required for trajectories");
        bool has_sweep = em_sweep_opt->count() > 0;
        if ((em_m0_opt->count() > 0) == has_sweep)
            throw usage_error("provide exactly one of --m0 or --sweep");

        const potdyn::Preset& p = potdyn::preset(em_preset);
        std::string y_unit;
        if (const auto* eco = std::get_if<potdyn::EcosystemPayload>(&p.payload))
            y_unit = eco->sys.stock_unit;
        else if (std::holds_alternative<potdyn::PricePayload>(p.payload))
            y_unit = "d_s units";
        else
            throw std::domain_error("preset '" + p.id + "' (" +
                                    potdyn::preset_kind_name(p.kind) +
                                    ") has no trajectories to emit");
        std::vector<double> starts =
            has_sweep ? sweep_grid(parse_sweep(em_sweep_text)) : std::vector<double>{em_m0};
        std::string single_label = p.id + " trajectory";  // the emitter's label rule

        if (em_out.format == "csv") {
            std::string out = "x,y,label\n";
            if (em_steps == 0) return out;  // empty trajectory: header only
            for (std::size_t i = 0; i < starts.size(); ++i) {
                auto series = potdyn::emit_trajectory(em_preset, starts[i], em_dt, em_steps);
                std::string label = has_sweep ? "m0=" + fmt(starts[i]) : series.label;
                append_series_csv(out, series.x, series.y, label);
            }
            return out;
        }
        ordered_json j;
        j["provenance"] = {{"preset", em_preset}, {"constants", exact_set_name()}};
        j["x_unit"] = "yr";
        j["y_unit"] = y_unit;
        j["dt"] = em_dt;
        j["steps"] = em_steps;
        auto entry = [&](double m0, const std::string& label) {
            ordered_json e;
            e["m0"] = m0;
            e["label"] = label;
            if (em_steps == 0) {
                e["x"] = ordered_json::array();
                e["y"] = ordered_json::array();
                return e;
            }
            auto series = potdyn::emit_trajectory(em_preset, m0, em_dt, em_steps);
            e["x"] = series.x;
            e["y"] = series.y;
            return e;
        };
        if (has_sweep) {
            ordered_json arr = ordered_json::array();
            for (double m0 : starts) arr.push_back(entry(m0, "m0=" + fmt(m0)));
            j["series"] = arr;
        } else {
            for (auto& [k, v] : entry(starts[0], single_label).items()) j[k] = v;
        }
        return json_document(j);
    };

    try {
        std::string doc;
        const OutFlags* out = nullptr;
        if (c_classify->parsed()) {
            doc = run_classify();
            out = &cl_out;
        } else if (c_potential->parsed()) {
            doc = run_eval(po_sys, po_out, po_at, true);
            out = &po_out;
        } else if (c_flux->parsed()) {
            doc = run_eval(fl_sys, fl_out, fl_at, false);
            out = &fl_out;
        } else if (c_simulate->parsed()) {
            doc = run_simulate();
            out = &sim_out;
        } else if (c_price->parsed()) {
            doc = run_price();
            out = &pr_out;
        } else if (c_calibrate->parsed()) {
            doc = run_calibrate();
            out = &ca_out;
        } else if (c_markup->parsed()) {
            doc = run_markup();
            out = &mk_out;
        } else if (c_three->parsed()) {
            doc = run_three_sector();
            out = &th_out;
        } else if (c_ingest->parsed()) {
            doc = run_ingest();
            out = &in_out;
        } else if (c_budget->parsed()) {
            doc = run_budget();
            out = &bu_out;
        } else if (c_convert->parsed()) {
            doc = run_convert();
            out = &co_out;
        } else if (c_presets->parsed()) {
            doc = run_preset_list();
            out = &pl_out;
        } else if (c_emit->parsed()) {
            doc = run_emit();
            out = &em_out;
        }
        write_document(doc, out ? out->path : std::string());
        return 0;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const potdyn::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const potdyn::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
