#include "potdyn/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace potdyn {

const char* preset_kind_name(PresetKind kind) {
    switch (kind) {
        case PresetKind::Ecosystem: return "Ecosystem";
        case PresetKind::Price: return "Price";
        case PresetKind::Economy: return "Economy";
        case PresetKind::EnergyBudget: return "EnergyBudget";
    }
    return "?";
}

static std::vector<Preset> build_presets() {
    std::vector<Preset> all;

    {
        Preset p;
        p.id = "fig1a";
        p.kind = PresetKind::Ecosystem;
        p.title = "Natural forest vs unstable grassland";
        p.citation = "Whittaker and Likens 1975";
        p.notes = "legend rounds the stationary stocks to 17 and 150; "
                  "exact arithmetic gives 16 and 152";
        p.payload = EcosystemPayload{{8.0, 4.0, 4.0, 19.0, "t C/ha"}};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "fig1b_forestry";
        p.kind = PresetKind::Ecosystem;
        p.title = "Forest plantation at the stability boundary";
        p.citation = "Whittaker and Likens 1975";
        p.notes = "alpha = 1 exactly; stocks print as 70, exact arithmetic gives 72";
        p.payload = EcosystemPayload{{8.0, 8.0, 9.0, 9.0, "t C/ha"}};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "fig1b_agriculture";
        p.kind = PresetKind::Ecosystem;
        p.title = "Agriculture at the stability boundary";
        p.citation = "Whittaker and Likens 1975";
        p.notes = "alpha = 1 exactly; stationary stocks 4";
        p.payload = EcosystemPayload{{4.0, 4.0, 1.0, 1.0, "t C/ha"}};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "fig1c";
        p.kind = PresetKind::Ecosystem;
        p.title = "Overexploited ecosystem, no stationary state";
        p.citation = "Whittaker and Likens 1975";
        p.notes = "rates back-derived from the printed stocks m_u = 16, m_s = 8 with "
                  "turnover times 2 and 2; the legend states both 'P_c^- = 5' and "
                  "'P_c^- = 2P_a^- = 8', which cannot both hold; the stored consumption "
                  "rate is 8 and the contradiction is recorded, not reconciled";
        p.inconsistent = true;
        p.payload = EcosystemPayload{{4.0, 8.0, 2.0, 2.0, "t C/ha"}};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "fig2_relative";
        p.kind = PresetKind::Price;
        p.title = "Relative market price landscape";
        p.citation = "2005 global market estimates";
        p.notes = "defined only as price ratios d_u = 4 d_s with breakdown cap at "
                  "40 d_s; turnover times normalized to 1 year";
        p.payload = PricePayload{
            build_price_system({4.0, 1.0, 1.0, 1.0, "goods"}, 4.0, 40.0)};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "sec5_oil_markup";
        p.kind = PresetKind::Economy;
        p.title = "Oil sector markup, 2005 estimates";
        p.citation = "2005 global economy estimates";
        p.notes = "workforce split n1 = 3e9, n2 = 1e7 carries the n1/n2 = 300 estimate; "
                  "revenue 5e12 USD/yr rounds the 4.7e11 GJ/yr at 10 USD/GJ flow";
        p.payload = MarkupPayload{{45e12, 3e9, 1e7, 5e12}, 4.7e11, 10.0};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "sec6_three_sector";
        p.kind = PresetKind::Economy;
        p.title = "Three-sector economy with energy markup";
        p.citation = "2005 global economy estimates";
        p.notes = "energy revenue 10% of GDP earned by 0.1% of the workforce at "
                  "markup 100";
        p.payload = ThreeSectorPayload{{45e12, 0.10, 0.001, 100.0}};
        all.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "appendix_budget";
        p.kind = PresetKind::EnergyBudget;
        p.title = "Global energy-flux estimators";
        p.citation = "Ramanathan 1987; Palmen and Newton 1969; EIA statistics 2005";
        p.notes = "thermohaline sink flux 3e7 m^3/s keeps the printed conversion of "
                  "1e15 m^3/yr; wind power uses the printed w = 1 mm/s, while "
                  "precipitation/vapor gives 2.4 mm/s";
        EnergyBudgetPayload payload;
        payload.thermohaline = {3e7, 3.6e14, 11.0, 1e3, 4.2};
        payload.wind = {3.0, 0.02, 1.0, 9.8, 1e-3, 2400.0, 5e14, 1.7e-3, 0.7, 3.0, 7.0, 100.0};
        payload.hydro_osmotic = {1.5e6, 200.0, 28.0, 10.0};
        p.payload = std::move(payload);
        all.push_back(std::move(p));
    }
    return all;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

std::vector<std::string> preset_ids() {
    std::vector<std::string> ids;
    for (const auto& p : presets()) ids.push_back(p.id);
    return ids;
}

const Preset& preset(const std::string& id) {
    for (const auto& p : presets()) {
        if (p.id == id) return p;
    }
    std::string known;
    for (const auto& p : presets()) {
        if (!known.empty()) known += ", ";
        known += p.id;
    }
    throw std::domain_error("unknown preset '" + id + "'; available: " + known);
}

static std::size_t grid_size(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::domain_error("step must be > 0");
    if (stop < start) throw std::domain_error("stop must be >= start");
    // Rounding guard keeps 0..200 step 1 at exactly 201 points.
    return static_cast<std::size_t>(std::floor((stop - start) / step * (1.0 + 1e-12))) + 1;
}

CurveSeries emit_curve(const std::string& preset_id, CurveKind kind, double start,
                       double stop, double step) {
    const Preset& p = preset(preset_id);
    std::size_t n = grid_size(start, stop, step);
    CurveSeries series;
    series.x.reserve(n);
    series.y.reserve(n);

    if (const auto* eco = std::get_if<EcosystemPayload>(&p.payload)) {
        if (start < 0.0)
            throw std::domain_error("grid start must be >= 0 for stock curves");
        const auto& sys = eco->sys;
        series.x_unit = sys.stock_unit;
        if (kind == CurveKind::Potential) {
            series.y_unit = "(" + sys.stock_unit + ")^2/yr";
            series.label = p.id + " potential";
            for (std::size_t i = 0; i < n; ++i) {
                double x = start + static_cast<double>(i) * step;
                series.x.push_back(x);
                series.y.push_back(potential(x, sys));
            }
        } else {
            series.y_unit = sys.stock_unit + "/yr";
            series.label = p.id + " flux";
            for (std::size_t i = 0; i < n; ++i) {
                double x = start + static_cast<double>(i) * step;
                series.x.push_back(x);
                series.y.push_back(flux(x, sys));
            }
        }
        return series;
    }
    if (const auto* price = std::get_if<PricePayload>(&p.payload)) {
        if (!(start > 0.0))
            throw std::domain_error("grid start must be > 0 for price curves");
        const auto& psys = price->psys;
        series.x_unit = "d_s units";
        if (kind == CurveKind::Potential) {
            series.y_unit = "(d_s units)^2/yr";
            series.label = p.id + " potential";
            for (std::size_t i = 0; i < n; ++i) {
                double x = start + static_cast<double>(i) * step;
                series.x.push_back(x);
                series.y.push_back(price_potential(x, psys));
            }
        } else {
            series.y_unit = "d_s units/yr";
            series.label = p.id + " flux";
            for (std::size_t i = 0; i < n; ++i) {
                double x = start + static_cast<double>(i) * step;
                series.x.push_back(x);
                series.y.push_back(price_flux(x, psys).value);
            }
        }
        return series;
    }
    throw std::domain_error("preset '" + p.id + "' (" + preset_kind_name(p.kind) +
                            ") has no curves to emit");
}

CurveSeries emit_trajectory(const std::string& preset_id, double m0, double dt,
                            long long n_steps) {
    const Preset& p = preset(preset_id);
    CurveSeries series;
    series.x_unit = "yr";
    series.label = p.id + " trajectory";

    Trajectory traj;
    if (const auto* eco = std::get_if<EcosystemPayload>(&p.payload)) {
        traj = integrate(eco->sys, m0, dt, n_steps);
        series.y_unit = eco->sys.stock_unit;
    } else if (const auto* price = std::get_if<PricePayload>(&p.payload)) {
        traj = integrate_price(price->psys, m0, dt, n_steps);
        series.y_unit = "d_s units";
    } else {
        throw std::domain_error("preset '" + p.id + "' (" + preset_kind_name(p.kind) +
                                ") has no trajectories to emit");
    }
    series.x = std::move(traj.t);
    series.y = std::move(traj.m);
    return series;
}

}  // namespace potdyn
