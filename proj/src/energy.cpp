#include "potdyn/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace potdyn {

static constexpr double kWaterDensity = 1e3;  // kg/m^3
static constexpr double kGravity = 9.8;       // m/s^2

static void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(field) +
                                " must be strictly positive and finite (got " +
                                std::to_string(v) + ")");
    }
}

static void require_nonnegative(double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(field) + " must be >= 0 and finite (got " +
                                std::to_string(v) + ")");
    }
}

ThermohalineResult thermohaline_power(const ThermohalineInput& in) {
    require_positive(in.sink_flux, "sink_flux");
    require_positive(in.upwelling_area, "upwelling_area");
    require_nonnegative(in.delta_t, "delta_t");
    require_positive(in.water_density, "water_density");
    require_positive(in.heat_capacity, "heat_capacity");
    ThermohalineResult res;
    res.upwelling_velocity = in.sink_flux / in.upwelling_area;
    res.power = in.water_density * (in.heat_capacity * 1e3) * in.delta_t * in.sink_flux;
    return res;
}

static void validate_wind(const WindCirculationInput& in) {
    require_positive(in.beta, "beta");
    require_nonnegative(in.gamma, "gamma");
    require_positive(in.air_density, "air_density");
    require_positive(in.g, "g");
    require_positive(in.w, "w");
    require_positive(in.h_vapor, "h_vapor");
    require_positive(in.surface_area, "surface_area");
    require_positive(in.precipitation, "precipitation");
    require_positive(in.vapor_concentration, "vapor_concentration");
    require_positive(in.eddy_viscosity, "eddy_viscosity");
    require_nonnegative(in.wind_speed, "wind_speed");
    require_positive(in.shear_scale, "shear_scale");
}

WindUpwellingResult wind_upwelling_power(const WindCirculationInput& in) {
    validate_wind(in);
    WindUpwellingResult res;
    res.f_e = in.beta * in.gamma * in.air_density * in.g;
    res.power = res.f_e * in.w * in.h_vapor * in.surface_area;
    res.w_from_precip = in.precipitation / in.vapor_concentration;
    return res;
}

static bool within_factor2(double value, double reference) {
    if (value <= 0.0) return false;
    double ratio = value / reference;
    return ratio >= 0.5 && ratio <= 2.0;
}

WindDissipationResult wind_dissipation_power(const WindCirculationInput& in,
                                             double claimed_reference) {
    validate_wind(in);
    require_positive(claimed_reference, "claimed_reference");
    WindDissipationResult res;
    double u2s = in.air_density * in.wind_speed * in.wind_speed * in.surface_area;
    res.literal = u2s * in.eddy_viscosity / (in.shear_scale * in.shear_scale);
    res.printed_variant = u2s / in.shear_scale;
    res.claimed_reference = claimed_reference;
    res.literal_within_factor2 = within_factor2(res.literal, claimed_reference);
    res.printed_within_factor2 = within_factor2(res.printed_variant, claimed_reference);
    return res;
}

static void validate_hydro(const HydroOsmoticInput& in) {
    require_positive(in.runoff, "runoff");
    require_nonnegative(in.mean_height, "mean_height");
    require_nonnegative(in.osmotic_pressure, "osmotic_pressure");
    require_positive(in.water_column_per_atm, "water_column_per_atm");
}

double hydropower(const HydroOsmoticInput& in) {
    validate_hydro(in);
    return in.runoff * kWaterDensity * kGravity * in.mean_height;
}

OsmoticResult osmotic_power(const HydroOsmoticInput& in) {
    validate_hydro(in);
    OsmoticResult res;
    res.head = in.osmotic_pressure * in.water_column_per_atm;
    res.power = in.runoff * kWaterDensity * kGravity * res.head;
    return res;
}

static void check_share_sum(double sum, const char* which) {
    // Slack keeps a sum that lands exactly on the band edge (e.g. 1.02 built
    // from percent/100 terms) from being rejected by accumulated rounding.
    if (std::abs(sum - 1.0) > 0.02 + 1e-9)
        throw std::domain_error(std::string(which) + " shares sum to " +
                                std::to_string(sum) + ", outside 1 +/- 0.02");
}

void validate(const EnergyMix& mix) {
    require_positive(mix.total, "total");
    require_positive(mix.electric_total, "electric_total");
    for (double s : {mix.share_oil, mix.share_coal, mix.share_gas, mix.share_nuclear,
                     mix.share_hydro, mix.share_other, mix.electric_share_thermal,
                     mix.electric_share_nuclear, mix.electric_share_hydro}) {
        if (!(s >= 0.0 && s <= 1.0))
            throw std::domain_error("shares must lie in [0, 1] (got " + std::to_string(s) + ")");
    }
    check_share_sum(mix.share_oil + mix.share_coal + mix.share_gas + mix.share_nuclear +
                        mix.share_hydro + mix.share_other,
                    "consumption");
    check_share_sum(mix.electric_share_thermal + mix.electric_share_nuclear +
                        mix.electric_share_hydro,
                    "electricity");
    if (!(mix.nuclear_usable_efficiency > 0.0 && mix.nuclear_usable_efficiency <= 1.0))
        throw std::domain_error("nuclear_usable_efficiency must be in (0, 1]");
}

NuclearUsableReport nuclear_usable(const EnergyMix& mix) {
    validate(mix);
    NuclearUsableReport rep;
    rep.nuclear_total = mix.total * mix.share_nuclear;
    rep.usable_nuclear = mix.electric_total * mix.electric_share_nuclear;
    rep.usable_total = mix.total - rep.nuclear_total + rep.usable_nuclear;
    rep.share_of_usable = rep.usable_nuclear / rep.usable_total;
    rep.share_of_total = rep.usable_nuclear / mix.total;
    rep.waste_heat = rep.nuclear_total - rep.usable_nuclear;
    rep.implied_efficiency =
        rep.nuclear_total > 0.0 ? rep.usable_nuclear / rep.nuclear_total : 0.0;
    return rep;
}

double biotic_disturbance(double total_biota_power_tw, double land_fraction,
                          double disturbed_fraction) {
    require_positive(total_biota_power_tw, "total_biota_power_tw");
    if (!(land_fraction >= 0.0 && land_fraction <= 1.0))
        throw std::domain_error("land_fraction must be in [0, 1]");
    if (!(disturbed_fraction >= 0.0 && disturbed_fraction <= 1.0))
        throw std::domain_error("disturbed_fraction must be in [0, 1]");
    return total_biota_power_tw * land_fraction * disturbed_fraction;
}

double efficiency(double p_useful, double p_total) {
    require_positive(p_useful, "p_useful");
    require_positive(p_total, "p_total");
    if (p_useful > p_total)
        throw std::domain_error("p_useful must be <= p_total (got " +
                                std::to_string(p_useful) + " > " + std::to_string(p_total) +
                                ")");
    return p_useful / p_total;
}

std::vector<BudgetRow> load_budget_rows(const std::string& path) {
    auto table = read_csv(path);
    const std::vector<std::string> schema = {"quantity", "value", "unit", "scope",
                                             "source_tag"};
    if (table.header != schema)
        throw parse_error(path + ": header does not match quantity,value,unit,scope,source_tag",
                          1);
    std::vector<BudgetRow> rows;
    rows.reserve(table.rows.size());
    std::size_t row_index = 1;
    for (const auto& fields : table.rows) {
        ++row_index;
        BudgetRow row;
        row.quantity = fields[0];
        row.value = parse_field(fields[1], row_index, "value");
        row.unit = fields[2];
        row.scope = fields[3];
        row.source_tag = fields[4];
        rows.push_back(std::move(row));
    }
    return rows;
}

BudgetTable budget_table(const std::string& data_dir) {
    BudgetTable tables;
    tables.a1 = load_budget_rows(data_dir + "/tableA1.csv");
    tables.a2 = load_budget_rows(data_dir + "/tableA2.csv");
    tables.a3 = load_budget_rows(data_dir + "/tableA3.csv");
    return tables;
}

BudgetTable budget_table() { return budget_table(default_data_dir()); }

static double scoped_value(const std::vector<BudgetRow>& rows, const std::string& quantity,
                           const std::string& scope) {
    for (const auto& row : rows) {
        if (row.quantity == quantity && row.scope == scope) return row.value;
    }
    throw std::domain_error("no table row for quantity '" + quantity + "' in scope '" +
                            scope + "'");
}

EnergyMix mix_from_tables(const BudgetTable& tables, const std::string& scope) {
    EnergyMix mix;
    mix.total = scoped_value(tables.a2, "total_consumption", scope) * 1e12;
    mix.share_oil = scoped_value(tables.a2, "share_oil", scope) / 100.0;
    mix.share_coal = scoped_value(tables.a2, "share_coal", scope) / 100.0;
    mix.share_gas = scoped_value(tables.a2, "share_gas", scope) / 100.0;
    mix.share_nuclear = scoped_value(tables.a2, "share_nuclear", scope) / 100.0;
    mix.share_hydro = scoped_value(tables.a2, "share_hydro", scope) / 100.0;
    mix.share_other = scoped_value(tables.a2, "share_other", scope) / 100.0;
    mix.electric_total = scoped_value(tables.a3, "electric_total", scope) * 1e12;
    mix.electric_share_thermal =
        scoped_value(tables.a3, "electric_share_thermal", scope) / 100.0;
    mix.electric_share_nuclear =
        scoped_value(tables.a3, "electric_share_nuclear", scope) / 100.0;
    mix.electric_share_hydro = scoped_value(tables.a3, "electric_share_hydro", scope) / 100.0;
    validate(mix);
    return mix;
}

}  // namespace potdyn
