#pragma once

#include <string>
#include <vector>

#include "potdyn/io.hpp"

namespace potdyn {

struct ThermohalineInput {
    double sink_flux;        // F, m^3/s
    double upwelling_area;   // S, m^2
    double delta_t;          // K, warming of upwelled deep water
    double water_density;    // kg/m^3
    double heat_capacity;    // kJ/(kg K)
};

struct ThermohalineResult {
    double upwelling_velocity;  // F/S, m/s
    double power;               // rho c dT F, W
};

ThermohalineResult thermohaline_power(const ThermohalineInput& in);

struct WindCirculationInput {
    double beta;                 // compression coefficient
    double gamma;                // vapor content
    double air_density;          // kg/m^3
    double g;                    // m/s^2
    double w;                    // upwelling velocity used in the power, m/s
    double h_vapor;              // vapor scale height, m
    double surface_area;         // m^2
    double precipitation;        // mol/(m^2 s)
    double vapor_concentration;  // mol/m^3
    double eddy_viscosity;       // m^2/s
    double wind_speed;           // m/s
    double shear_scale;          // m
};

struct WindUpwellingResult {
    double f_e;            // beta gamma rho g, N/m^3
    double power;          // f_e w h S, W
    double w_from_precip;  // precipitation / vapor_concentration, m/s
};

WindUpwellingResult wind_upwelling_power(const WindCirculationInput& in);

struct WindDissipationResult {
    double literal;          // rho nu u^2 l^-2 S, from the friction-force form
    double printed_variant;  // rho u^2 l^-1 S, as the power expression reads
    double claimed_reference;  // W
    bool literal_within_factor2;
    bool printed_within_factor2;
};

// Both variants are returned; they disagree by nu/l and neither is silently
// preferred. The flags compare each against the claimed reference.
WindDissipationResult wind_dissipation_power(const WindCirculationInput& in,
                                             double claimed_reference = 1e15);

struct HydroOsmoticInput {
    double runoff;                // R, m^3/s
    double mean_height;           // H, m
    double osmotic_pressure;      // atm
    double water_column_per_atm;  // m/atm
};

// R rho g H with rho = 1e3 kg/m^3, g = 9.8 m/s^2.
double hydropower(const HydroOsmoticInput& in);

struct OsmoticResult {
    double head;   // m, pressure expressed as water column
    double power;  // R rho g head, W
};

OsmoticResult osmotic_power(const HydroOsmoticInput& in);

struct EnergyMix {
    double total;  // W
    double share_oil;
    double share_coal;
    double share_gas;
    double share_nuclear;
    double share_hydro;
    double share_other;
    double electric_total;  // W
    double electric_share_thermal;
    double electric_share_nuclear;
    double electric_share_hydro;
    double nuclear_usable_efficiency = 0.30;
};

// Share sets must each sum to 1 +/- 0.02 (source tables round).
void validate(const EnergyMix& mix);

struct NuclearUsableReport {
    double nuclear_total;       // W, primary
    double usable_nuclear;      // W, delivered as electricity
    double usable_total;        // W, total with nuclear counted at usable value
    double share_of_usable;     // usable_nuclear / usable_total
    double share_of_total;      // usable_nuclear / total
    double waste_heat;          // nuclear_total - usable_nuclear
    double implied_efficiency;  // usable_nuclear / nuclear_total
};

NuclearUsableReport nuclear_usable(const EnergyMix& mix);

double biotic_disturbance(double total_biota_power_tw, double land_fraction,
                          double disturbed_fraction);

// p_useful / p_total in (0, 1].
double efficiency(double p_useful, double p_total);

struct BudgetRow {
    std::string quantity;
    double value;
    std::string unit;
    std::string scope;
    std::string source_tag;
};

struct BudgetTable {
    std::vector<BudgetRow> a1;  // surface energy budget
    std::vector<BudgetRow> a2;  // consumption mix per scope
    std::vector<BudgetRow> a3;  // electricity mix per scope
};

std::vector<BudgetRow> load_budget_rows(const std::string& path);

// Loads the three bundled reference tables from data_dir.
BudgetTable budget_table(const std::string& data_dir);
BudgetTable budget_table();

// Assembles the mix for one scope (e.g. "world", "france") from the tables.
EnergyMix mix_from_tables(const BudgetTable& tables, const std::string& scope);

}  // namespace potdyn
