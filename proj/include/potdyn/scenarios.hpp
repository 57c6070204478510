#pragma once

#include <string>
#include <variant>
#include <vector>

#include "potdyn/dynamics.hpp"
#include "potdyn/econ.hpp"
#include "potdyn/energy.hpp"
#include "potdyn/price.hpp"

namespace potdyn {

enum class PresetKind { Ecosystem, Price, Economy, EnergyBudget };

const char* preset_kind_name(PresetKind kind);

struct EcosystemPayload {
    PiecewiseSystem sys;
};

struct PricePayload {
    PriceSystem psys;
};

struct MarkupPayload {
    TwoSectorEconomy econ;
    double consumption_gj;  // energy flow behind sector2_revenue
    double unit_price;      // currency per GJ
};

struct ThreeSectorPayload {
    ThreeSectorEconomy econ;
};

struct EnergyBudgetPayload {
    ThermohalineInput thermohaline;
    WindCirculationInput wind;
    HydroOsmoticInput hydro_osmotic;
};

struct Preset {
    std::string id;
    PresetKind kind;
    std::string title;
    std::string citation;
    std::string notes;  // records any source inconsistency verbatim
    bool inconsistent = false;
    std::variant<EcosystemPayload, PricePayload, MarkupPayload, ThreeSectorPayload,
                 EnergyBudgetPayload>
        payload;
};

const std::vector<Preset>& presets();
std::vector<std::string> preset_ids();

// Unknown id raises a domain error listing the available ids.
const Preset& preset(const std::string& id);

struct CurveSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string x_unit;
    std::string y_unit;
    std::string label;
};

enum class CurveKind { Potential, Flux };

// Samples x_i = start + i*step through the owning module; this layer adds
// no arithmetic. Grids that would enter a domain-error region are rejected
// before sampling (price grids need start > 0).
CurveSeries emit_curve(const std::string& preset_id, CurveKind kind, double start,
                       double stop, double step);

// Trajectory emission; x holds sample times. Price presets integrate in
// price space from m0 as the starting price.
CurveSeries emit_trajectory(const std::string& preset_id, double m0, double dt,
                            long long n_steps);

}  // namespace potdyn
