#include "potdyn/units.hpp"

#include <cmath>
#include <stdexcept>

namespace potdyn {

// Julian year; flux conversions are stable against the <0.5% calendar ambiguity.
static constexpr double kSecondsPerYear = 3.1557e7;
static constexpr double kJoulePerBtu = 1055.0;
static constexpr double kJoulePerBarrel = 5.5e9;

const char* constant_set_name(ConstantSet set) {
    return set == ConstantSet::Exact ? "exact" : "paper-approximate";
}

const char* dimension_name(Dimension dim) {
    switch (dim) {
        case Dimension::Energy: return "Energy";
        case Dimension::Power: return "Power";
        case Dimension::Time: return "Time";
    }
    return "?";
}

static std::vector<UnitDef> build_exact() {
    return {
        {"J", Dimension::Energy, 1.0, Provenance::Exact, "SI base"},
        {"kJ", Dimension::Energy, 1e3, Provenance::Exact, "SI prefix"},
        {"MJ", Dimension::Energy, 1e6, Provenance::Exact, "SI prefix"},
        {"GJ", Dimension::Energy, 1e9, Provenance::Exact, "SI prefix"},
        {"kWh", Dimension::Energy, 3.6e6, Provenance::Exact, "3600 s at 1 kW"},
        {"btu", Dimension::Energy, kJoulePerBtu, Provenance::Exact,
         "1 btu = 1055 J"},
        {"barrel", Dimension::Energy, kJoulePerBarrel, Provenance::Exact,
         "oil energy content 5.5 GJ per barrel"},
        {"W", Dimension::Power, 1.0, Provenance::Exact, "SI base"},
        {"kW", Dimension::Power, 1e3, Provenance::Exact, "SI prefix"},
        {"MW", Dimension::Power, 1e6, Provenance::Exact, "SI prefix"},
        {"GW", Dimension::Power, 1e9, Provenance::Exact, "SI prefix"},
        {"TW", Dimension::Power, 1e12, Provenance::Exact, "SI prefix"},
        {"btu_per_year", Dimension::Power, kJoulePerBtu / kSecondsPerYear,
         Provenance::Exact, "1055 J per Julian year"},
        {"barrel_per_day", Dimension::Power, kJoulePerBarrel / 86400.0,
         Provenance::Exact, "5.5 GJ per 86400 s"},
        {"kWh_per_year", Dimension::Power, 3.6e6 / kSecondsPerYear,
         Provenance::Exact, "3.6 MJ per Julian year"},
        {"s", Dimension::Time, 1.0, Provenance::Exact, "SI base"},
        {"hour", Dimension::Time, 3600.0, Provenance::Exact, "SI accepted"},
        {"day", Dimension::Time, 86400.0, Provenance::Exact, "SI accepted"},
        {"year", Dimension::Time, kSecondsPerYear, Provenance::Exact,
         "Julian year, 365.25 days"},
    };
}

static std::vector<UnitDef> build_approximate() {
    auto reg = build_exact();
    auto override_unit = [&reg](const char* name, double to_si, const char* citation) {
        for (auto& def : reg) {
            if (def.name == name) {
                def.to_si = to_si;
                def.provenance = Provenance::PaperApproximate;
                def.citation = citation;
                return;
            }
        }
        throw std::logic_error(std::string("override of unregistered unit ") + name);
    };
    override_unit("btu", 1e3, "rounded: 1 btu ~ 1 kJ");
    override_unit("btu_per_year", 3.3e-5, "rounded: 1e5 btu/year ~ 3.3 W");
    override_unit("barrel_per_day", 6e4, "rounded: 1 barrel/day ~ 60 kW");
    override_unit("kWh_per_year", 0.1, "rounded: 1 kWh/year ~ 0.1 W");
    // g_oil exists only here; the exact set has no authoritative value for it.
    reg.push_back({"g_oil", Dimension::Energy, 5e4, Provenance::PaperApproximate,
                   "rounded: 1 g of oil ~ 50 kJ"});
    return reg;
}

const std::vector<UnitDef>& unit_registry(ConstantSet set) {
    static const std::vector<UnitDef> exact = build_exact();
    static const std::vector<UnitDef> approx = build_approximate();
    return set == ConstantSet::Exact ? exact : approx;
}

const UnitDef& unit_lookup(const std::string& name, ConstantSet set) {
    const auto& reg = unit_registry(set);
    for (const auto& def : reg) {
        if (def.name == name) return def;
    }
    std::string known;
    for (const auto& def : reg) {
        if (!known.empty()) known += ", ";
        known += def.name;
    }
    throw std::domain_error("unknown unit '" + name + "' in " +
                            constant_set_name(set) + " set; registry: " + known);
}

double convert(double value, const std::string& from_unit, const std::string& to_unit,
               ConstantSet set) {
    if (!std::isfinite(value))
        throw std::domain_error("value must be finite");
    const auto& from = unit_lookup(from_unit, set);
    const auto& to = unit_lookup(to_unit, set);
    if (from.dimension != to.dimension) {
        throw std::domain_error(std::string("dimension mismatch: ") + from.name + " is " +
                                dimension_name(from.dimension) + ", " + to.name + " is " +
                                dimension_name(to.dimension));
    }
    // grouped so a same-unit conversion multiplies by exactly 1.0
    return value * (from.to_si / to.to_si);
}

}  // namespace potdyn
