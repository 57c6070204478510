#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "potdyn/energy.hpp"
#include "potdyn/units.hpp"

using namespace potdyn;

namespace {

const ThermohalineInput kOcean{3e7, 3.6e14, 11.0, 1e3, 4.2};
const WindCirculationInput kAtmosphere{3.0, 0.02, 1.0, 9.8, 1e-3, 2400.0,
                                       5e14,  1.7e-3, 0.7, 3.0, 7.0, 100.0};
const HydroOsmoticInput kRivers{1.5e6, 200.0, 28.0, 10.0};

double table_value(const std::vector<BudgetRow>& rows, const std::string& quantity,
                   const std::string& scope) {
    for (const auto& row : rows) {
        if (row.quantity == quantity && row.scope == scope) return row.value;
    }
    FAIL(("missing table row " + quantity + " / " + scope));
    return 0.0;
}

bool factor2(double value, double reference) {
    double ratio = value / reference;
    return ratio >= 0.5 && ratio <= 2.0;
}

}  // namespace

TEST_CASE("thermohaline_power") {
    auto res = thermohaline_power(kOcean);
    CHECK(res.power == 1.386e15);
    CHECK(res.upwelling_velocity == doctest::Approx(8.333333333333334e-08).epsilon(1e-14));
    // per-year velocity lands near 2.6, not the rounded 2 in circulation
    CHECK(res.upwelling_velocity * convert(1.0, "year", "s") ==
          doctest::Approx(2.62975).epsilon(1e-12));

    auto cold = kOcean;
    cold.delta_t = 0.0;
    CHECK(thermohaline_power(cold).power == 0.0);
    CHECK(thermohaline_power(cold).upwelling_velocity == res.upwelling_velocity);

    auto bad = kOcean;
    bad.sink_flux = 0.0;
    CHECK_THROWS_WITH_AS(thermohaline_power(bad), doctest::Contains("sink_flux"),
                         std::domain_error);
}

TEST_CASE("wind_upwelling_power") {
    auto res = wind_upwelling_power(kAtmosphere);
    CHECK(res.f_e == doctest::Approx(0.588).epsilon(1e-14));
    CHECK(res.power == doctest::Approx(7.056e14).epsilon(1e-14));
    // division gives 2.4 mm/s where the power estimate assumed 1 mm/s
    CHECK(res.w_from_precip == doctest::Approx(0.0024285714285714284).epsilon(1e-14));

    auto dry = kAtmosphere;
    dry.gamma = 0.0;
    auto zero = wind_upwelling_power(dry);
    CHECK(zero.f_e == 0.0);
    CHECK(zero.power == 0.0);
    CHECK(zero.w_from_precip == res.w_from_precip);

    auto bad = kAtmosphere;
    bad.h_vapor = -1.0;
    CHECK_THROWS_WITH_AS(wind_upwelling_power(bad), doctest::Contains("h_vapor"),
                         std::domain_error);
}

TEST_CASE("wind_dissipation_power returns both variants") {
    auto res = wind_dissipation_power(kAtmosphere);
    CHECK(res.literal == doctest::Approx(7.35e12).epsilon(1e-14));
    CHECK(res.printed_variant == doctest::Approx(2.45e14).epsilon(1e-14));
    CHECK(res.claimed_reference == 1e15);
    // neither formula reaches the claimed reference magnitude
    CHECK(res.literal_within_factor2 == false);
    CHECK(res.printed_within_factor2 == false);

    auto rescaled = wind_dissipation_power(kAtmosphere, 7e12);
    CHECK(rescaled.literal_within_factor2 == true);
    CHECK(rescaled.printed_within_factor2 == false);

    auto calm = kAtmosphere;
    calm.wind_speed = 0.0;
    auto zero = wind_dissipation_power(calm);
    CHECK(zero.literal == 0.0);
    CHECK(zero.printed_variant == 0.0);
    CHECK(zero.literal_within_factor2 == false);

    CHECK_THROWS_AS(wind_dissipation_power(kAtmosphere, 0.0), std::domain_error);
}

TEST_CASE("hydropower and osmotic_power") {
    CHECK(hydropower(kRivers) == doctest::Approx(2.94e12).epsilon(1e-13));
    CHECK(0.2 * hydropower(kRivers) == doctest::Approx(5.88e11).epsilon(1e-13));

    auto flat = kRivers;
    flat.mean_height = 0.0;
    CHECK(hydropower(flat) == 0.0);

    auto osm = osmotic_power(kRivers);
    CHECK(osm.head == 280.0);
    CHECK(osm.power == doctest::Approx(4.116e12).epsilon(1e-13));
    // the osmotic route carries the same order of magnitude as hydropower
    CHECK(factor2(osm.power, hydropower(kRivers)));

    auto fresh = kRivers;
    fresh.osmotic_pressure = 0.0;
    CHECK(osmotic_power(fresh).head == 0.0);
    CHECK(osmotic_power(fresh).power == 0.0);

    auto bad = kRivers;
    bad.runoff = 0.0;
    CHECK_THROWS_WITH_AS(hydropower(bad), doctest::Contains("runoff"), std::domain_error);
}

TEST_CASE("estimators are linear in each linear factor") {
    auto base_t = thermohaline_power(kOcean).power;
    auto warmer = kOcean;
    warmer.delta_t *= 2.0;
    CHECK(thermohaline_power(warmer).power == 2.0 * base_t);
    auto denser = kOcean;
    denser.water_density *= 2.0;
    CHECK(thermohaline_power(denser).power == 2.0 * base_t);

    auto base_w = wind_upwelling_power(kAtmosphere).power;
    for (auto mutate : {+[](WindCirculationInput& in) { in.beta *= 2.0; },
                        +[](WindCirculationInput& in) { in.gamma *= 2.0; },
                        +[](WindCirculationInput& in) { in.w *= 2.0; },
                        +[](WindCirculationInput& in) { in.h_vapor *= 2.0; },
                        +[](WindCirculationInput& in) { in.surface_area *= 2.0; }}) {
        auto doubled = kAtmosphere;
        mutate(doubled);
        CHECK(wind_upwelling_power(doubled).power == 2.0 * base_w);
    }

    auto gusty = kAtmosphere;
    gusty.wind_speed *= 2.0;
    auto quad = wind_dissipation_power(gusty);
    auto base_d = wind_dissipation_power(kAtmosphere);
    CHECK(quad.literal == 4.0 * base_d.literal);
    CHECK(quad.printed_variant == 4.0 * base_d.printed_variant);
    auto deeper = kAtmosphere;
    deeper.shear_scale *= 2.0;
    auto shallow = wind_dissipation_power(deeper);
    CHECK(shallow.literal == base_d.literal / 4.0);
    CHECK(shallow.printed_variant == base_d.printed_variant / 2.0);

    auto wetter = kRivers;
    wetter.runoff *= 2.0;
    CHECK(hydropower(wetter) == 2.0 * hydropower(kRivers));
    CHECK(osmotic_power(wetter).power == 2.0 * osmotic_power(kRivers).power);
}

TEST_CASE("convert: exact constant set") {
    CHECK(convert(1e5, "btu_per_year", "W") ==
          doctest::Approx(3.3431568273283263).epsilon(1e-14));
    CHECK(convert(1.0, "barrel_per_day", "W") ==
          doctest::Approx(63657.40740740741).epsilon(1e-14));
    CHECK(convert(1.0, "barrel_per_day", "kW") ==
          doctest::Approx(63.65740740740741).epsilon(1e-14));
    CHECK(convert(1.0, "kWh_per_year", "W") ==
          doctest::Approx(0.11407928510314669).epsilon(1e-14));
    CHECK(convert(1.0, "btu", "J") == 1055.0);
    CHECK(convert(1.0, "barrel", "GJ") == 5.5);
    CHECK(convert(1.0, "year", "s") == 3.1557e7);
    CHECK(convert(1.0, "day", "s") == 86400.0);
    CHECK(convert(2.0, "kWh", "MJ") == 7.2);
    CHECK(convert(42.37, "GW", "GW") == 42.37);
}

TEST_CASE("convert: paper-approximate constant set") {
    auto approx = ConstantSet::PaperApproximate;
    CHECK(convert(1.0, "btu", "J", approx) == 1000.0);
    CHECK(convert(1e5, "btu_per_year", "W", approx) == doctest::Approx(3.3).epsilon(1e-14));
    CHECK(convert(1.0, "barrel_per_day", "kW", approx) == 60.0);
    CHECK(convert(1.0, "kWh_per_year", "W", approx) == 0.1);
    CHECK(convert(1.0, "g_oil", "kJ", approx) == 50.0);
    // SI prefixes stay exact inside the approximate set
    CHECK(convert(1.0, "TW", "W", approx) == 1e12);
}

TEST_CASE("convert: round trips and errors") {
    for (auto set : {ConstantSet::Exact, ConstantSet::PaperApproximate}) {
        const auto& reg = unit_registry(set);
        for (const auto& a : reg) {
            CHECK(!a.citation.empty());
            for (const auto& b : reg) {
                if (a.dimension != b.dimension) continue;
                double there = convert(1.75, a.name, b.name, set);
                double back = convert(there, b.name, a.name, set);
                CHECK(std::abs(back - 1.75) <= 1e-12 * 1.75);
            }
        }
    }

    CHECK_THROWS_WITH_AS(convert(1.0, "parsec", "W"),
                         doctest::Contains("unknown unit 'parsec'"), std::domain_error);
    CHECK_THROWS_WITH_AS(convert(1.0, "parsec", "W"),
                         doctest::Contains("registry: J, kJ"), std::domain_error);
    CHECK_THROWS_WITH_AS(convert(1.0, "J", "W"),
                         doctest::Contains("dimension mismatch"), std::domain_error);
    // desk constant without an authoritative exact value stays quarantined
    CHECK_THROWS_WITH_AS(convert(1.0, "g_oil", "J", ConstantSet::Exact),
                         doctest::Contains("in exact set"), std::domain_error);
    CHECK_THROWS_AS(convert(std::nan(""), "J", "J"), std::domain_error);
}

TEST_CASE("constant sets carry provenance without mixing") {
    CHECK(unit_lookup("btu", ConstantSet::Exact).provenance == Provenance::Exact);
    CHECK(unit_lookup("btu", ConstantSet::PaperApproximate).provenance ==
          Provenance::PaperApproximate);
    CHECK(unit_lookup("J", ConstantSet::PaperApproximate).provenance ==
          Provenance::Exact);
    CHECK(unit_lookup("btu", ConstantSet::Exact).to_si !=
          unit_lookup("btu", ConstantSet::PaperApproximate).to_si);
    CHECK(constant_set_name(ConstantSet::Exact) == std::string("exact"));
    CHECK(constant_set_name(ConstantSet::PaperApproximate) ==
          std::string("paper-approximate"));
}

TEST_CASE("nuclear_usable: national and world mixes") {
    auto tables = budget_table();

    auto france = nuclear_usable(mix_from_tables(tables, "france"));
    CHECK(france.nuclear_total == doctest::Approx(1.6e11).epsilon(1e-12));
    CHECK(france.usable_nuclear == doctest::Approx(4.29e10).epsilon(1e-12));
    CHECK(france.usable_total == doctest::Approx(2.829e11).epsilon(1e-12));
    CHECK(france.share_of_usable == doctest::Approx(0.15164369034994699).epsilon(1e-12));
    CHECK(france.share_of_total == doctest::Approx(0.10725).epsilon(1e-12));
    CHECK(france.waste_heat == doctest::Approx(1.171e11).epsilon(1e-12));
    CHECK(france.implied_efficiency == doctest::Approx(0.268125).epsilon(1e-12));

    auto world = nuclear_usable(mix_from_tables(tables, "world"));
    CHECK(world.usable_nuclear == doctest::Approx(3.4e11).epsilon(1e-12));
    CHECK(world.usable_total == doctest::Approx(1.429e13).epsilon(1e-12));
    CHECK(world.share_of_usable == doctest::Approx(0.023792862141357594).epsilon(1e-12));
    CHECK(world.share_of_total == doctest::Approx(0.02266666666666667).epsilon(1e-12));

    EnergyMix no_nuclear{1e13, 0.5,    0.3, 0.2, 0.0, 0.0, 0.0,
                         1e12, 0.8,    0.0, 0.2};
    auto rep = nuclear_usable(no_nuclear);
    CHECK(rep.usable_total == no_nuclear.total);
    CHECK(rep.usable_nuclear == 0.0);
    CHECK(rep.implied_efficiency == 0.0);
}

TEST_CASE("EnergyMix validation") {
    EnergyMix mix{15e12, 0.40, 0.30, 0.20, 0.07, 0.02, 0.01, 1.7e12, 0.60, 0.20, 0.20};
    CHECK_NOTHROW(validate(mix));

    auto short_sum = mix;
    short_sum.share_oil = 0.30;
    CHECK_THROWS_WITH_AS(validate(short_sum),
                         doctest::Contains("consumption shares sum"), std::domain_error);

    auto electric_off = mix;
    electric_off.electric_share_hydro = 0.30;
    CHECK_THROWS_WITH_AS(validate(electric_off),
                         doctest::Contains("electricity shares sum"), std::domain_error);

    auto out_of_range = mix;
    out_of_range.share_oil = 1.40;
    CHECK_THROWS_WITH_AS(validate(out_of_range),
                         doctest::Contains("shares must lie in [0, 1]"), std::domain_error);

    auto bad_eff = mix;
    bad_eff.nuclear_usable_efficiency = 0.0;
    CHECK_THROWS_WITH_AS(validate(bad_eff),
                         doctest::Contains("nuclear_usable_efficiency"), std::domain_error);

    // rounded source rows may drift to 102%; the tolerance admits them
    auto tables = budget_table();
    CHECK_NOTHROW(mix_from_tables(tables, "china"));
    CHECK_THROWS_WITH_AS(mix_from_tables(tables, "atlantis"),
                         doctest::Contains("no table row"), std::domain_error);
}

TEST_CASE("biotic_disturbance and efficiency") {
    CHECK(std::abs(biotic_disturbance(100.0, 2.0 / 3.0, 0.6) - 40.0) <= 1e-12 * 40.0);
    CHECK(biotic_disturbance(100.0, 1.0, 1.0) == 100.0);
    CHECK(biotic_disturbance(100.0, 0.5, 0.0) == 0.0);
    CHECK_THROWS_WITH_AS(biotic_disturbance(100.0, 1.5, 0.5),
                         doctest::Contains("land_fraction"), std::domain_error);
    CHECK_THROWS_AS(biotic_disturbance(0.0, 0.5, 0.5), std::domain_error);

    CHECK(efficiency(43.0, 160.0) == doctest::Approx(0.26875).epsilon(1e-15));
    CHECK(efficiency(42.0, 42.0) == 1.0);
    CHECK(efficiency(1.0, 2.0) == 0.5);
    CHECK_THROWS_WITH_AS(efficiency(3.0, 2.0),
                         doctest::Contains("p_useful must be <= p_total"),
                         std::domain_error);
    CHECK_THROWS_AS(efficiency(0.0, 2.0), std::domain_error);
}

TEST_CASE("budget_table: bundled reference rows") {
    auto tables = budget_table();
    CHECK(tables.a1.size() == 25);
    CHECK(tables.a2.size() == 48);
    CHECK(tables.a3.size() == 30);

    CHECK(table_value(tables.a1, "solar_radiation", "total_earth") == 80000.0);
    CHECK(table_value(tables.a1, "photosynthesis", "total_earth") == 100.0);
    CHECK(table_value(tables.a1, "anthropogenic_consumption", "civilization") == 15.0);
    CHECK(table_value(tables.a2, "total_consumption", "world") == 15.0);
    CHECK(table_value(tables.a3, "electric_total", "world") == 1.7);

    for (const auto& row : tables.a1) {
        CHECK(row.unit == "TW");
        CHECK(!row.source_tag.empty());
    }
}

TEST_CASE("estimators land within a factor 2 of their reference rows") {
    auto tables = budget_table();
    double tw = 1e12;

    CHECK(factor2(thermohaline_power(kOcean).power,
                  table_value(tables.a1, "thermohaline_circulation", "total_earth") * tw));
    CHECK(factor2(wind_upwelling_power(kAtmosphere).power,
                  table_value(tables.a1, "atmospheric_circulation", "total_earth") * tw));
    CHECK(factor2(hydropower(kRivers),
                  table_value(tables.a1, "river_hydropower", "land") * tw));
    CHECK(factor2(osmotic_power(kRivers).power,
                  table_value(tables.a1, "osmotic_transition_river_sea", "land") * tw));
}
