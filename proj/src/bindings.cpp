#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "potdyn/dynamics.hpp"
#include "potdyn/econ.hpp"
#include "potdyn/io.hpp"
#include "potdyn/price.hpp"
#include "potdyn/scenarios.hpp"
#include "potdyn/units.hpp"

namespace py = pybind11;
using namespace potdyn;

namespace {

ConstantSet parse_constants(const std::string& name) {
    if (name == "exact") return ConstantSet::Exact;
    if (name == "paper-approximate") return ConstantSet::PaperApproximate;
    throw std::domain_error("unknown constant set '" + name +
                            "' (use exact or paper-approximate)");
}

CurveKind parse_curve_kind(const std::string& name) {
    if (name == "potential") return CurveKind::Potential;
    if (name == "flux") return CurveKind::Flux;
    throw std::domain_error("unknown curve kind '" + name + "' (use potential or flux)");
}

const char* event_name(EventKind kind) {
    switch (kind) {
        case EventKind::JunctionCross: return "JunctionCross";
        case EventKind::Absorbed: return "Absorbed";
        case EventKind::Breakdown: return "Breakdown";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Piecewise production-consumption dynamics with price and employment "
              "images, markup accounting, and unit conversion";
    m.attr("__version__") = "0.1.0";

    py::class_<PiecewiseSystem>(m, "PiecewiseSystem")
        .def(py::init([](double p_plus, double p_minus, double t_plus, double t_minus,
                         std::string stock_unit) {
                 PiecewiseSystem sys{p_plus, p_minus, t_plus, t_minus, std::move(stock_unit)};
                 validate(sys);
                 return sys;
             }),
             py::arg("p_plus"), py::arg("p_minus"), py::arg("t_plus"), py::arg("t_minus"),
             py::arg("stock_unit") = "stock units")
        // fields are readonly so a validated system stays valid
        .def_readonly("p_plus", &PiecewiseSystem::p_plus)
        .def_readonly("p_minus", &PiecewiseSystem::p_minus)
        .def_readonly("t_plus", &PiecewiseSystem::t_plus)
        .def_readonly("t_minus", &PiecewiseSystem::t_minus)
        .def_readonly("stock_unit", &PiecewiseSystem::stock_unit);

    py::class_<DerivedQuantities>(m, "DerivedQuantities")
        .def_readonly("m_s", &DerivedQuantities::m_s)
        .def_readonly("m_u", &DerivedQuantities::m_u)
        .def_readonly("m_r", &DerivedQuantities::m_r)
        .def_readonly("alpha", &DerivedQuantities::alpha)
        .def_readonly("r", &DerivedQuantities::r);

    py::class_<StationaryPoint>(m, "StationaryPoint")
        .def_readonly("location", &StationaryPoint::location)
        .def_property_readonly("kind", [](const StationaryPoint& p) {
            return std::string(point_kind_name(p.kind));
        });

    py::class_<Event>(m, "Event")
        .def_property_readonly("kind",
                               [](const Event& e) { return std::string(event_name(e.kind)); })
        .def_readonly("t", &Event::t)
        .def_readonly("direction", &Event::direction);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("t", &Trajectory::t)
        .def_readonly("m", &Trajectory::m)
        .def_readonly("events", &Trajectory::events)
        .def_readonly("dt_above_recommended", &Trajectory::dt_above_recommended);

    py::class_<ClosedFormState>(m, "ClosedFormState")
        .def_readonly("m", &ClosedFormState::m)
        .def_readonly("junction_crossing", &ClosedFormState::junction_crossing)
        .def_readonly("absorption", &ClosedFormState::absorption);

    m.def("derive", &derive, py::arg("sys"));
    m.def(
        "regime",
        [](const PiecewiseSystem& sys) { return std::string(regime_name(classify_regime(sys).tag)); },
        py::arg("sys"));
    m.def("flux", &flux, py::arg("m"), py::arg("sys"));
    m.def("potential", &potential, py::arg("m"), py::arg("sys"));
    m.def("stationary_points", &stationary_points, py::arg("sys"));
    m.def("closed_form_state", &closed_form_state, py::arg("sys"), py::arg("m0"), py::arg("t"));
    m.def("integrate", &integrate, py::arg("sys"), py::arg("m0"), py::arg("dt"),
          py::arg("n_steps"));

    py::class_<PriceSystem>(m, "PriceSystem")
        .def_readonly("c", &PriceSystem::c)
        .def_readonly("d_s", &PriceSystem::d_s)
        .def_readonly("d_u", &PriceSystem::d_u)
        .def_readonly("d_r", &PriceSystem::d_r)
        .def_readonly("t_plus", &PriceSystem::t_plus)
        .def_readonly("t_minus", &PriceSystem::t_minus)
        .def_readonly("d_max", &PriceSystem::d_max);

    py::class_<PriceFlux>(m, "PriceFlux")
        .def_readonly("value", &PriceFlux::value)
        .def_readonly("breakdown", &PriceFlux::breakdown);

    py::class_<Calibration>(m, "Calibration")
        .def_readonly("c", &Calibration::c)
        .def_readonly("a", &Calibration::a);

    py::class_<EmploymentSystem>(m, "EmploymentSystem")
        .def_readonly("a", &EmploymentSystem::a)
        .def_readonly("n_s", &EmploymentSystem::n_s)
        .def_readonly("n_u", &EmploymentSystem::n_u)
        .def_readonly("n_r", &EmploymentSystem::n_r)
        .def_readonly("t_plus", &EmploymentSystem::t_plus)
        .def_readonly("t_minus", &EmploymentSystem::t_minus);

    m.def("build_price_system", &build_price_system, py::arg("sys"), py::arg("c"),
          py::arg("d_max") = std::nullopt);
    m.def("price_from_amount", &price_from_amount, py::arg("c"), py::arg("m"));
    m.def("price_potential", &price_potential, py::arg("d"), py::arg("psys"));
    m.def("price_flux", &price_flux, py::arg("d"), py::arg("psys"));
    m.def("price_r_d", &price_r_d, py::arg("psys"));
    m.def("price_stationary_points", &price_stationary_points, py::arg("psys"));
    m.def("calibrate", &calibrate, py::arg("d_s"), py::arg("n_s"), py::arg("p_s_minus"),
          py::arg("t_minus"));
    m.def("build_employment_system", &build_employment_system, py::arg("sys"), py::arg("a"));
    m.def(
        "employment_flux",
        [](double n, const EmploymentSystem& esys) { return employment_flux(n, esys); },
        py::arg("n"), py::arg("esys"));
    m.def("employment_from_output", &employment_from_output, py::arg("p"), py::arg("a"));
    m.def("integrate_price", &integrate_price, py::arg("psys"), py::arg("d0"), py::arg("dt"),
          py::arg("n_steps"));

    py::class_<TwoSectorEconomy>(m, "TwoSectorEconomy")
        .def(py::init([](double gdp, double n1, double n2, double sector2_revenue) {
                 return TwoSectorEconomy{gdp, n1, n2, sector2_revenue};
             }),
             py::arg("gdp"), py::arg("n1"), py::arg("n2"), py::arg("sector2_revenue"))
        .def_readonly("gdp", &TwoSectorEconomy::gdp)
        .def_readonly("n1", &TwoSectorEconomy::n1)
        .def_readonly("n2", &TwoSectorEconomy::n2)
        .def_readonly("sector2_revenue", &TwoSectorEconomy::sector2_revenue);

    py::class_<MoneyEnergy>(m, "MoneyEnergy")
        .def_readonly("joule_per_currency", &MoneyEnergy::joule_per_currency)
        .def_readonly("currency_per_gigajoule", &MoneyEnergy::currency_per_gigajoule);

    py::class_<ThreeSectorEconomy>(m, "ThreeSectorEconomy")
        .def(py::init([](double gdp, double energy_employment_share, double markup,
                         double energy_revenue_share) {
                 return ThreeSectorEconomy{gdp, energy_revenue_share, energy_employment_share,
                                           markup};
             }),
             py::arg("gdp"), py::arg("energy_employment_share"), py::arg("markup"),
             py::arg("energy_revenue_share") = 0.10)
        .def_readonly("gdp", &ThreeSectorEconomy::gdp)
        .def_readonly("energy_revenue_share", &ThreeSectorEconomy::energy_revenue_share)
        .def_readonly("energy_employment_share", &ThreeSectorEconomy::energy_employment_share)
        .def_readonly("markup", &ThreeSectorEconomy::markup);

    py::class_<ThreeSectorReport>(m, "ThreeSectorReport")
        .def_readonly("vacant_share", &ThreeSectorReport::vacant_share)
        .def_readonly("cost_labor_share", &ThreeSectorReport::cost_labor_share)
        .def_readonly("parity_employment_share", &ThreeSectorReport::parity_employment_share)
        .def_readonly("green_share", &ThreeSectorReport::green_share)
        .def_readonly("workweek_reduction_days", &ThreeSectorReport::workweek_reduction_days)
        .def_readonly("retirement_reduction_years", &ThreeSectorReport::retirement_reduction_years);

    py::class_<CountryRecord>(m, "CountryRecord")
        .def_readonly("name", &CountryRecord::name)
        .def_readonly("energy_consumption", &CountryRecord::energy_consumption)
        .def_readonly("energy_production", &CountryRecord::energy_production)
        .def_readonly("population", &CountryRecord::population)
        .def_readonly("working", &CountryRecord::working)
        .def_readonly("sector_shares", &CountryRecord::sector_shares);

    py::class_<TableAggregates>(m, "TableAggregates")
        .def_readonly("total_consumption", &TableAggregates::total_consumption)
        .def_readonly("total_production", &TableAggregates::total_production)
        .def_readonly("total_population", &TableAggregates::total_population)
        .def_readonly("total_working", &TableAggregates::total_working)
        .def_readonly("weighted_shares", &TableAggregates::weighted_shares);

    py::class_<IngestResult>(m, "IngestResult")
        .def_readonly("records", &IngestResult::records)
        .def_readonly("aggregates", &IngestResult::aggregates)
        .def_readonly("warnings", &IngestResult::warnings);

    py::class_<SectorSplit>(m, "SectorSplit")
        .def_readonly("n1", &SectorSplit::n1)
        .def_readonly("n2", &SectorSplit::n2)
        .def_readonly("n1_over_n2", &SectorSplit::n1_over_n2);

    py::class_<FoodGroupStats>(m, "FoodGroupStats")
        .def_readonly("count", &FoodGroupStats::count)
        .def_readonly("mean", &FoodGroupStats::mean)
        .def_readonly("min", &FoodGroupStats::min)
        .def_readonly("max", &FoodGroupStats::max);

    py::class_<FoodGroups>(m, "FoodGroups")
        .def_readonly("threshold_percent", &FoodGroups::threshold_percent)
        .def_readonly("low", &FoodGroups::low)
        .def_readonly("high", &FoodGroups::high);

    m.def("markup_ratio", &markup_ratio, py::arg("economy"));
    m.def("energy_revenue", &energy_revenue, py::arg("consumption_gj"), py::arg("unit_price"));
    m.def("mean_wage", &mean_wage, py::arg("gdp"), py::arg("population"),
          py::arg("working_fraction"), py::arg("hours_per_year"));
    m.def("money_energy_factor", &money_energy_factor, py::arg("production_value"),
          py::arg("energy_consumption_joules"));
    m.def("three_sector_report", &three_sector_report, py::arg("economy"));
    m.def("ingest_file", &ingest_file, py::arg("path"));
    m.def("serialize_table", &serialize_table, py::arg("records"));
    m.def("energy_sector_split", &energy_sector_split, py::arg("aggregates"),
          py::arg("energy_fraction_of_mining"));
    m.def("food_sector_groups", &food_sector_groups, py::arg("records"),
          py::arg("threshold_percent"));

    m.def(
        "convert",
        [](double value, const std::string& from_unit, const std::string& to_unit,
           const std::string& constants) {
            return convert(value, from_unit, to_unit, parse_constants(constants));
        },
        py::arg("value"), py::arg("from_unit"), py::arg("to_unit"),
        py::arg("constants") = "exact");
    m.def("format_number", py::overload_cast<double>(&format_number), py::arg("value"));

    py::class_<CurveSeries>(m, "CurveSeries")
        .def_readonly("x", &CurveSeries::x)
        .def_readonly("y", &CurveSeries::y)
        .def_readonly("x_unit", &CurveSeries::x_unit)
        .def_readonly("y_unit", &CurveSeries::y_unit)
        .def_readonly("label", &CurveSeries::label);

    m.def("preset_ids", &preset_ids);
    m.def(
        "emit_curve",
        [](const std::string& preset_id, const std::string& kind, double start, double stop,
           double step) { return emit_curve(preset_id, parse_curve_kind(kind), start, stop, step); },
        py::arg("preset_id"), py::arg("kind"), py::arg("start"), py::arg("stop"), py::arg("step"));
    m.def("emit_trajectory", &emit_trajectory, py::arg("preset_id"), py::arg("m0"), py::arg("dt"),
          py::arg("n_steps"));
}
