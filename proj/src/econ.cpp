#include "potdyn/econ.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace potdyn {

static void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(field) +
                                " must be strictly positive and finite (got " +
                                std::to_string(v) + ")");
    }
}

double markup_ratio(const TwoSectorEconomy& e) {
    require_positive(e.gdp, "gdp");
    require_positive(e.n1, "n1");
    require_positive(e.n2, "n2");
    require_positive(e.sector2_revenue, "sector2_revenue");
    if (!(e.sector2_revenue < e.gdp))
        throw std::domain_error("sector2_revenue must be < gdp (degenerate economy)");
    return (e.n1 / e.n2) * e.sector2_revenue / (e.gdp - e.sector2_revenue);
}

double energy_revenue(double consumption_gj, double unit_price) {
    require_positive(consumption_gj, "consumption_gj");
    require_positive(unit_price, "unit_price");
    return consumption_gj * unit_price;
}

double mean_wage(double gdp, double population, double working_fraction, double hours_per_year) {
    require_positive(gdp, "gdp");
    require_positive(population, "population");
    require_positive(working_fraction, "working_fraction");
    require_positive(hours_per_year, "hours_per_year");
    if (working_fraction > 1.0)
        throw std::domain_error("working_fraction must be <= 1 (got " +
                                std::to_string(working_fraction) + ")");
    return gdp / (population * working_fraction * hours_per_year);
}

MoneyEnergy money_energy_factor(double production_value, double energy_consumption_joules) {
    require_positive(production_value, "production_value");
    require_positive(energy_consumption_joules, "energy_consumption");
    MoneyEnergy me;
    me.joule_per_currency = energy_consumption_joules / production_value;
    me.currency_per_gigajoule = 1e9 * production_value / energy_consumption_joules;
    return me;
}

ThreeSectorReport three_sector_report(const ThreeSectorEconomy& e) {
    require_positive(e.gdp, "gdp");
    if (!(e.energy_revenue_share > 0.0 && e.energy_revenue_share < 1.0))
        throw std::domain_error("energy_revenue_share must be in (0, 1)");
    if (!(e.energy_employment_share > 0.0 && e.energy_employment_share < 1.0))
        throw std::domain_error("energy_employment_share must be in (0, 1)");
    // markup = 1 is the degenerate no-surplus economy, allowed as a limit.
    if (!(e.markup >= 1.0))
        throw std::domain_error("markup must be >= 1 (got " + std::to_string(e.markup) + ")");
    ThreeSectorReport rep;
    rep.cost_labor_share = e.energy_revenue_share / e.markup;
    rep.vacant_share = e.energy_revenue_share - rep.cost_labor_share;
    rep.parity_employment_share = e.energy_revenue_share;
    rep.green_share = rep.vacant_share;
    rep.workweek_reduction_days = rep.green_share * 5.0;
    rep.retirement_reduction_years = rep.green_share * 40.0;
    return rep;
}

static const std::array<const char*, 13> kSchema = {
    "name", "energy_consumption_1e15btu", "energy_production_1e15btu",
    "population_1e3", "working_1e3", "food_pct", "mining_pct", "manuf_pct",
    "electr_pct", "constr_pct", "trade_pct", "transp_pct", "other_pct"};

IngestResult ingest_table(const CsvTable& table) {
    if (table.header.size() != kSchema.size())
        throw parse_error("header has " + std::to_string(table.header.size()) +
                              " columns, expected " + std::to_string(kSchema.size()),
                          1);
    for (std::size_t i = 0; i < kSchema.size(); ++i) {
        if (table.header[i] != kSchema[i])
            throw parse_error("header column " + std::to_string(i + 1) + " is '" +
                                  table.header[i] + "', expected '" + kSchema[i] + "'",
                              1);
    }

    IngestResult out;
    out.aggregates = {};
    double share_weight_sum[8] = {};
    std::size_t row_index = 1;  // header is row 1
    for (const auto& fields : table.rows) {
        ++row_index;
        CountryRecord rec;
        rec.name = fields[0];
        rec.energy_consumption = parse_field(fields[1], row_index, kSchema[1]);
        rec.energy_production = parse_field(fields[2], row_index, kSchema[2]);
        rec.population = parse_field(fields[3], row_index, kSchema[3]);
        rec.working = parse_field(fields[4], row_index, kSchema[4]);
        double share_sum = 0.0;
        for (std::size_t s = 0; s < 8; ++s) {
            double v = parse_field(fields[5 + s], row_index, kSchema[5 + s]);
            if (v < 0.0 || v > 100.0)
                throw parse_error("row " + std::to_string(row_index) + ": " +
                                      std::string(kSchema[5 + s]) + " = " + fields[5 + s] +
                                      " outside [0, 100]",
                                  row_index);
            rec.sector_shares[s] = v;
            share_sum += v;
        }
        if (rec.working > rec.population)
            throw parse_error("row " + std::to_string(row_index) + " (" + rec.name +
                                  "): working exceeds population",
                              row_index);
        if (std::abs(share_sum - 100.0) > 0.5)
            out.warnings.push_back(rec.name + ": sector shares sum to " +
                                   format_number(share_sum, 12) + ", outside 100 +/- 0.5");

        out.aggregates.total_consumption += rec.energy_consumption;
        out.aggregates.total_production += rec.energy_production;
        out.aggregates.total_population += rec.population;
        out.aggregates.total_working += rec.working;
        for (std::size_t s = 0; s < 8; ++s)
            share_weight_sum[s] += rec.working * rec.sector_shares[s];
        out.records.push_back(std::move(rec));
    }
    for (std::size_t s = 0; s < 8; ++s) {
        out.aggregates.weighted_shares[s] =
            out.aggregates.total_working > 0.0
                ? share_weight_sum[s] / out.aggregates.total_working
                : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

IngestResult ingest_file(const std::string& path) { return ingest_table(read_csv(path)); }

std::string serialize_table(const std::vector<CountryRecord>& records) {
    std::string out;
    for (std::size_t i = 0; i < kSchema.size(); ++i) {
        if (i) out += ',';
        out += kSchema[i];
    }
    out += '\n';
    for (const auto& rec : records) {
        out += rec.name;
        out += ',';
        out += format_number(rec.energy_consumption, 12);
        out += ',';
        out += format_number(rec.energy_production, 12);
        out += ',';
        out += format_number(rec.population, 12);
        out += ',';
        out += format_number(rec.working, 12);
        for (double s : rec.sector_shares) {
            out += ',';
            out += format_number(s, 12);
        }
        out += '\n';
    }
    return out;
}

SectorSplit energy_sector_split(const TableAggregates& agg, double energy_fraction_of_mining) {
    if (!(energy_fraction_of_mining > 0.0 && energy_fraction_of_mining <= 1.0))
        throw std::domain_error("energy_fraction_of_mining must be in (0, 1]");
    SectorSplit split;
    double mining_employment = agg.total_working * agg.weighted_shares[kMining] / 100.0;
    split.n2 = mining_employment * energy_fraction_of_mining;
    split.n1 = agg.total_working - split.n2;
    split.n1_over_n2 = split.n1 / split.n2;
    return split;
}

static FoodGroupStats group_stats(const std::vector<double>& shares) {
    FoodGroupStats st;
    st.count = shares.size();
    if (shares.empty()) {
        st.mean = st.min = st.max = std::numeric_limits<double>::quiet_NaN();
        return st;
    }
    double sum = 0.0;
    st.min = st.max = shares.front();
    for (double v : shares) {
        sum += v;
        if (v < st.min) st.min = v;
        if (v > st.max) st.max = v;
    }
    st.mean = sum / static_cast<double>(shares.size());
    return st;
}

FoodGroups food_sector_groups(const std::vector<CountryRecord>& records,
                              double threshold_percent) {
    if (!(threshold_percent > 0.0 && threshold_percent <= 100.0))
        throw std::domain_error("threshold_percent must be in (0, 100]");
    std::vector<double> low, high;
    for (const auto& rec : records) {
        // Printed-resolution comparison: 14.9 belongs with a 15% threshold.
        if (rec.sector_shares[kFood] >= threshold_percent - 0.5)
            high.push_back(rec.sector_shares[kFood]);
        else
            low.push_back(rec.sector_shares[kFood]);
    }
    FoodGroups groups;
    groups.threshold_percent = threshold_percent;
    groups.low = group_stats(low);
    groups.high = group_stats(high);
    return groups;
}

}  // namespace potdyn
