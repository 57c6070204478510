#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "potdyn/io.hpp"

namespace potdyn {

// Cost-price sector (n1) vs marked-up sector (n2) decomposition of GDP.
struct TwoSectorEconomy {
    double gdp;              // currency / year
    double n1;               // persons
    double n2;               // persons
    double sector2_revenue;  // currency / year, strictly below gdp
};

// (n1/n2) * sector2_revenue / (gdp - sector2_revenue).
double markup_ratio(const TwoSectorEconomy& e);

double energy_revenue(double consumption_gj, double unit_price);

// gdp / (population * working_fraction * hours_per_year).
double mean_wage(double gdp, double population, double working_fraction, double hours_per_year);

struct MoneyEnergy {
    double joule_per_currency;
    double currency_per_gigajoule;
};

MoneyEnergy money_energy_factor(double production_value, double energy_consumption_joules);

struct ThreeSectorEconomy {
    double gdp;
    double energy_revenue_share = 0.10;
    double energy_employment_share;  // order 0.001 to 0.002
    double markup;                   // g_t/g_s, >= 1
};

struct ThreeSectorReport {
    double vacant_share;              // energy_revenue_share * (1 - 1/markup)
    double cost_labor_share;          // energy_revenue_share / markup
    double parity_employment_share;   // employment share needed at markup 1
    double green_share;               // = vacant_share, redirectable surplus
    double workweek_reduction_days;   // green_share * 5-day week
    double retirement_reduction_years;  // green_share * 40-year career
};

ThreeSectorReport three_sector_report(const ThreeSectorEconomy& e);

inline constexpr std::array<const char*, 8> kSectorColumns = {
    "food_pct", "mining_pct", "manuf_pct", "electr_pct",
    "constr_pct", "trade_pct", "transp_pct", "other_pct"};

enum Sector { kFood = 0, kMining = 1, kManuf = 2, kElectr = 3,
              kConstr = 4, kTrade = 5, kTransp = 6, kOther = 7 };

struct CountryRecord {
    std::string name;
    double energy_consumption;  // 1e15 btu / year
    double energy_production;   // 1e15 btu / year
    double population;          // 1e3 persons
    double working;             // 1e3 persons
    std::array<double, 8> sector_shares;  // percent, ordered as kSectorColumns
};

struct TableAggregates {
    double total_consumption;
    double total_production;
    double total_population;
    double total_working;
    std::array<double, 8> weighted_shares;  // employment-weighted, percent
};

struct IngestResult {
    std::vector<CountryRecord> records;
    TableAggregates aggregates;
    std::vector<std::string> warnings;  // share sums outside 100 +/- 0.5
};

// Header must match the declared schema exactly. Malformed rows raise
// parse_error with the row index; off-sum shares only warn (source rounds).
IngestResult ingest_table(const CsvTable& table);
IngestResult ingest_file(const std::string& path);

// Canonical CSV text; round-trips bit-exactly with ingest for well-formed files.
std::string serialize_table(const std::vector<CountryRecord>& records);

struct SectorSplit {
    double n1;  // 1e3 persons
    double n2;  // 1e3 persons
    double n1_over_n2;
};

// n2 = mining employment * fraction, n1 = the rest of the workforce.
SectorSplit energy_sector_split(const TableAggregates& agg, double energy_fraction_of_mining);

struct FoodGroupStats {
    std::size_t count;
    double mean;  // NaN when the group is empty
    double min;
    double max;
};

struct FoodGroups {
    double threshold_percent;
    FoodGroupStats low;   // food share below threshold
    FoodGroupStats high;  // at or above
};

// Comparison happens at the table's printed resolution: a share counts as
// reaching the threshold when it rounds up to it (share >= threshold - 0.5).
FoodGroups food_sector_groups(const std::vector<CountryRecord>& records,
                              double threshold_percent);

}  // namespace potdyn
