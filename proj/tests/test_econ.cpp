#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "potdyn/econ.hpp"

using namespace potdyn;

namespace {

std::string bundled_table_path() { return default_data_dir() + "/table1_2005.csv"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kMiniHeader =
    "name,energy_consumption_1e15btu,energy_production_1e15btu,population_1e3,"
    "working_1e3,food_pct,mining_pct,manuf_pct,electr_pct,constr_pct,trade_pct,"
    "transp_pct,other_pct";

}  // namespace

TEST_CASE("markup_ratio: oil-sector arithmetic") {
    TwoSectorEconomy oil{45e12, 3e9, 1e7, 5e12};
    CHECK(markup_ratio(oil) == 37.5);

    oil.sector2_revenue = 4.7e12;
    CHECK(markup_ratio(oil) == doctest::Approx(34.98759305210918).epsilon(1e-13));

    TwoSectorEconomy symmetric{2.0, 5.0, 5.0, 1.0};
    CHECK(markup_ratio(symmetric) == 1.0);
}

TEST_CASE("markup_ratio rejects degenerate economies") {
    CHECK_THROWS_WITH_AS(markup_ratio({45e12, 3e9, 1e7, 45e12}),
                         doctest::Contains("sector2_revenue must be < gdp"),
                         std::domain_error);
    CHECK_THROWS_AS(markup_ratio({45e12, 3e9, 1e7, 46e12}), std::domain_error);
    CHECK_THROWS_WITH_AS(markup_ratio({45e12, 0.0, 1e7, 5e12}),
                         doctest::Contains("n1"), std::domain_error);
    CHECK_THROWS_AS(markup_ratio({-1.0, 3e9, 1e7, 5e12}), std::domain_error);
}

TEST_CASE("markup closure and currency homogeneity") {
    std::mt19937_64 rng(20060531);
    std::uniform_real_distribution<double> gdp_dist(1e9, 1e14);
    std::uniform_real_distribution<double> n_dist(1e3, 1e10);
    std::uniform_real_distribution<double> frac(0.01, 0.99);
    for (int trial = 0; trial < 500; ++trial) {
        TwoSectorEconomy e{gdp_dist(rng), n_dist(rng), n_dist(rng), 0.0};
        e.sector2_revenue = e.gdp * frac(rng);
        double g = markup_ratio(e);

        // reconstructing total output from the per-capita splits closes the books
        double g_s = (e.gdp - e.sector2_revenue) / e.n1;
        double rebuilt = e.n1 * g_s + e.n2 * (g * g_s);
        CHECK(rebuilt == doctest::Approx(e.gdp).epsilon(1e-12));

        double lambda = 1.0 + 1e5 * frac(rng);
        TwoSectorEconomy scaled{e.gdp * lambda, e.n1, e.n2, e.sector2_revenue * lambda};
        CHECK(markup_ratio(scaled) == doctest::Approx(g).epsilon(1e-12));
    }
}

TEST_CASE("energy_revenue") {
    CHECK(energy_revenue(4.7e11, 10.0) == 4.7e12);
    // per-barrel pricing collapses to the same unit price
    CHECK(energy_revenue(4.7e11, 55.0 / 5.5) == doctest::Approx(4.7e12).epsilon(1e-13));
    CHECK_THROWS_AS(energy_revenue(0.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(energy_revenue(4.7e11, -1.0), std::domain_error);
}

TEST_CASE("mean_wage") {
    double w = mean_wage(45e12, 6.3e9, 0.5, 2100.0);
    CHECK(w == doctest::Approx(6.802721088435374).epsilon(1e-13));
    // only the population * fraction product matters
    CHECK(mean_wage(45e12, 3.15e9, 1.0, 2100.0) == w);
    CHECK(mean_wage(45e12, 6.3e9, 0.5, 4200.0) == doctest::Approx(w / 2.0).epsilon(1e-14));
    CHECK_THROWS_WITH_AS(mean_wage(45e12, 6.3e9, 1.5, 2100.0),
                         doctest::Contains("working_fraction"), std::domain_error);
    CHECK_THROWS_AS(mean_wage(0.0, 6.3e9, 0.5, 2100.0), std::domain_error);
}

TEST_CASE("money_energy_factor") {
    auto me = money_energy_factor(35e12, 4.7e20);
    CHECK(me.joule_per_currency == doctest::Approx(13428571.42857143).epsilon(1e-13));
    CHECK(me.currency_per_gigajoule == doctest::Approx(74.46808510638297).epsilon(1e-13));

    auto unity = money_energy_factor(42.0, 42.0);
    CHECK(unity.joule_per_currency == 1.0);
    CHECK(unity.currency_per_gigajoule == 1e9);

    CHECK_THROWS_AS(money_energy_factor(0.0, 4.7e20), std::domain_error);
    CHECK_THROWS_AS(money_energy_factor(35e12, 0.0), std::domain_error);
}

TEST_CASE("three_sector_report: surplus redirection arithmetic") {
    auto rep = three_sector_report({45e12, 0.10, 0.001, 100.0});
    CHECK(rep.vacant_share == doctest::Approx(0.099).epsilon(1e-12));
    CHECK(rep.cost_labor_share == doctest::Approx(0.001).epsilon(1e-12));
    CHECK(rep.parity_employment_share == 0.10);
    CHECK(rep.green_share == rep.vacant_share);
    CHECK(rep.workweek_reduction_days == doctest::Approx(0.495).epsilon(1e-12));
    CHECK(rep.retirement_reduction_years == doctest::Approx(3.96).epsilon(1e-12));

    auto none = three_sector_report({45e12, 0.10, 0.001, 1.0});
    CHECK(none.vacant_share == 0.0);
    CHECK(none.cost_labor_share == 0.10);

    auto oil = three_sector_report({45e12, 0.10, 0.002, 40.0});
    CHECK(oil.vacant_share == doctest::Approx(0.0975).epsilon(1e-12));
    CHECK(oil.vacant_share + oil.cost_labor_share ==
          doctest::Approx(0.10).epsilon(1e-12));
}

TEST_CASE("three_sector_report share bounds hold across markups") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> share(0.001, 0.999);
    std::uniform_real_distribution<double> markup(1.0, 1e4);
    for (int trial = 0; trial < 300; ++trial) {
        ThreeSectorEconomy e{1e12, share(rng), share(rng), markup(rng)};
        auto rep = three_sector_report(e);
        CHECK(rep.vacant_share >= 0.0);
        CHECK(rep.vacant_share <= 1.0);
        CHECK(rep.cost_labor_share >= 0.0);
        CHECK(rep.cost_labor_share <= 1.0);
        CHECK(std::abs(rep.vacant_share + rep.cost_labor_share - e.energy_revenue_share) <=
              1e-12 * e.energy_revenue_share);
    }
}

TEST_CASE("three_sector_report invariants") {
    CHECK_THROWS_WITH_AS(three_sector_report({45e12, 0.10, 0.001, 0.5}),
                         doctest::Contains("markup must be >= 1"), std::domain_error);
    CHECK_THROWS_WITH_AS(three_sector_report({45e12, 1.5, 0.001, 10.0}),
                         doctest::Contains("energy_revenue_share"), std::domain_error);
    CHECK_THROWS_WITH_AS(three_sector_report({45e12, 0.10, 0.0, 10.0}),
                         doctest::Contains("energy_employment_share"), std::domain_error);
    CHECK_THROWS_AS(three_sector_report({0.0, 0.10, 0.001, 10.0}), std::domain_error);
}

TEST_CASE("ingest: bundled table aggregates") {
    auto result = ingest_file(bundled_table_path());
    REQUIRE(result.records.size() == 28);
    CHECK(result.warnings.empty());

    CHECK(result.aggregates.total_consumption == 366.2);
    CHECK(result.aggregates.total_production == doctest::Approx(385.4).epsilon(1e-13));
    CHECK(format_number(result.aggregates.total_production, 12) == "385.4");
    CHECK(result.aggregates.total_population == 4042211.0);
    CHECK(result.aggregates.total_working == 1854934.0);

    CHECK(result.aggregates.weighted_shares[kMining] ==
          doctest::Approx(0.6843642954412394).epsilon(1e-12));
    CHECK(result.aggregates.weighted_shares[kFood] ==
          doctest::Approx(34.573250369015824).epsilon(1e-12));
    double share_total = 0.0;
    for (double s : result.aggregates.weighted_shares) share_total += s;
    CHECK(share_total == doctest::Approx(100.0).epsilon(0.005));
}

TEST_CASE("ingest: warnings and parse errors") {
    std::string ok(kMiniHeader);

    auto low_sum = parse_csv(ok + "\nNowhere,1,1,100,50,10,10,10,10,10,10,10,10\n", "mini");
    auto result = ingest_table(low_sum);
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0] ==
          "Nowhere: sector shares sum to 80, outside 100 +/- 0.5");

    auto bad_number =
        parse_csv(ok + "\nNowhere,1,abc,100,50,10,10,10,10,10,20,15,15\n", "mini");
    CHECK_THROWS_WITH_AS(ingest_table(bad_number),
                         doctest::Contains("row 2, column energy_production_1e15btu"),
                         parse_error);
    try {
        ingest_table(bad_number);
    } catch (const parse_error& e) {
        CHECK(e.row == 2);
    }

    auto bad_share =
        parse_csv(ok + "\nNowhere,1,1,100,50,101,10,10,10,10,20,15,15\n", "mini");
    CHECK_THROWS_WITH_AS(ingest_table(bad_share), doctest::Contains("outside [0, 100]"),
                         parse_error);

    auto overworked =
        parse_csv(ok + "\nNowhere,1,1,100,200,10,10,10,10,10,20,15,15\n", "mini");
    CHECK_THROWS_WITH_AS(ingest_table(overworked),
                         doctest::Contains("working exceeds population"), parse_error);

    auto bad_header = parse_csv(std::string("name,oops\nX,1\n"), "mini");
    CHECK_THROWS_WITH_AS(ingest_table(bad_header), doctest::Contains("header"),
                         parse_error);

    std::string renamed(kMiniHeader);
    renamed.replace(renamed.find("mining_pct"), 10, "mining_ppm");
    auto wrong_column = parse_csv(renamed + "\nX,1,1,100,50,10,10,10,10,10,20,15,15\n",
                                  "mini");
    CHECK_THROWS_WITH_AS(ingest_table(wrong_column),
                         doctest::Contains("expected 'mining_pct'"), parse_error);
}

TEST_CASE("ingest round-trips the bundled table byte-exactly") {
    auto original = read_file(bundled_table_path());
    auto result = ingest_file(bundled_table_path());
    CHECK(serialize_table(result.records) == original);
}

TEST_CASE("energy_sector_split on bundled aggregates") {
    auto agg = ingest_file(bundled_table_path()).aggregates;

    auto half = energy_sector_split(agg, 0.5);
    CHECK(half.n2 == doctest::Approx(6347.253).epsilon(1e-12));
    CHECK(half.n1 == doctest::Approx(1848586.747).epsilon(1e-12));
    CHECK(half.n1_over_n2 == doctest::Approx(291.24201398620784).epsilon(1e-12));

    auto whole = energy_sector_split(agg, 1.0);
    CHECK(whole.n1_over_n2 == doctest::Approx(145.12100699310392).epsilon(1e-12));

    auto quarter = energy_sector_split(agg, 0.25);
    CHECK(quarter.n1_over_n2 == doctest::Approx(583.4840279724157).epsilon(1e-12));
    // shrinking the energy slice of mining inflates the ratio monotonically
    CHECK(quarter.n1_over_n2 > half.n1_over_n2);
    CHECK(half.n1_over_n2 > whole.n1_over_n2);

    CHECK_THROWS_WITH_AS(energy_sector_split(agg, 0.0),
                         doctest::Contains("energy_fraction_of_mining"),
                         std::domain_error);
    CHECK_THROWS_AS(energy_sector_split(agg, 1.5), std::domain_error);
}

TEST_CASE("food_sector_groups on the bundled table") {
    auto records = ingest_file(bundled_table_path()).records;

    auto groups = food_sector_groups(records, 15.0);
    CHECK(groups.threshold_percent == 15.0);
    CHECK(groups.low.count == 17);
    CHECK(groups.low.mean == doctest::Approx(4.3999999999999995).epsilon(1e-12));
    CHECK(groups.low.min == 1.1);
    CHECK(groups.low.max == 10.2);
    CHECK(groups.high.count == 11);
    CHECK(groups.high.mean == doctest::Approx(32.654545454545456).epsilon(1e-12));
    // printed at one decimal, 14.9 reaches a 15% threshold
    CHECK(groups.high.min == 14.9);
    CHECK(groups.high.max == 61.0);

    auto all_high = food_sector_groups(records, 0.5);
    CHECK(all_high.low.count == 0);
    CHECK(std::isnan(all_high.low.mean));
    CHECK(all_high.high.count == 28);
    CHECK(all_high.high.mean == doctest::Approx(15.500000000000004).epsilon(1e-12));

    auto all_low = food_sector_groups(records, 100.0);
    CHECK(all_low.low.count == 28);
    CHECK(all_low.high.count == 0);
    CHECK(std::isnan(all_low.high.mean));
    CHECK(std::isnan(all_low.high.min));

    CHECK_THROWS_WITH_AS(food_sector_groups(records, 0.0),
                         doctest::Contains("threshold_percent"), std::domain_error);
    CHECK_THROWS_AS(food_sector_groups(records, 101.0), std::domain_error);

    auto empty = food_sector_groups({}, 15.0);
    CHECK(empty.low.count == 0);
    CHECK(empty.high.count == 0);
}
