#pragma once

#include <optional>

#include "potdyn/dynamics.hpp"

namespace potdyn {

// Market-price image of a stock system under d = c/m. In the bistable
// regime d_s < d_r < d_u; the stock ordering inverts because the map is
// decreasing.
struct PriceSystem {
    double c;       // price-stock product, currency * stock-units
    double d_s;     // cost price, c/m_s; stable
    double d_u;     // novel-goods price, c/m_u; unstable
    double d_r;     // junction price, c/m_r
    double t_plus;
    double t_minus;
    std::optional<double> d_max;  // breakdown cap; when set, d_max > d_u
};

void validate(const PriceSystem& psys);

// Continuity constant of the price potential, d_r^2 (t_plus + t_minus) / (6 t_plus t_minus).
double price_r_d(const PriceSystem& psys);

// c/m; strictly decreasing in m.
double price_from_amount(double c, double m);

// Rejects NonStationary systems: the price landscape needs m_u <= m_s.
PriceSystem build_price_system(const PiecewiseSystem& sys, double c,
                               std::optional<double> d_max = std::nullopt);

// Lower branch -(d^2/(2 t_minus))(1 - (2/3) d/d_s) for d <= d_r; upper
// branch (d^2/(2 t_plus))(1 - (2/3) d/d_u) - r_D above; continuous at d_r.
double price_potential(double d, const PriceSystem& psys);

struct PriceFlux {
    double value;
    bool breakdown;  // d_max set and d beyond it
};

// Negative analytic derivative of price_potential. The branch growth/decay
// roles swap relative to stock space; zero at d_s and d_u.
PriceFlux price_flux(double d, const PriceSystem& psys);

// d = 0 is an unstable maximum reported symbolically (open boundary, not a
// reachable state); d_max, when set, is a boundary minimum.
std::vector<StationaryPoint> price_stationary_points(const PriceSystem& psys);

struct Calibration {
    double c;  // d_s * p_s_minus * t_minus
    double a;  // p_s_minus / n_s
};

Calibration calibrate(double d_s, double n_s, double p_s_minus, double t_minus);

// Employment image under n = p/a; same piecewise algebra again.
struct EmploymentSystem {
    double a;    // per-capita labor productivity
    double n_s;  // saturated employment
    double n_u;  // critical start-up employment
    double n_r;  // junction employment
    double t_plus;
    double t_minus;
};

EmploymentSystem build_employment_system(const PiecewiseSystem& sys, double a);

// Goods-lifecycle phases; the caller names the phase because the two
// equations describe different market situations, not one switched system.
enum class Branch { Saturated, StartUp };

double employment_flux(double n, const EmploymentSystem& esys, Branch branch);

// Junction-switched convenience wrapper: Saturated at or above n_r.
double employment_flux(double n, const EmploymentSystem& esys);

double employment_from_output(double p, double a);

// RK4 on the price flux; the m field of the Trajectory holds prices.
// Crossing d_max halts with a Breakdown event.
Trajectory integrate_price(const PriceSystem& psys, double d0, double dt, long long n_steps);

}  // namespace potdyn
