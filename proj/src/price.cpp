#include "potdyn/price.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace potdyn {

static void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(field) +
                                " must be strictly positive and finite (got " +
                                std::to_string(v) + ")");
    }
}

void validate(const PriceSystem& psys) {
    require_positive(psys.c, "c");
    require_positive(psys.d_s, "d_s");
    require_positive(psys.d_u, "d_u");
    require_positive(psys.d_r, "d_r");
    require_positive(psys.t_plus, "t_plus");
    require_positive(psys.t_minus, "t_minus");
    if (psys.d_s > psys.d_u)
        throw std::domain_error("d_s must be <= d_u (price landscape needs m_u <= m_s)");
    if (psys.d_max && !(*psys.d_max > psys.d_u))
        throw std::domain_error("d_max must be > d_u (got " + std::to_string(*psys.d_max) + ")");
}

double price_r_d(const PriceSystem& psys) {
    return psys.d_r * psys.d_r * (psys.t_plus + psys.t_minus) /
           (6.0 * psys.t_plus * psys.t_minus);
}

double price_from_amount(double c, double m) {
    require_positive(c, "c");
    if (!(m > 0.0)) throw std::domain_error("m must be > 0, price is undefined at zero stock");
    return c / m;
}

PriceSystem build_price_system(const PiecewiseSystem& sys, double c,
                               std::optional<double> d_max) {
    require_positive(c, "c");
    auto rc = classify_regime(sys);
    if (rc.tag == Regime::NonStationary) {
        throw std::domain_error("unsupported regime: NonStationary (alpha = " +
                                std::to_string(rc.alpha) + " > 1)");
    }
    auto d = derive(sys);
    PriceSystem psys;
    psys.c = c;
    psys.d_s = c / d.m_s;
    psys.d_u = c / d.m_u;
    // Same value as c/m_r; kept in the branch-matching form.
    psys.d_r = (sys.t_plus + sys.t_minus) * psys.d_s * psys.d_u /
               (psys.d_u * sys.t_plus + psys.d_s * sys.t_minus);
    psys.t_plus = sys.t_plus;
    psys.t_minus = sys.t_minus;
    psys.d_max = d_max;
    validate(psys);
    return psys;
}

static void require_price(double d) {
    if (!(d > 0.0)) throw std::domain_error("d must be > 0 (got " + std::to_string(d) + ")");
}

double price_potential(double d, const PriceSystem& psys) {
    require_price(d);
    if (d <= psys.d_r)
        return -(d * d / (2.0 * psys.t_minus)) * (1.0 - (2.0 / 3.0) * d / psys.d_s);
    return (d * d / (2.0 * psys.t_plus)) * (1.0 - (2.0 / 3.0) * d / psys.d_u) - price_r_d(psys);
}

// Branch switch without the d > 0 domain check; integrator stages only.
static double raw_price_flux(double d, const PriceSystem& psys) {
    if (d <= psys.d_r) return (d / psys.t_minus) * (1.0 - d / psys.d_s);
    return -(d / psys.t_plus) * (1.0 - d / psys.d_u);
}

PriceFlux price_flux(double d, const PriceSystem& psys) {
    require_price(d);
    PriceFlux f;
    f.value = raw_price_flux(d, psys);
    f.breakdown = psys.d_max.has_value() && d > *psys.d_max;
    return f;
}

std::vector<StationaryPoint> price_stationary_points(const PriceSystem& psys) {
    validate(psys);
    std::vector<StationaryPoint> pts;
    pts.push_back({0.0, PointKind::UnstableMaximum});
    // Degeneracy test mirrors the stock-space regime tolerance.
    if (std::abs(psys.d_u / psys.d_s - 1.0) <= 1e-9) {
        pts.push_back({psys.d_s, PointKind::InflectionPoint});
    } else {
        pts.push_back({psys.d_s, PointKind::StableMinimum});
        pts.push_back({psys.d_u, PointKind::UnstableMaximum});
    }
    if (psys.d_max) pts.push_back({*psys.d_max, PointKind::StableMinimum});
    return pts;
}

Calibration calibrate(double d_s, double n_s, double p_s_minus, double t_minus) {
    require_positive(d_s, "d_s");
    require_positive(n_s, "n_s");
    require_positive(p_s_minus, "p_s_minus");
    require_positive(t_minus, "t_minus");
    return {d_s * p_s_minus * t_minus, p_s_minus / n_s};
}

EmploymentSystem build_employment_system(const PiecewiseSystem& sys, double a) {
    validate(sys);
    require_positive(a, "a");
    EmploymentSystem esys;
    esys.a = a;
    esys.n_s = sys.p_plus / a;
    esys.n_u = sys.p_minus / a;
    esys.n_r = (esys.n_s * sys.t_plus + esys.n_u * sys.t_minus) / (sys.t_plus + sys.t_minus);
    esys.t_plus = sys.t_plus;
    esys.t_minus = sys.t_minus;
    return esys;
}

// Renamed stock system whose m_s, m_u equal n_s, n_u; delegation target.
static PiecewiseSystem employment_as_stock(const EmploymentSystem& esys) {
    PiecewiseSystem sys;
    sys.p_plus = esys.n_s / esys.t_minus;
    sys.p_minus = esys.n_u / esys.t_plus;
    sys.t_plus = esys.t_plus;
    sys.t_minus = esys.t_minus;
    sys.stock_unit = "persons";
    return sys;
}

double employment_flux(double n, const EmploymentSystem& esys, Branch branch) {
    return branch_flux(n, employment_as_stock(esys), branch == Branch::Saturated);
}

double employment_flux(double n, const EmploymentSystem& esys) {
    return flux(n, employment_as_stock(esys));
}

double employment_from_output(double p, double a) {
    if (p < 0.0) throw std::domain_error("p must be >= 0 (got " + std::to_string(p) + ")");
    require_positive(a, "a");
    return p / a;
}

Trajectory integrate_price(const PriceSystem& psys, double d0, double dt, long long n_steps) {
    validate(psys);
    require_price(d0);
    if (!(dt > 0.0)) throw std::domain_error("dt must be > 0 (got " + std::to_string(dt) + ")");
    if (n_steps <= 0)
        throw std::domain_error("n_steps must be >= 1 (got " + std::to_string(n_steps) + ")");

    Trajectory traj;
    traj.dt_above_recommended = dt > std::min(psys.t_plus, psys.t_minus) / 50.0;
    traj.t.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.m.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.t.push_back(0.0);
    traj.m.push_back(d0);

    double d = d0;
    for (long long k = 0; k < n_steps; ++k) {
        double t_prev = static_cast<double>(k) * dt;
        double k1 = raw_price_flux(d, psys);
        double k2 = raw_price_flux(d + 0.5 * dt * k1, psys);
        double k3 = raw_price_flux(d + 0.5 * dt * k2, psys);
        double k4 = raw_price_flux(d + dt * k3, psys);
        double d_next = d + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        double t_next = static_cast<double>(k + 1) * dt;

        if (psys.d_max && d <= *psys.d_max && d_next > *psys.d_max) {
            // No dynamics are defined beyond the cap: halt at the boundary.
            double t_b = t_prev + dt * (*psys.d_max - d) / (d_next - d);
            traj.events.push_back({EventKind::Breakdown, t_b, +1});
            traj.t.push_back(t_b);
            traj.m.push_back(*psys.d_max);
            return traj;
        }
        if ((d < psys.d_r && d_next >= psys.d_r) || (d > psys.d_r && d_next <= psys.d_r)) {
            double t_x = t_prev + dt * (psys.d_r - d) / (d_next - d);
            traj.events.push_back({EventKind::JunctionCross, t_x, d_next > d ? +1 : -1});
        }
        d = d_next;
        traj.t.push_back(t_next);
        traj.m.push_back(d);
    }
    return traj;
}

}  // namespace potdyn
