#include "potdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace potdyn {

static void require_positive_finite(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(field) +
                                " must be strictly positive and finite (got " +
                                std::to_string(v) + ")");
    }
}

void validate(const PiecewiseSystem& sys) {
    require_positive_finite(sys.p_plus, "p_plus");
    require_positive_finite(sys.p_minus, "p_minus");
    require_positive_finite(sys.t_plus, "t_plus");
    require_positive_finite(sys.t_minus, "t_minus");
}

DerivedQuantities derive(const PiecewiseSystem& sys) {
    validate(sys);
    DerivedQuantities d;
    d.m_s = sys.p_plus * sys.t_minus;
    d.m_u = sys.p_minus * sys.t_plus;
    d.m_r = (d.m_s * sys.t_plus + d.m_u * sys.t_minus) / (sys.t_plus + sys.t_minus);
    d.alpha = d.m_u / d.m_s;
    d.r = d.m_r * d.m_r * (sys.t_plus + sys.t_minus) / (2.0 * sys.t_plus * sys.t_minus);
    return d;
}

// Branch switch without the m >= 0 domain check; integrator stages may
// evaluate slightly below zero.
static double raw_flux(double m, const PiecewiseSystem& sys, const DerivedQuantities& d) {
    if (m >= d.m_r) return (d.m_s - m) / sys.t_minus;
    return (m - d.m_u) / sys.t_plus;
}

double flux(double m, const PiecewiseSystem& sys) {
    if (m < 0.0) throw std::domain_error("m must be >= 0 (got " + std::to_string(m) + ")");
    auto d = derive(sys);
    return raw_flux(m, sys, d);
}

double branch_flux(double m, const PiecewiseSystem& sys, bool upper_branch) {
    if (m < 0.0) throw std::domain_error("m must be >= 0 (got " + std::to_string(m) + ")");
    auto d = derive(sys);
    if (upper_branch) return (d.m_s - m) / sys.t_minus;
    return (m - d.m_u) / sys.t_plus;
}

double potential(double m, const PiecewiseSystem& sys) {
    if (m < 0.0) throw std::domain_error("m must be >= 0 (got " + std::to_string(m) + ")");
    auto d = derive(sys);
    if (m >= d.m_r)
        return -(m * d.m_s / sys.t_minus) * (1.0 - m / (2.0 * d.m_s)) + d.r;
    return (m * d.m_u / sys.t_plus) * (1.0 - m / (2.0 * d.m_u));
}

RegimeClass classify_regime(const PiecewiseSystem& sys, double tol) {
    auto d = derive(sys);
    RegimeClass rc;
    rc.alpha = d.alpha;
    if (std::abs(d.alpha - 1.0) <= tol)
        rc.tag = Regime::Inflection;
    else
        rc.tag = d.alpha < 1.0 ? Regime::Bistable : Regime::NonStationary;
    return rc;
}

std::vector<StationaryPoint> stationary_points(const PiecewiseSystem& sys) {
    auto d = derive(sys);
    auto regime = classify_regime(sys).tag;
    std::vector<StationaryPoint> pts;
    pts.push_back({0.0, PointKind::AbsorbingBoundary});
    switch (regime) {
        case Regime::Bistable:
            pts.push_back({d.m_u, PointKind::UnstableMaximum});
            pts.push_back({d.m_s, PointKind::StableMinimum});
            break;
        case Regime::Inflection:
            pts.push_back({d.m_s, PointKind::InflectionPoint});
            break;
        case Regime::NonStationary:
            break;
    }
    return pts;
}

const char* regime_name(Regime tag) {
    switch (tag) {
        case Regime::Bistable: return "Bistable";
        case Regime::Inflection: return "Inflection";
        case Regime::NonStationary: return "NonStationary";
    }
    return "?";
}

const char* point_kind_name(PointKind kind) {
    switch (kind) {
        case PointKind::StableMinimum: return "StableMinimum";
        case PointKind::UnstableMaximum: return "UnstableMaximum";
        case PointKind::InflectionPoint: return "InflectionPoint";
        case PointKind::AbsorbingBoundary: return "AbsorbingBoundary";
    }
    return "?";
}

ClosedFormState closed_form_state(const PiecewiseSystem& sys, double m0, double t) {
    if (m0 < 0.0) throw std::domain_error("m0 must be >= 0 (got " + std::to_string(m0) + ")");
    if (t < 0.0) throw std::domain_error("t must be >= 0 (got " + std::to_string(t) + ")");
    auto d = derive(sys);

    ClosedFormState out{m0, std::nullopt, std::nullopt};
    double m = m0;
    double elapsed = 0.0;

    // Piecewise trajectories are monotone, so at most one junction crossing
    // and at most one absorption occur; the guard is belt and braces.
    for (int segment = 0; segment < 3; ++segment) {
        double remaining = t - elapsed;
        if (remaining < 0.0) remaining = 0.0;
        // flux at the junction has the sign of m_s - m_r (branch continuity).
        bool upper = (m > d.m_r) || (m == d.m_r && d.m_s >= d.m_r);
        if (upper) {
            // m(tau) = m_s + (m - m_s) exp(-tau/t_minus), relaxes toward m_s.
            if (d.m_s >= d.m_r || m == d.m_s) {
                out.m = d.m_s + (m - d.m_s) * std::exp(-remaining / sys.t_minus);
                return out;
            }
            // m_s below the junction: decays through m_r.
            double t_cross = sys.t_minus * std::log((m - d.m_s) / (d.m_r - d.m_s));
            if (t_cross >= remaining) {
                out.m = d.m_s + (m - d.m_s) * std::exp(-remaining / sys.t_minus);
                return out;
            }
            elapsed += t_cross;
            m = d.m_r;
            if (!out.junction_crossing) out.junction_crossing = elapsed;
            continue;
        }
        // Lower branch: m(tau) = m_u + (m - m_u) exp(+tau/t_plus).
        if (m == d.m_u) {
            out.m = m;
            return out;
        }
        if (m > d.m_u) {
            // grows away from m_u, up through m_r (m_r > m_u here).
            double t_cross = sys.t_plus * std::log((d.m_r - d.m_u) / (m - d.m_u));
            if (t_cross >= remaining) {
                out.m = d.m_u + (m - d.m_u) * std::exp(remaining / sys.t_plus);
                return out;
            }
            elapsed += t_cross;
            m = d.m_r;
            if (!out.junction_crossing) out.junction_crossing = elapsed;
            continue;
        }
        // m < m_u: decays to absorption at t* = t_plus ln(m_u/(m_u - m)).
        double t_absorb = sys.t_plus * std::log(d.m_u / (d.m_u - m));
        if (t_absorb > remaining) {
            out.m = d.m_u + (m - d.m_u) * std::exp(remaining / sys.t_plus);
            return out;
        }
        out.absorption = elapsed + t_absorb;
        out.m = 0.0;
        return out;
    }
    return out;  // unreachable for valid systems
}

Trajectory integrate(const PiecewiseSystem& sys, double m0, double dt, long long n_steps) {
    if (m0 < 0.0) throw std::domain_error("m0 must be >= 0 (got " + std::to_string(m0) + ")");
    if (!(dt > 0.0)) throw std::domain_error("dt must be > 0 (got " + std::to_string(dt) + ")");
    if (n_steps <= 0)
        throw std::domain_error("n_steps must be >= 1 (got " + std::to_string(n_steps) + ")");
    auto d = derive(sys);

    Trajectory traj;
    traj.dt_above_recommended = dt > std::min(sys.t_plus, sys.t_minus) / 50.0;
    traj.t.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.m.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.t.push_back(0.0);
    traj.m.push_back(m0);

    double m = m0;
    for (long long k = 0; k < n_steps; ++k) {
        double t_prev = static_cast<double>(k) * dt;
        double k1 = raw_flux(m, sys, d);
        double k2 = raw_flux(m + 0.5 * dt * k1, sys, d);
        double k3 = raw_flux(m + 0.5 * dt * k2, sys, d);
        double k4 = raw_flux(m + dt * k3, sys, d);
        double m_next = m + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        double t_next = static_cast<double>(k + 1) * dt;

        if (m_next <= 0.0) {
            double t_a = m_next < m ? t_prev + dt * (m - 0.0) / (m - m_next) : t_next;
            traj.events.push_back({EventKind::Absorbed, t_a, 0});
            if (m > 0.0) {
                traj.t.push_back(t_a);
                traj.m.push_back(0.0);
            }
            return traj;
        }
        if ((m < d.m_r && m_next >= d.m_r) || (m > d.m_r && m_next <= d.m_r)) {
            double t_x = t_prev + dt * (d.m_r - m) / (m_next - m);
            traj.events.push_back({EventKind::JunctionCross, t_x, m_next > m ? +1 : -1});
        }
        m = m_next;
        traj.t.push_back(t_next);
        traj.m.push_back(m);
    }
    return traj;
}

}  // namespace potdyn
