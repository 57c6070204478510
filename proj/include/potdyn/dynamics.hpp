#pragma once

#include <optional>
#include <string>
#include <vector>

namespace potdyn {

// Piecewise-linear production/consumption system. The same algebra serves
// biomass stocks, goods, and employment; stock_unit is metadata only.
struct PiecewiseSystem {
    double p_plus;    // saturated production rate, stock-units / year
    double p_minus;   // stock-independent consumption rate, stock-units / year
    double t_plus;    // turnover time via production, years
    double t_minus;   // turnover time via consumption, years
    std::string stock_unit;
};

// Throws std::domain_error naming the offending field.
void validate(const PiecewiseSystem& sys);

struct DerivedQuantities {
    double m_s;     // upper stationary stock, p_plus * t_minus
    double m_u;     // lower stationary stock, p_minus * t_plus
    double m_r;     // junction stock, weakly between m_u and m_s
    double alpha;   // m_u / m_s
    double r;       // potential continuity constant, m_r^2 (t_plus + t_minus) / (2 t_plus t_minus)
};

enum class Regime { Bistable, Inflection, NonStationary };

struct RegimeClass {
    Regime tag;
    double alpha;
};

const char* regime_name(Regime tag);

enum class PointKind { StableMinimum, UnstableMaximum, InflectionPoint, AbsorbingBoundary };

const char* point_kind_name(PointKind kind);

struct StationaryPoint {
    double location;
    PointKind kind;
};

DerivedQuantities derive(const PiecewiseSystem& sys);

// (m_s - m)/t_minus for m >= m_r, (m - m_u)/t_plus below; continuous at m_r.
double flux(double m, const PiecewiseSystem& sys);

// One branch only, no junction switching. upper_branch selects the
// consumption-relaxation form (m_s - m)/t_minus; employment dynamics
// delegates here under symbol renaming.
double branch_flux(double m, const PiecewiseSystem& sys, bool upper_branch);

// Branch form of the potential; U(0) = 0, continuous at m_r by construction of r.
double potential(double m, const PiecewiseSystem& sys);

// Sorted by location. m = 0 is an absorbing boundary, not an extremum: the
// lower-branch flux is negative there, not zero.
std::vector<StationaryPoint> stationary_points(const PiecewiseSystem& sys);

// tol is relative on |alpha - 1|.
RegimeClass classify_regime(const PiecewiseSystem& sys, double tol = 1e-9);

struct ClosedFormState {
    double m;
    std::optional<double> junction_crossing;  // first m_r crossing time, if before t
    std::optional<double> absorption;         // absorption time, if reached before t
};

// Analytic solution of the linear branches, chained across at most one
// junction crossing; absorbed trajectories hold m = 0 afterwards.
ClosedFormState closed_form_state(const PiecewiseSystem& sys, double m0, double t);

enum class EventKind { JunctionCross, Absorbed, Breakdown };

struct Event {
    EventKind kind;
    double t;       // linearly interpolated within the step
    int direction;  // +1 upward, -1 downward, 0 not applicable
};

struct Trajectory {
    std::vector<double> t;
    std::vector<double> m;
    std::vector<Event> events;
    bool dt_above_recommended = false;  // dt > min(t_plus, t_minus)/50
};

// Classic fixed-step RK4 on flux. Absorption halts integration with m
// clamped to 0; the kink at m_r is stepped over (flux is continuous).
Trajectory integrate(const PiecewiseSystem& sys, double m0, double dt, long long n_steps);

}  // namespace potdyn
