#pragma once

#include <functional>

#include "edl/detector.hpp"
#include "edl/grid.hpp"
#include "edl/model.hpp"
#include "edl/params.hpp"

namespace edl {

/// Damped p-system state: specific volume v = 1/rho and velocity u on [x0, x0+n*h].
struct PSystemState {
    double t = 0.0;
    Grid1D g;
    Field v, u;
    // cells outside [win_lo, win_hi] are exactly the background (1, 0)
    int win_lo = 0, win_hi = -1;
};

struct Init1D {
    std::string profile_id = "bump";
    double width = 0.5; // support half-width of the 1-D profile
};

struct StepOptions1D {
    bool flux_enabled = true;    // test hook: damping-only integration
    bool damping_enabled = true; // test hook: flux-only integration
};

/// Lagrangian sound speed of the p-system, sqrt(-p'(v)) = v^{-(gamma+1)/2}.
inline double lagrangian_sound_speed(double v, double gamma) {
    return std::pow(v, -0.5 * (gamma + 1.0));
}

/// v(0,x) = 1 + eps*profile, u(0,x) = eps*profile; domain sized so that waves
/// never reach the boundary before t_horizon.
PSystemState make_initial_data_1d(const Init1D& spec, const EquationParams& p, double h,
                                  double t_horizon);

/// One Strang-split step: exact damping half-step, second-order MUSCL/HLL flux
/// step, exact damping half-step. Returns the dt actually taken.
/// Throws VacuumError if v <= 0 appears, CFLCollapse if dt underflows dt_floor.
double step_psystem(PSystemState& s, const EquationParams& p, double cfl,
                    const StepOptions1D& opts = {}, double dt_floor = 1e-12,
                    double dt_cap = 0.0);

MonitorSample monitors_1d(const PSystemState& s, const EquationParams& p, double support_tol);

struct RunConfig1D {
    double cfl = 0.4;
    double horizon = 1e4;
    DetectorConfig detector;
    /// optional per-sample observer (EnergyReport emission, tests)
    std::function<void(const MonitorSample&)> observer;
    int monitor_stride = 4; // steps between monitor samples away from threshold
};

/// Integrates to blow-up or horizon; support bound W + t + 2h is monitored.
RunOutcome run_to_blowup_1d(const Init1D& spec, const EquationParams& p, double h,
                            const RunConfig1D& cfg);

} // namespace edl
