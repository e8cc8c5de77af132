#include "edl/solver1d.hpp"

#include <algorithm>
#include <cmath>

#include "edl/errors.hpp"

namespace edl {

namespace {

inline double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
}

inline double pressure_v(double v, double gamma) { return std::pow(v, -gamma) / gamma; }

struct Flux {
    double fv, fu;
};

inline Flux phys_flux(double v, double u, double gamma) {
    // p-system: v_t - u_x = 0, u_t + p(v)_x = 0
    return {-u, pressure_v(v, gamma)};
}

inline Flux hll_flux(double vL, double uL, double vR, double uR, double gamma) {
    const double cL = lagrangian_sound_speed(vL, gamma);
    const double cR = lagrangian_sound_speed(vR, gamma);
    const double s = std::max(cL, cR);
    const Flux fL = phys_flux(vL, uL, gamma);
    const Flux fR = phys_flux(vR, uR, gamma);
    // symmetric wave fan [-s, s]
    return {0.5 * (fL.fv + fR.fv) - 0.5 * s * (vR - vL), 0.5 * (fL.fu + fR.fu) - 0.5 * s * (uR - uL)};
}

/// Grow the arrays so that the active window keeps `margin` background cells
/// on each side; the domain is extended with exact background states.
void ensure_margin(PSystemState& s, int margin) {
    if (s.win_lo > s.win_hi) return; // empty window, nothing active
    const bool need_lo = s.win_lo < margin;
    const bool need_hi = s.win_hi > s.g.n - 1 - margin;
    if (!need_lo && !need_hi) return;
    const int chunk = std::max(1024, s.g.n / 2);
    const int add_lo = need_lo ? chunk : 0;
    const int add_hi = need_hi ? chunk : 0;
    const int n_new = s.g.n + add_lo + add_hi;
    Field v(n_new, 1.0), u(n_new, 0.0);
    std::copy(s.v.begin(), s.v.end(), v.begin() + add_lo);
    std::copy(s.u.begin(), s.u.end(), u.begin() + add_lo);
    s.v = std::move(v);
    s.u = std::move(u);
    s.g.x0 -= add_lo * s.g.h;
    s.g.n = n_new;
    s.win_lo += add_lo;
    s.win_hi += add_lo;
}

/// One conservative MUSCL/HLL stage over the active cells [lo, hi]:
/// out = in + dt * L(in). Cells outside [lo-1, hi+1] of `in` are background.
void flux_stage(const Field& v, const Field& u, Field& vo, Field& uo, int lo, int hi, double dt,
                double h, double gamma) {
    const double lam = dt / h;
    const int nf = hi - lo + 2; // faces lo-1/2 .. hi+1/2
    static thread_local std::vector<double> fv, fu;
    fv.resize(nf);
    fu.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const int i = lo + f; // face between cells i-1 and i
        const double svL = 0.5 * minmod(v[i - 1] - v[i - 2], v[i] - v[i - 1]);
        const double suL = 0.5 * minmod(u[i - 1] - u[i - 2], u[i] - u[i - 1]);
        const double svR = 0.5 * minmod(v[i] - v[i - 1], v[i + 1] - v[i]);
        const double suR = 0.5 * minmod(u[i] - u[i - 1], u[i + 1] - u[i]);
        const Flux fl = hll_flux(v[i - 1] + svL, u[i - 1] + suL, v[i] - svR, u[i] - suR, gamma);
        fv[f] = fl.fv;
        fu[f] = fl.fu;
    }
    for (int i = lo; i <= hi; ++i) {
        const int f = i - lo;
        vo[i] = v[i] - lam * (fv[f + 1] - fv[f]);
        uo[i] = u[i] - lam * (fu[f + 1] - fu[f]);
    }
}

void refresh_window(PSystemState& s, int lo, int hi) {
    int a = lo, b = hi;
    while (a <= b && s.v[a] == 1.0 && s.u[a] == 0.0) ++a;
    while (b >= a && s.v[b] == 1.0 && s.u[b] == 0.0) --b;
    s.win_lo = a;
    s.win_hi = b;
}

} // namespace

PSystemState make_initial_data_1d(const Init1D& spec, const EquationParams& p, double h,
                                  double /*t_horizon*/) {
    const Profile pr = get_profile(spec.profile_id, spec.width);
    PSystemState s;
    const int half = static_cast<int>(std::ceil(spec.width / h)) + 8;
    s.g.h = h;
    s.g.n = 2 * half;
    s.g.x0 = -half * h;
    s.v.assign(s.g.n, 1.0);
    s.u.assign(s.g.n, 0.0);
    for (int i = 0; i < s.g.n; ++i) {
        const double x = s.g.center(i);
        const double f = pr.value(std::abs(x));
        if (f == 0.0) continue;
        const double v = 1.0 + p.epsilon * f;
        if (!(v > 0.0)) throw AmplitudeError("make_initial_data_1d: nonpositive specific volume");
        s.v[i] = v;
        s.u[i] = p.epsilon * f;
    }
    refresh_window(s, 0, s.g.n - 1);
    return s;
}

double step_psystem(PSystemState& s, const EquationParams& p, double cfl, const StepOptions1D& opts,
                    double dt_floor, double dt_cap) {
    if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("step_psystem: cfl must be in (0,1)");
    ensure_margin(s, 8);
    const int lo = std::max(0, s.win_lo - 4);
    const int hi = std::min(s.g.n - 1, s.win_hi + 4);

    double cmax = lagrangian_sound_speed(1.0, p.gamma);
    for (int i = s.win_lo; i <= s.win_hi && i >= 0; ++i)
        cmax = std::max(cmax, lagrangian_sound_speed(s.v[i], p.gamma));
    double dt = cfl * s.g.h / cmax;
    if (dt_cap > 0.0) dt = std::min(dt, dt_cap);
    if (dt < dt_floor) throw CFLCollapse(s.t, "step_psystem: dt underflow");

    const double t0 = s.t, t1 = s.t + dt;

    if (opts.damping_enabled) {
        const double fac = p.damping_factor(t0, 0.5 * (t0 + t1));
        for (int i = lo; i <= hi; ++i) s.u[i] *= fac;
    }
    if (opts.flux_enabled && s.win_lo <= s.win_hi) {
        static thread_local Field v1, u1;
        v1 = s.v;
        u1 = s.u;
        flux_stage(s.v, s.u, v1, u1, lo, hi, dt, s.g.h, p.gamma);
        static thread_local Field v2, u2;
        v2 = v1;
        u2 = u1;
        flux_stage(v1, u1, v2, u2, lo, hi, dt, s.g.h, p.gamma);
        for (int i = lo; i <= hi; ++i) {
            s.v[i] = 0.5 * (s.v[i] + v2[i]);
            s.u[i] = 0.5 * (s.u[i] + u2[i]);
            if (!(s.v[i] > 0.0)) throw VacuumError("step_psystem: v <= 0");
        }
    }
    if (opts.damping_enabled) {
        const double fac = p.damping_factor(0.5 * (t0 + t1), t1);
        for (int i = lo; i <= hi; ++i) s.u[i] *= fac;
    }
    s.t = t1;
    refresh_window(s, lo, hi);
    return dt;
}

MonitorSample monitors_1d(const PSystemState& s, const EquationParams& p, double support_tol) {
    MonitorSample m;
    m.t = s.t;
    const double g = p.gamma;
    const double a = p.damping_coeff(s.t);
    double dvx = 0.0, dux = 0.0, vmax = 0.0, umax = 0.0, dtv = 0.0, dtu = 0.0;
    double min_pow = 1.0;
    const int lo = std::max(1, s.win_lo - 1);
    const int hi = std::min(s.g.n - 2, s.win_hi + 1);
    for (int i = lo; i <= hi; ++i) {
        const double vx = (s.v[i + 1] - s.v[i - 1]) / (2.0 * s.g.h);
        const double ux = (s.u[i + 1] - s.u[i - 1]) / (2.0 * s.g.h);
        dvx = std::max(dvx, std::abs(vx));
        dux = std::max(dux, std::abs(ux));
        vmax = std::max(vmax, std::abs(s.v[i] - 1.0));
        umax = std::max(umax, std::abs(s.u[i]));
        dtv = std::max(dtv, std::abs(ux)); // v_t = u_x
        dtu = std::max(dtu, std::abs(std::pow(s.v[i], -g - 1.0) * vx - a * s.u[i]));
        min_pow = std::min(min_pow, std::pow(s.v[i], 1.0 - g));
    }
    m.c1 = dvx + dux + vmax + umax + dtv + dtu;
    m.c1_grad = std::max(dvx, dux);
    m.amp = std::max(vmax, umax);
    m.vacuum_margin = min_pow / (g - 1.0);
    double rad = 0.0;
    for (int i = s.win_lo; i <= s.win_hi && i >= 0; ++i) {
        if (std::abs(s.v[i] - 1.0) > support_tol || std::abs(s.u[i]) > support_tol)
            rad = std::max(rad, std::abs(s.g.center(i)));
    }
    m.support_radius = rad;
    return m;
}

RunOutcome run_to_blowup_1d(const Init1D& spec, const EquationParams& p, double h,
                            const RunConfig1D& cfg) {
    PSystemState s = make_initial_data_1d(spec, p, h, cfg.horizon);
    const double support_tol = std::max(cfg.detector.support_tol_rel * p.epsilon, 1e-300);

    RunOutcome out;
    MonitorSample m0 = monitors_1d(s, p, support_tol);
    BlowupDetector det(cfg.detector, p.gamma, p.epsilon, m0.c1, h);
    if (cfg.observer) cfg.observer(m0);
    det.feed(m0);

    MonitorSample last = m0;
    try {
        while (s.t < cfg.horizon - 1e-12) {
            const int stride = det.near_threshold(last) ? 1 : cfg.monitor_stride;
            double dt = 0.0;
            for (int k = 0; k < stride && s.t < cfg.horizon; ++k) {
                dt = step_psystem(s, p, cfg.cfl, {}, cfg.detector.dt_floor, cfg.horizon - s.t);
                ++out.steps;
            }
            MonitorSample m = monitors_1d(s, p, support_tol);
            m.dt = dt;
            last = m;
            out.max_support_excess =
                std::max(out.max_support_excess, m.support_radius - (spec.width + s.t + 2.0 * h));
            if (cfg.observer) cfg.observer(m);
            if (auto trig = det.feed(m)) {
                out.status = RunStatus::Blowup;
                out.T_b = trig->T_b;
                out.detector_id = trig->detector_id;
                out.detector_value = trig->value;
                out.final_t = s.t;
                return out;
            }
        }
    } catch (const CFLCollapse& e) {
        out.status = RunStatus::Blowup;
        out.T_b = e.t;
        out.detector_id = "cfl-collapse";
        out.detector_value = 0.0;
        out.final_t = s.t;
        return out;
    } catch (const VacuumError&) {
        out.status = RunStatus::Blowup;
        out.T_b = s.t;
        out.detector_id = "vacuum";
        out.detector_value = 0.0;
        out.final_t = s.t;
        return out;
    }
    out.status = RunStatus::Horizon;
    out.final_t = s.t;
    return out;
}

} // namespace edl
