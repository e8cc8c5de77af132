#include "edl/model.hpp"

#include <cmath>

#include "edl/errors.hpp"

namespace edl {

namespace {

void check_rho_positive(const Field& rho) {
    for (double r : rho)
        if (!(r > 0.0)) throw VacuumError("to_sound_state: nonpositive density");
}

void check_theta_admissible(const Field& theta, double gamma) {
    const double floor = -1.0 / (gamma - 1.0);
    for (double th : theta)
        if (!(th > floor)) throw VacuumError("to_primitive: theta at or below vacuum");
}

} // namespace

SoundState2D to_sound_state(const PrimState2D& s, const EquationParams& p) {
    check_rho_positive(s.rho);
    SoundState2D out;
    out.t = s.t;
    out.g = s.g;
    const std::size_t n = s.rho.size();
    out.theta.resize(n);
    out.u1.resize(n);
    out.u2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.theta[i] = theta_from_rho(s.rho[i], p.gamma);
        out.u1[i] = s.m1[i] / s.rho[i];
        out.u2[i] = s.m2[i] / s.rho[i];
    }
    return out;
}

PrimState2D to_primitive(const SoundState2D& s, const EquationParams& p) {
    check_theta_admissible(s.theta, p.gamma);
    PrimState2D out;
    out.t = s.t;
    out.g = s.g;
    const std::size_t n = s.theta.size();
    out.rho.resize(n);
    out.m1.resize(n);
    out.m2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = rho_from_theta(s.theta[i], p.gamma);
        out.rho[i] = rho;
        out.m1[i] = rho * s.u1[i];
        out.m2[i] = rho * s.u2[i];
    }
    return out;
}

RadialSoundState to_sound_state(const RadialPrimState& s, const EquationParams& p) {
    check_rho_positive(s.rho);
    RadialSoundState out;
    out.t = s.t;
    out.g = s.g;
    const std::size_t n = s.rho.size();
    out.theta.resize(n);
    out.ur.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.theta[i] = theta_from_rho(s.rho[i], p.gamma);
        out.ur[i] = s.mru[i] / s.rho[i];
    }
    return out;
}

RadialPrimState to_primitive(const RadialSoundState& s, const EquationParams& p) {
    check_theta_admissible(s.theta, p.gamma);
    RadialPrimState out;
    out.t = s.t;
    out.g = s.g;
    const std::size_t n = s.theta.size();
    out.rho.resize(n);
    out.mru.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rho = rho_from_theta(s.theta[i], p.gamma);
        out.rho[i] = rho;
        out.mru[i] = rho * s.ur[i];
    }
    return out;
}

Profile bump_profile(double radius) {
    Profile pr;
    pr.radius = radius;
    const double R2 = radius * radius;
    pr.value = [R2](double r) {
        const double q = r * r / R2;
        if (q >= 1.0) return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - q));
    };
    pr.deriv = [R2](double r) {
        const double q = r * r / R2;
        if (q >= 1.0) return 0.0;
        const double om = 1.0 - q;
        return std::exp(1.0 - 1.0 / om) * (-2.0 * r / R2) / (om * om);
    };
    return pr;
}

Profile get_profile(const std::string& id, double radius) {
    if (id == "bump") return bump_profile(radius);
    if (id == "well") {
        Profile pr = bump_profile(radius);
        auto v = pr.value;
        auto d = pr.deriv;
        pr.value = [v](double r) { return -v(r); };
        pr.deriv = [d](double r) { return -d(r); };
        return pr;
    }
    throw ConfigError("unknown profile id: " + id);
}

namespace {

double theta0_exact(double rho0, const EquationParams& p) {
    const double base = 1.0 + p.epsilon * rho0;
    if (!(base > 0.0)) throw AmplitudeError("make_initial_data: 1 + eps*rho0 <= 0");
    return (std::pow(base, p.gamma - 1.0) - 1.0) / (p.gamma - 1.0);
}

} // namespace

SoundState2D make_initial_data_2d(const InitialDataSpec& spec, const EquationParams& p, const Grid2D& g) {
    const Profile pr = get_profile(spec.profile_id, spec.support_radius);
    SoundState2D s;
    s.t = 0.0;
    s.g = g;
    s.theta.assign(g.size(), 0.0);
    s.u1.assign(g.size(), 0.0);
    s.u2.assign(g.size(), 0.0);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.xc(i), y = g.yc(j);
            const double r = std::hypot(x, y);
            if (r >= spec.support_radius) continue;
            const std::size_t k = g.idx(i, j);
            s.theta[k] = theta0_exact(pr.value(r), p);
            // u0 = eps * grad(phi) = eps * phi'(r) * x/r
            const double dphi = pr.deriv(r);
            if (r > 0.0) {
                s.u1[k] = p.epsilon * dphi * x / r;
                s.u2[k] = p.epsilon * dphi * y / r;
            }
        }
    }
    return s;
}

RadialSoundState make_initial_data_radial(const InitialDataSpec& spec, const EquationParams& p,
                                          const RadialGrid& g) {
    const Profile pr = get_profile(spec.profile_id, spec.support_radius);
    RadialSoundState s;
    s.t = 0.0;
    s.g = g;
    s.theta.assign(static_cast<std::size_t>(g.n), 0.0);
    s.ur.assign(static_cast<std::size_t>(g.n), 0.0);
    for (int i = 0; i < g.n; ++i) {
        const double r = g.center(i);
        if (r >= spec.support_radius) continue;
        s.theta[i] = theta0_exact(pr.value(r), p);
        s.ur[i] = p.epsilon * pr.deriv(r);
    }
    return s;
}

} // namespace edl
