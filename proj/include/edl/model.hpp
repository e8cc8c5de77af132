#pragma once

#include <functional>
#include <string>

#include "edl/grid.hpp"
#include "edl/params.hpp"

namespace edl {

// ---------------------------------------------------------------------------
// State types
// ---------------------------------------------------------------------------

/// Conserved (rho, rho*u) fields on a 2-D Cartesian grid.
struct PrimState2D {
    double t = 0.0;
    Grid2D g;
    Field rho, m1, m2;
};

/// Normalized sound-speed perturbation theta and velocity u on a 2-D grid.
struct SoundState2D {
    double t = 0.0;
    Grid2D g;
    Field theta, u1, u2;
};

/// Radial conserved state: density and radial momentum rho*u_r.
struct RadialPrimState {
    double t = 0.0;
    RadialGrid g;
    Field rho, mru;
};

struct RadialSoundState {
    double t = 0.0;
    RadialGrid g;
    Field theta, ur;
};

// ---------------------------------------------------------------------------
// rho <-> theta change of variables
// ---------------------------------------------------------------------------

/// theta = (rho^(gamma-1) - 1)/(gamma - 1).
inline double theta_from_rho(double rho, double gamma) {
    return (std::pow(rho, gamma - 1.0) - 1.0) / (gamma - 1.0);
}

/// rho = ((gamma-1) theta + 1)^(1/(gamma-1)); requires theta > -1/(gamma-1).
inline double rho_from_theta(double theta, double gamma) {
    return std::pow((gamma - 1.0) * theta + 1.0, 1.0 / (gamma - 1.0));
}

inline double sound_speed(double rho, double gamma) { return std::pow(rho, 0.5 * (gamma - 1.0)); }

inline double pressure(double rho, double gamma) { return std::pow(rho, gamma) / gamma; }

SoundState2D to_sound_state(const PrimState2D& s, const EquationParams& p);
PrimState2D to_primitive(const SoundState2D& s, const EquationParams& p);
RadialSoundState to_sound_state(const RadialPrimState& s, const EquationParams& p);
RadialPrimState to_primitive(const RadialSoundState& s, const EquationParams& p);

// ---------------------------------------------------------------------------
// Initial data
// ---------------------------------------------------------------------------

/// Compactly supported radial profile with closed-form value and derivative.
struct Profile {
    std::function<double(double)> value; // f(r)
    std::function<double(double)> deriv; // f'(r)
    double radius = 0.5;
};

/// The standard C^inf bump exp(1 - 1/(1-(r/R)^2)) for r < R, 0 outside; max = 1.
Profile bump_profile(double radius);

/// Named compactly supported profile families. "bump" is the default;
/// "well" is its negation (used to exercise the amplitude guard).
Profile get_profile(const std::string& id, double radius);

struct InitialDataSpec {
    std::string profile_id = "bump";
    double support_radius = 0.5; // fixed at 1/2 for the 2-D theory
};

/// Initial (theta, u) with the exact nonlinear map
/// theta(0,x) = [(1 + eps rho0)^(gamma-1) - 1]/(gamma-1) and u(0,x) = eps grad(phi),
/// with rho0 = phi = the named profile. Throws AmplitudeError if 1 + eps rho0 <= 0.
SoundState2D make_initial_data_2d(const InitialDataSpec& spec, const EquationParams& p, const Grid2D& g);
RadialSoundState make_initial_data_radial(const InitialDataSpec& spec, const EquationParams& p,
                                          const RadialGrid& g);

} // namespace edl
