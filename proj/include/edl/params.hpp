#pragma once

#include <cmath>

#include "edl/errors.hpp"

namespace edl {

/// Physical and model constants of the damped Euler system.
/// The damping coefficient is mu/(1+t)^lambda; lambda = 1 is the critical case.
struct EquationParams {
    double mu = 0.0;      // damping strength, validated range [0, 2]
    double gamma = 2.0;   // adiabatic index, > 1
    double epsilon = 0.1; // perturbation amplitude
    double lambda = 1.0;  // damping decay exponent, 1 unless overridden for regime tests

    static constexpr double bar_rho = 1.0; // background density
    static constexpr double bar_c = 1.0;   // background sound speed, bar_rho^((gamma-1)/2)

    void validate() const {
        if (!(gamma > 1.0)) throw ConfigError("EquationParams: gamma must be > 1");
        if (!(epsilon >= 0.0)) throw ConfigError("EquationParams: epsilon must be >= 0");
        if (!(mu >= 0.0 && mu <= 2.0)) throw ConfigError("EquationParams: mu must be in [0,2]");
        if (!(lambda >= 0.0)) throw ConfigError("EquationParams: lambda must be >= 0");
    }

    double damping_coeff(double t) const { return mu / std::pow(1.0 + t, lambda); }

    /// Exact damping factor over [t0, t1]: exp(-int_{t0}^{t1} mu/(1+s)^lambda ds).
    double damping_factor(double t0, double t1) const {
        if (mu == 0.0) return 1.0;
        if (lambda == 1.0) return std::pow((1.0 + t0) / (1.0 + t1), mu);
        const double a = 1.0 - lambda;
        return std::exp(-mu * (std::pow(1.0 + t1, a) - std::pow(1.0 + t0, a)) / a);
    }
};

} // namespace edl
