#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "edl/symalg.hpp"

namespace edl {

struct IdentityCase {
    std::string id;
    double residual = 0.0; // max relative residual over all fields/points
    double scale = 0.0;    // magnitude the residual was measured against
    bool pass = false;
    std::string witness; // failing field/point description, empty on pass
};

struct IdentityReport {
    std::vector<IdentityCase> cases;
    bool all_pass = true;
    double tol = 1e-12;
};

/// Commutator and hat-Z/damping identity suite evaluated with exact symbolic
/// derivatives on random polynomial fields of degree <= 5, plus evaluation at
/// random (t,x) points. Identities are algebraic; tolerance is 1e-12 relative.
IdentityReport check_commutators(int n_fields, std::uint64_t seed);

/// D_damp1(alpha, f) = hatZ^a((1+t)^-1 d_t f) - (1+t)^-1 d_t Z^a f  (theta display)
Poly damping_commutator_dt(const std::array<int, 5>& alpha, const Poly& f);
/// D_damp2(alpha, f) = hatZ^a((1+t)^-2 f) - (1+t)^-2 Z^a f          (u display)
Poly damping_commutator_quad(const std::array<int, 5>& alpha, const Poly& f);

/// Closed-form right sides of the two displays. The j-sum over the d_t block
/// carries (-1)^j from [d_t^(j), (1+t)^-k]; the printed displays omit it.
Poly damping_display_rhs_dt(const std::array<int, 5>& alpha, const Poly& f);
Poly damping_display_rhs_quad(const std::array<int, 5>& alpha, const Poly& f);

struct ForcingDecompCase {
    std::string id;
    std::array<int, 5> alpha{};
    double residual = 0.0;
    double scale = 0.0;
    bool pass = false;
    double decay_exponent = 0.0; // fitted t-decay of the damping error term, ~ -2
};

struct ForcingDecompReport {
    std::vector<ForcingDecompCase> cases;
    bool all_pass = true;
};

/// Verifies F_Phi^(alpha) - hatZ^alpha F_Phi against the closed-form displays
/// for |alpha| <= cap on random polynomial fields, and fits the (1+t)^-2 decay
/// of the error term over t in [1, 100].
ForcingDecompReport check_forcing_decomposition(int cap, double mu, std::uint64_t seed);

} // namespace edl
