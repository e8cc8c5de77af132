#include <cmath>

#include "doctest.h"
#include "edl/identities.hpp"

using namespace edl;

TEST_CASE("hatZ3 damping relation on a cubic field") {
    // hatZ3((1+t)^-1 d_t f) - (1+t)^-1 d_t Z3 f = (1+t)^-2 d_t f, f random cubic
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10; ++k) {
        const Poly f = random_poly(rng, 3);
        const Poly lhs = damping_commutator_dt({0, 0, 0, 1, 0}, f);
        const Poly rhs = poly_tau(-2) * f.dt();
        const Poly res = lhs - rhs;
        for (double t : {0.0, 1.0, 4.0})
            CHECK(std::abs(res.eval(t, 0.7, -1.3)) <= 1e-12 * (1.0 + std::abs(lhs.eval(t, 0.7, -1.3))));
    }
}

TEST_CASE("forcing decomposition: alpha = e0 on f = t^3") {
    // residual F^(a) - hatZ^a F = mu (1+t)^-2 d_t f for one time derivative
    const double mu = 0.8;
    const Poly f = poly_t() * poly_t() * poly_t();
    const Poly res = -mu * damping_commutator_dt({1, 0, 0, 0, 0}, f);
    const Poly expect = mu * (poly_tau(-2) * f.dt()); // = 3 mu t^2/(1+t)^2
    CHECK((res - expect).zero());
    CHECK(res.eval(2.0, 0.0, 0.0) == doctest::Approx(mu * 12.0 / 9.0));
}

TEST_CASE("forcing decomposition vanishes when alpha has no t or scaling part") {
    std::mt19937_64 rng(5);
    const Poly f = random_poly(rng, 4);
    for (std::array<int, 5> a : {std::array<int, 5>{0, 0, 0, 0, 0}, {0, 2, 1, 0, 1}, {0, 0, 0, 0, 2}}) {
        CHECK(damping_commutator_dt(a, f).zero());
        CHECK(damping_commutator_quad(a, f).zero());
    }
}

TEST_CASE("commutator suite passes at 1e-12 on random polynomial fields") {
    IdentityReport rep = check_commutators(20, 12345);
    for (const auto& c : rep.cases) {
        INFO(c.id, " residual=", c.residual, " witness=", c.witness);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass);
}

TEST_CASE("forcing decomposition suite: identities exact, decay ~ (1+t)^-2") {
    ForcingDecompReport rep = check_forcing_decomposition(2, 0.7, 99);
    CHECK(rep.all_pass);
    bool saw_decay = false;
    for (const auto& c : rep.cases) {
        INFO(c.id);
        CHECK(c.pass);
        if (c.alpha[0] + c.alpha[3] > 0 && c.decay_exponent != 0.0) {
            saw_decay = true;
            // the damping error gain decays at least like (1+t)^-2
            CHECK(c.decay_exponent <= -1.85);
        }
    }
    CHECK(saw_decay);
}
