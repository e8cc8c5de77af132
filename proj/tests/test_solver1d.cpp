#include <cmath>
#include <numeric>

#include "doctest.h"
#include "edl/errors.hpp"
#include "edl/solver1d.hpp"

using namespace edl;

TEST_CASE("constant state is an exact equilibrium") {
    EquationParams p;
    p.gamma = 2.0;
    p.mu = 1.0;
    p.epsilon = 0.0;
    PSystemState s = make_initial_data_1d({}, p, 0.05, 10.0);
    for (int k = 0; k < 50; ++k) step_psystem(s, p, 0.4);
    for (int i = 0; i < s.g.n; ++i) {
        CHECK(s.v[i] == 1.0);
        CHECK(s.u[i] == 0.0);
    }
}

TEST_CASE("mu=0: cell sums of v and u are conserved to round-off") {
    EquationParams p;
    p.gamma = 2.0;
    p.mu = 0.0;
    p.epsilon = 0.2;
    PSystemState s = make_initial_data_1d({}, p, 0.01, 10.0);
    const double sv0 = std::accumulate(s.v.begin(), s.v.end(), 0.0);
    const double su0 = std::accumulate(s.u.begin(), s.u.end(), 0.0);
    const int n0 = s.g.n;
    for (int k = 0; k < 100; ++k) step_psystem(s, p, 0.4);
    // domain may have grown with exact background; subtract the added cells
    const double sv = std::accumulate(s.v.begin(), s.v.end(), 0.0) - (s.g.n - n0);
    const double su = std::accumulate(s.u.begin(), s.u.end(), 0.0);
    CHECK(sv == doctest::Approx(sv0).epsilon(1e-13));
    CHECK(su == doctest::Approx(su0).epsilon(1e-12));
}

TEST_CASE("damping substep is exact for the linear ODE (flux disabled)") {
    EquationParams p;
    p.gamma = 2.0;
    p.mu = 1.0;
    p.epsilon = 0.3;
    PSystemState s = make_initial_data_1d({}, p, 0.05, 10.0);
    const Field u0 = s.u;
    StepOptions1D opts;
    opts.flux_enabled = false;
    while (s.t < 3.0 - 1e-12) step_psystem(s, p, 0.4, opts, 1e-12, 3.0 - s.t);
    CHECK(s.t == doctest::Approx(3.0).epsilon(1e-12));
    // u(t) = u(0) / (1+t) for mu = 1, lambda = 1
    for (int i = 0; i < s.g.n; ++i)
        if (u0[i] != 0.0) CHECK(s.u[i] == doctest::Approx(u0[i] / 4.0).epsilon(1e-12));
}

TEST_CASE("lambda != 1 damping factor uses the generalized exact integral") {
    EquationParams p;
    p.mu = 0.5;
    p.lambda = 2.0;
    // exp(-mu [ (1+t)^{-1} from 0 to 3 ]) = exp(-0.5 (1 - 1/4))
    CHECK(p.damping_factor(0.0, 3.0) == doctest::Approx(std::exp(-0.375)).epsilon(1e-14));
}

TEST_CASE("epsilon=0 runs to horizon without detection") {
    EquationParams p;
    p.gamma = 2.0;
    p.mu = 0.0;
    p.epsilon = 0.0;
    RunConfig1D cfg;
    cfg.horizon = 2.0;
    RunOutcome out = run_to_blowup_1d({}, p, 0.05, cfg);
    CHECK(out.status == RunStatus::Horizon);
}

TEST_CASE("blow-up time converges under refinement") {
    EquationParams p;
    p.gamma = 2.0;
    p.mu = 0.0;
    p.epsilon = 0.3;
    RunConfig1D cfg;
    cfg.horizon = 100.0;
    Init1D spec;
    const double t1 = run_to_blowup_1d(spec, p, 0.02, cfg).T_b;
    const double t2 = run_to_blowup_1d(spec, p, 0.01, cfg).T_b;
    const double t3 = run_to_blowup_1d(spec, p, 0.005, cfg).T_b;
    CHECK(t1 > 0.0);
    CHECK(std::abs(t3 - t2) < std::abs(t2 - t1));
    CHECK(std::abs(t2 - t1) / t2 < 0.15);
}

TEST_CASE("support stays within the finite-speed bound") {
    EquationParams p;
    p.gamma = 2.0;
    p.mu = 0.5;
    p.epsilon = 0.2;
    RunConfig1D cfg;
    cfg.horizon = 50.0;
    RunOutcome out = run_to_blowup_1d({}, p, 0.01, cfg);
    CHECK(out.status == RunStatus::Blowup);
    CHECK(out.max_support_excess <= 0.0);
}
