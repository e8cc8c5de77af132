#include <cmath>
#include <random>

#include "doctest.h"
#include "edl/errors.hpp"
#include "edl/model.hpp"

using namespace edl;

namespace {

SoundState2D random_admissible_state(std::mt19937_64& rng, const EquationParams& p, int n) {
    Grid2D g = Grid2D::centered(1.0, 2.0 / n);
    SoundState2D s;
    s.t = 0.0;
    s.g = g;
    s.theta.resize(g.size());
    s.u1.resize(g.size());
    s.u2.resize(g.size());
    std::uniform_real_distribution<double> uth(-0.3 / (p.gamma - 1.0), 0.8);
    std::uniform_real_distribution<double> uu(-0.5, 0.5);
    for (std::size_t i = 0; i < g.size(); ++i) {
        s.theta[i] = uth(rng);
        s.u1[i] = uu(rng);
        s.u2[i] = uu(rng);
    }
    return s;
}

} // namespace

TEST_CASE("theta from rho: background and direct formula") {
    CHECK(theta_from_rho(1.0, 2.0) == doctest::Approx(0.0));
    // gamma = 3, rho = 2: theta = (4-1)/2 = 1.5
    CHECK(theta_from_rho(2.0, 3.0) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("to_sound_state matches pointwise oracle on a random field") {
    std::mt19937_64 rng(7);
    EquationParams p;
    p.gamma = 1.4;
    Grid2D g = Grid2D::centered(1.0, 0.05);
    PrimState2D s;
    s.g = g;
    s.rho.resize(g.size());
    s.m1.resize(g.size());
    s.m2.resize(g.size());
    std::uniform_real_distribution<double> ur(0.3, 2.5), um(-1.0, 1.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        s.rho[i] = ur(rng);
        s.m1[i] = um(rng);
        s.m2[i] = um(rng);
    }
    SoundState2D snd = to_sound_state(s, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double oracle = (std::pow(s.rho[i], 0.4) - 1.0) / 0.4;
        CHECK(snd.theta[i] == doctest::Approx(oracle).epsilon(1e-14));
        CHECK(snd.u1[i] == doctest::Approx(s.m1[i] / s.rho[i]).epsilon(1e-14));
    }
}

TEST_CASE("to_primitive basics") {
    EquationParams p;
    p.gamma = 2.0;
    SoundState2D s;
    s.g = Grid2D::centered(0.5, 0.25);
    s.theta.assign(s.g.size(), 0.2);
    s.u1.assign(s.g.size(), 0.0);
    s.u2.assign(s.g.size(), 0.0);
    PrimState2D out = to_primitive(s, p);
    for (double r : out.rho) CHECK(r == doctest::Approx(1.2).epsilon(1e-14)); // gamma=2: rho = 1+theta

    s.theta.assign(s.g.size(), 0.0);
    out = to_primitive(s, p);
    for (double r : out.rho) CHECK(r == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("round-trip to_primitive . to_sound_state is the identity") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        EquationParams p;
        p.gamma = 1.1 + 0.03 * trial;
        SoundState2D s = random_admissible_state(rng, p, 8);
        PrimState2D prim = to_primitive(s, p);
        SoundState2D back = to_sound_state(prim, p);
        for (std::size_t i = 0; i < s.theta.size(); ++i) {
            CHECK(back.theta[i] == doctest::Approx(s.theta[i]).epsilon(1e-13));
            CHECK(back.u1[i] == doctest::Approx(s.u1[i]).epsilon(1e-13));
            CHECK(back.u2[i] == doctest::Approx(s.u2[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("vacuum guards") {
    EquationParams p;
    p.gamma = 2.0;
    PrimState2D s;
    s.g = Grid2D::centered(0.5, 0.5);
    s.rho.assign(s.g.size(), 1.0);
    s.m1.assign(s.g.size(), 0.0);
    s.m2.assign(s.g.size(), 0.0);
    s.rho[0] = 0.0;
    CHECK_THROWS_AS((void)to_sound_state(s, p), VacuumError);

    SoundState2D snd;
    snd.g = s.g;
    snd.theta.assign(s.g.size(), 0.0);
    snd.u1.assign(s.g.size(), 0.0);
    snd.u2.assign(s.g.size(), 0.0);
    snd.theta[2] = -1.0; // at/below -1/(gamma-1) = -1
    CHECK_THROWS_AS((void)to_primitive(snd, p), VacuumError);
}

TEST_CASE("make_initial_data: trivial and special cases") {
    InitialDataSpec spec;
    Grid2D g = Grid2D::centered(0.8, 0.02);

    EquationParams p;
    p.gamma = 1.4;
    p.epsilon = 0.0;
    SoundState2D s = make_initial_data_2d(spec, p, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(s.theta[i] == 0.0);
        CHECK(s.u1[i] == 0.0);
    }

    // gamma = 2 collapses the Taylor remainder: theta(0,x) = eps*rho0(x) exactly
    p.gamma = 2.0;
    p.epsilon = 0.17;
    s = make_initial_data_2d(spec, p, g);
    const Profile pr = bump_profile(0.5);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double r = std::hypot(g.xc(i), g.yc(j));
            const double expect = p.epsilon * pr.value(r);
            CHECK(s.theta[g.idx(i, j)] == doctest::Approx(expect).epsilon(1e-14));
        }
}

TEST_CASE("make_initial_data: exact map vs pointwise oracle, support, curl") {
    InitialDataSpec spec;
    EquationParams p;
    p.gamma = 1.4;
    p.epsilon = 0.1;
    Grid2D g = Grid2D::centered(0.8, 0.01);
    SoundState2D s = make_initial_data_2d(spec, p, g);

    const Profile pr = bump_profile(0.5);
    double max_theta = 0.0, oracle_max = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double r = std::hypot(g.xc(i), g.yc(j));
            const double th = s.theta[g.idx(i, j)];
            max_theta = std::max(max_theta, th);
            oracle_max = std::max(oracle_max,
                                  (std::pow(1.0 + p.epsilon * pr.value(r), p.gamma - 1.0) - 1.0) /
                                      (p.gamma - 1.0));
            if (r > 0.5) { // identically zero outside the support
                CHECK(th == 0.0);
                CHECK(s.u1[g.idx(i, j)] == 0.0);
                CHECK(s.u2[g.idx(i, j)] == 0.0);
            }
        }
    CHECK(max_theta == doctest::Approx(oracle_max).epsilon(1e-13));

    // discrete curl of u0 = grad(phi) is O(h^2): compare two resolutions
    auto max_curl = [&](double h) {
        Grid2D gg = Grid2D::centered(0.8, h);
        SoundState2D ss = make_initial_data_2d(spec, p, gg);
        double mc = 0.0;
        for (int j = 1; j < gg.ny - 1; ++j)
            for (int i = 1; i < gg.nx - 1; ++i) {
                const double cu = (ss.u2[gg.idx(i + 1, j)] - ss.u2[gg.idx(i - 1, j)] -
                                   ss.u1[gg.idx(i, j + 1)] + ss.u1[gg.idx(i, j - 1)]) /
                                  (2.0 * gg.h);
                mc = std::max(mc, std::abs(cu));
            }
        return mc;
    };
    const double c1 = max_curl(0.01), c2 = max_curl(0.005);
    CHECK(c2 < c1 / 3.0); // ~ factor 4 for O(h^2)
}

TEST_CASE("make_initial_data: amplitude guard") {
    InitialDataSpec spec;
    spec.profile_id = "well"; // negative bump
    EquationParams p;
    p.gamma = 1.4;
    p.epsilon = 1.5;
    Grid2D g = Grid2D::centered(0.8, 0.05);
    CHECK_THROWS_AS((void)make_initial_data_2d(spec, p, g), AmplitudeError);
}
