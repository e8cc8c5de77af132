#include "edl/identities.hpp"

#include <cmath>
#include <functional>

namespace edl {

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Max |residual(t,x)| over sample points, and the evaluation scale.
struct PointCheck {
    double residual = 0.0;
    double scale = 1.0;
    double worst_t = 0.0, worst_x1 = 0.0, worst_x2 = 0.0;
};

PointCheck eval_residual(const Poly& lhs, const Poly& rhs, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ut(0.0, 5.0), ux(-2.0, 2.0);
    PointCheck pc;
    for (int i = 0; i < 100; ++i) {
        const double t = ut(rng), x1 = ux(rng), x2 = ux(rng);
        const double a = lhs.eval(t, x1, x2), b = rhs.eval(t, x1, x2);
        const double r = std::abs(a - b);
        pc.scale = std::max({pc.scale, std::abs(a), std::abs(b)});
        if (r > pc.residual) {
            pc.residual = r;
            pc.worst_t = t;
            pc.worst_x1 = x1;
            pc.worst_x2 = x2;
        }
    }
    return pc;
}

} // namespace

Poly damping_commutator_dt(const std::array<int, 5>& alpha, const Poly& f) {
    const Poly inner = poly_tau(-1) * f.dt();
    return apply_Z_alpha(alpha, inner, true) - poly_tau(-1) * apply_Z_alpha(alpha, f, false).dt();
}

Poly damping_commutator_quad(const std::array<int, 5>& alpha, const Poly& f) {
    const Poly inner = poly_tau(-2) * f;
    return apply_Z_alpha(alpha, inner, true) - poly_tau(-2) * apply_Z_alpha(alpha, f, false);
}

Poly damping_display_rhs_dt(const std::array<int, 5>& alpha, const Poly& f) {
    Poly rhs;
    const int a0 = alpha[0], a3 = alpha[3];
    if (a0 > 0) {
        for (int j = 1; j <= a0; ++j) {
            auto beta = alpha;
            beta[0] -= j;
            const double c = factorial(a0) / factorial(a0 - j) * ((j % 2) ? -1.0 : 1.0);
            rhs += c * (poly_tau(-(j + 1)) * apply_Z_alpha(beta, f, false).dt());
        }
    }
    if (a3 > 0) {
        for (int j = 0; j < a3; ++j) {
            std::array<int, 5> je3{0, 0, 0, j, 0};
            auto beta = alpha;
            beta[3] -= j + 1;
            const Poly inner = poly_tau(-2) * apply_Z_alpha(je3, f, false).dt();
            rhs += apply_Z_alpha(beta, inner, true);
        }
    }
    return rhs;
}

Poly damping_display_rhs_quad(const std::array<int, 5>& alpha, const Poly& f) {
    Poly rhs;
    const int a0 = alpha[0], a3 = alpha[3];
    if (a0 > 0) {
        for (int j = 1; j <= a0; ++j) {
            auto beta = alpha;
            beta[0] -= j;
            const double c = factorial(a0) * (j + 1) / factorial(a0 - j) * ((j % 2) ? -1.0 : 1.0);
            rhs += c * (poly_tau(-(j + 2)) * apply_Z_alpha(beta, f, false));
        }
    }
    if (a3 > 0) {
        for (int j = 0; j < a3; ++j) {
            std::array<int, 5> je3{0, 0, 0, j, 0};
            auto beta = alpha;
            beta[3] -= j + 1;
            const Poly inner = 2.0 * (poly_tau(-3) * apply_Z_alpha(je3, f, false));
            rhs += apply_Z_alpha(beta, inner, true);
        }
    }
    return rhs;
}

IdentityReport check_commutators(int n_fields, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IdentityReport report;

    struct Item {
        std::string id;
        std::function<Poly(const Poly&)> lhs;
        std::function<Poly(const Poly&)> rhs;
    };

    std::vector<Item> items;
    const char* dnames[3] = {"dt", "d1", "d2"};
    const std::function<Poly(const Poly&)> dops[3] = {
        [](const Poly& f) { return op_dt(f); },
        [](const Poly& f) { return op_d1(f); },
        [](const Poly& f) { return op_d2(f); },
    };

    // [d, S-1] = d
    for (int i = 0; i < 3; ++i) {
        auto d = dops[i];
        items.push_back({std::string("[") + dnames[i] + ",S-1]=" + dnames[i],
                         [d](const Poly& f) { return d(op_Sm1(f)) - op_Sm1(d(f)); },
                         [d](const Poly& f) { return d(f); }});
    }
    // [d_i, Omega] = eps_ij d_j
    items.push_back({"[d1,Omega]=d2",
                     [](const Poly& f) { return op_d1(op_Omega(f)) - op_Omega(op_d1(f)); },
                     [](const Poly& f) { return op_d2(f); }});
    items.push_back({"[d2,Omega]=-d1",
                     [](const Poly& f) { return op_d2(op_Omega(f)) - op_Omega(op_d2(f)); },
                     [](const Poly& f) { return -1.0 * op_d1(f); }});
    // [S, Omega] = 0
    items.push_back({"[S,Omega]=0",
                     [](const Poly& f) { return op_S(op_Omega(f)) - op_Omega(op_S(f)); },
                     [](const Poly&) { return Poly{}; }});
    // wave operator relations
    for (int i = 0; i < 3; ++i) {
        auto d = dops[i];
        items.push_back({std::string("[") + dnames[i] + ",Box]=0",
                         [d](const Poly& f) { return d(op_box(f)) - op_box(d(f)); },
                         [](const Poly&) { return Poly{}; }});
    }
    items.push_back({"[Omega,Box]=0",
                     [](const Poly& f) { return op_Omega(op_box(f)) - op_box(op_Omega(f)); },
                     [](const Poly&) { return Poly{}; }});
    items.push_back({"[S,Box]=-2Box",
                     [](const Poly& f) { return op_S(op_box(f)) - op_box(op_S(f)); },
                     [](const Poly& f) { return -2.0 * op_box(f); }});
    // hatZ3 Box f = Box Z3 f
    items.push_back({"hatZ3.Box=Box.Z3",
                     [](const Poly& f) { return op_Sp1(op_box(f)); },
                     [](const Poly& f) { return op_box(op_Sm1(f)); }});
    // hatZ3((1+t)^-1 dt f) - (1+t)^-1 dt Z3 f = (1+t)^-2 dt f
    items.push_back({"hatZ3-damping-dt",
                     [](const Poly& f) { return damping_commutator_dt({0, 0, 0, 1, 0}, f); },
                     [](const Poly& f) { return poly_tau(-2) * f.dt(); }});
    // hatZ3((1+t)^-2 f) - (1+t)^-2 Z3 f = 2(1+t)^-3 f
    items.push_back({"hatZ3-damping-quad",
                     [](const Poly& f) { return damping_commutator_quad({0, 0, 0, 1, 0}, f); },
                     [](const Poly& f) { return 2.0 * (poly_tau(-3) * f); }});
    // iterated hatZ3^k displays, k = 2, 3
    for (int k = 2; k <= 3; ++k) {
        std::array<int, 5> alpha{0, 0, 0, k, 0};
        items.push_back({"hatZ3^" + std::to_string(k) + "-damping-dt",
                         [alpha](const Poly& f) { return damping_commutator_dt(alpha, f); },
                         [alpha](const Poly& f) { return damping_display_rhs_dt(alpha, f); }});
        items.push_back({"hatZ3^" + std::to_string(k) + "-damping-quad",
                         [alpha](const Poly& f) { return damping_commutator_quad(alpha, f); },
                         [alpha](const Poly& f) { return damping_display_rhs_quad(alpha, f); }});
    }
    // general multi-index corollary displays and hatZ^a Box = Box Z^a
    const std::vector<std::array<int, 5>> alphas = {
        {1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 1, 0},
        {1, 1, 0, 1, 0}, {0, 1, 0, 2, 0}, {2, 0, 1, 0, 1}, {1, 0, 0, 2, 0},
    };
    for (const auto& a : alphas) {
        std::string tag = "a=(" + std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) +
                          std::to_string(a[3]) + std::to_string(a[4]) + ")";
        items.push_back({"hatZ^a.Box=Box.Z^a " + tag,
                         [a](const Poly& f) { return apply_Z_alpha(a, op_box(f), true); },
                         [a](const Poly& f) { return op_box(apply_Z_alpha(a, f, false)); }});
        items.push_back({"Z-damping-display-dt " + tag,
                         [a](const Poly& f) { return damping_commutator_dt(a, f); },
                         [a](const Poly& f) { return damping_display_rhs_dt(a, f); }});
        items.push_back({"Z-damping-display-quad " + tag,
                         [a](const Poly& f) { return damping_commutator_quad(a, f); },
                         [a](const Poly& f) { return damping_display_rhs_quad(a, f); }});
    }

    std::vector<Poly> fields;
    fields.reserve(n_fields);
    for (int i = 0; i < n_fields; ++i) fields.push_back(random_poly(rng, 5));

    for (const auto& item : items) {
        IdentityCase c;
        c.id = item.id;
        for (std::size_t fi = 0; fi < fields.size(); ++fi) {
            const Poly lhs = item.lhs(fields[fi]);
            const Poly rhs = item.rhs(fields[fi]);
            const PointCheck pc = eval_residual(lhs, rhs, rng);
            const double rel = pc.residual / pc.scale;
            if (rel > c.residual) {
                c.residual = rel;
                c.scale = pc.scale;
                if (rel > report.tol)
                    c.witness = "field " + std::to_string(fi) + " at t=" + std::to_string(pc.worst_t) +
                                " x=(" + std::to_string(pc.worst_x1) + "," + std::to_string(pc.worst_x2) + ")";
            }
        }
        c.pass = c.residual <= report.tol;
        if (!c.pass) report.all_pass = false;
        report.cases.push_back(std::move(c));
    }
    return report;
}

ForcingDecompReport check_forcing_decomposition(int cap, double mu, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ForcingDecompReport report;

    std::vector<std::array<int, 5>> alphas;
    for (int a0 = 0; a0 <= cap; ++a0)
        for (int a1 = 0; a1 + a0 <= cap; ++a1)
            for (int a2 = 0; a2 + a1 + a0 <= cap; ++a2)
                for (int a3 = 0; a3 + a2 + a1 + a0 <= cap; ++a3)
                    for (int a4 = 0; a4 + a3 + a2 + a1 + a0 <= cap; ++a4)
                        alphas.push_back({a0, a1, a2, a3, a4});

    const Poly f = random_poly(rng, 4);
    for (const auto& a : alphas) {
        ForcingDecompCase c;
        c.alpha = a;
        c.id = "F^(a)-hatZ^aF a=(" + std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) +
               std::to_string(a[3]) + std::to_string(a[4]) + ")";

        // theta equation: F^(a) - hatZ^a F = -mu * D_damp1(a, f)
        const Poly res_theta = -mu * damping_commutator_dt(a, f);
        const Poly rhs_theta = -mu * damping_display_rhs_dt(a, f);
        // u equation: F^(a) - hatZ^a F = -mu*D_damp1(a,u) + mu*D_damp2(a,u)
        const Poly res_u = -mu * damping_commutator_dt(a, f) + mu * damping_commutator_quad(a, f);
        const Poly rhs_u = -mu * damping_display_rhs_dt(a, f) + mu * damping_display_rhs_quad(a, f);

        std::uniform_real_distribution<double> ut(0.0, 5.0), ux(-2.0, 2.0);
        double resid = 0.0, scale = 1.0;
        for (int i = 0; i < 100; ++i) {
            const double t = ut(rng), x1 = ux(rng), x2 = ux(rng);
            const double r1 = std::abs(res_theta.eval(t, x1, x2) - rhs_theta.eval(t, x1, x2));
            const double r2 = std::abs(res_u.eval(t, x1, x2) - rhs_u.eval(t, x1, x2));
            resid = std::max({resid, r1, r2});
            scale = std::max({scale, std::abs(res_theta.eval(t, x1, x2)), std::abs(res_u.eval(t, x1, x2))});
        }
        c.residual = resid / scale;
        c.scale = scale;
        c.pass = c.residual <= 1e-12;

        // fitted decay exponent of sup_x |residual| over t in [1, 100], measured
        // on f = t*g(x) so the damping error carries a clean (1+t)^-2 factor
        if (a[0] + a[3] > 0 && mu > 0.0) {
            std::uniform_int_distribution<int> ci(-3, 3);
            Poly gx;
            for (int b1 = 0; b1 <= 2; ++b1)
                for (int b2 = 0; b1 + b2 <= 2; ++b2) gx += Poly::mono(ci(rng), 0, b1, b2);
            const Poly fd = poly_t() * gx;
            const Poly res_decay = -mu * damping_commutator_dt(a, fd);
            double sxx = 0, sxy = 0, sx = 0, sy = 0;
            int n = 0;
            for (double t = 1.0; t <= 100.0; t *= 1.6) {
                double sup = 0.0;
                for (int i = 0; i < 32; ++i) {
                    const double x1 = ux(rng), x2 = ux(rng);
                    sup = std::max(sup, std::abs(res_decay.eval(t, x1, x2)));
                }
                if (sup <= 0.0) continue;
                const double lx = std::log(1.0 + t), ly = std::log(sup);
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
                ++n;
            }
            if (n >= 2) c.decay_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        }
        if (!c.pass) report.all_pass = false;
        report.cases.push_back(std::move(c));
    }
    return report;
}

} // namespace edl
