#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace edl {

// ---------------------------------------------------------------------------
// Exact algebra of Laurent polynomials in tau = 1+t and polynomials in x1, x2.
// Every operator used by the vector-field calculus (d_t, d_1, d_2, S-1, S+1,
// Omega, Box, multiplication by (1+t)^k) is closed on this class, so operator
// identities can be verified with exact derivatives instead of differencing.
// ---------------------------------------------------------------------------

struct Mono {
    int pt = 0; // power of tau = 1+t (may be negative)
    int p1 = 0; // power of x1
    int p2 = 0; // power of x2
    bool operator<(const Mono& o) const {
        if (pt != o.pt) return pt < o.pt;
        if (p1 != o.p1) return p1 < o.p1;
        return p2 < o.p2;
    }
    bool operator==(const Mono& o) const { return pt == o.pt && p1 == o.p1 && p2 == o.p2; }
};

class Poly {
public:
    Poly() = default;
    explicit Poly(double c) {
        if (c != 0.0) terms_[Mono{}] = c;
    }
    static Poly mono(double c, int pt, int p1, int p2) {
        Poly p;
        if (c != 0.0) terms_ins(p.terms_, Mono{pt, p1, p2}, c);
        return p;
    }

    bool zero() const { return terms_.empty(); }
    const std::map<Mono, double>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) terms_ins(terms_, m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) terms_ins(terms_, m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                terms_ins(r.terms_, Mono{ma.pt + mb.pt, ma.p1 + mb.p1, ma.p2 + mb.p2}, ca * cb);
        return r;
    }
    friend Poly operator*(double c, Poly p) {
        if (c == 0.0) return Poly{};
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }

    Poly dt() const { // d/dt = d/dtau
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.pt != 0) terms_ins(r.terms_, Mono{m.pt - 1, m.p1, m.p2}, c * m.pt);
        return r;
    }
    Poly dx1() const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.p1 != 0) terms_ins(r.terms_, Mono{m.pt, m.p1 - 1, m.p2}, c * m.p1);
        return r;
    }
    Poly dx2() const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.p2 != 0) terms_ins(r.terms_, Mono{m.pt, m.p1, m.p2 - 1}, c * m.p2);
        return r;
    }

    double eval(double t, double x1, double x2) const {
        const double tau = 1.0 + t;
        double s = 0.0;
        for (const auto& [m, c] : terms_)
            s += c * std::pow(tau, m.pt) * pw(x1, m.p1) * pw(x2, m.p2);
        return s;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

private:
    static double pw(double x, int p) {
        double r = 1.0;
        for (int i = 0; i < p; ++i) r *= x;
        return r;
    }
    static void terms_ins(std::map<Mono, double>& ts, const Mono& m, double c) {
        auto it = ts.find(m);
        if (it == ts.end()) {
            if (c != 0.0) ts.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0.0) ts.erase(it);
        }
    }
    std::map<Mono, double> terms_;
};

// Variables as polynomials. t = tau - 1.
inline Poly poly_t() { return Poly::mono(1.0, 1, 0, 0) - Poly(1.0); }
inline Poly poly_tau(int k) { return Poly::mono(1.0, k, 0, 0); }
inline Poly poly_x1() { return Poly::mono(1.0, 0, 1, 0); }
inline Poly poly_x2() { return Poly::mono(1.0, 0, 0, 1); }

// ---------------------------------------------------------------------------
// Vector-field operators acting exactly on Poly
// ---------------------------------------------------------------------------

inline Poly op_dt(const Poly& f) { return f.dt(); }
inline Poly op_d1(const Poly& f) { return f.dx1(); }
inline Poly op_d2(const Poly& f) { return f.dx2(); }
/// S = t d_t + x1 d_1 + x2 d_2
inline Poly op_S(const Poly& f) { return poly_t() * f.dt() + poly_x1() * f.dx1() + poly_x2() * f.dx2(); }
inline Poly op_Sm1(const Poly& f) { return op_S(f) - f; }
inline Poly op_Sp1(const Poly& f) { return op_S(f) + f; }
/// Omega = x1 d_2 - x2 d_1
inline Poly op_Omega(const Poly& f) { return poly_x1() * f.dx2() - poly_x2() * f.dx1(); }
/// Box = d_t^2 - d_1^2 - d_2^2
inline Poly op_box(const Poly& f) { return f.dt().dt() - f.dx1().dx1() - f.dx2().dx2(); }

/// Z = (d_t, d_1, d_2, S-1, Omega); hat Z replaces S-1 by S+1.
/// Applies the normal-ordered composition Z0^a0 Z1^a1 Z2^a2 Z3^a3 Z4^a4.
Poly apply_Z_alpha(const std::array<int, 5>& alpha, const Poly& f, bool hat);

/// Random polynomial of total degree <= deg with integer coefficients in [-3,3].
Poly random_poly(std::mt19937_64& rng, int deg);

} // namespace edl
