#include "edl/symalg.hpp"

namespace edl {

Poly apply_Z_alpha(const std::array<int, 5>& alpha, const Poly& f, bool hat) {
    Poly g = f;
    // rightmost factor acts first
    for (int k = 0; k < alpha[4]; ++k) g = op_Omega(g);
    for (int k = 0; k < alpha[3]; ++k) g = hat ? op_Sp1(g) : op_Sm1(g);
    for (int k = 0; k < alpha[2]; ++k) g = op_d2(g);
    for (int k = 0; k < alpha[1]; ++k) g = op_d1(g);
    for (int k = 0; k < alpha[0]; ++k) g = op_dt(g);
    return g;
}

Poly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Poly p;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b)
            for (int c = 0; a + b + c <= deg; ++c) {
                const int v = coef(rng);
                if (v != 0) p += Poly::mono(v, 0, b, c) * [&] {
                    // t^a expressed in tau
                    Poly tp(1.0);
                    for (int i = 0; i < a; ++i) tp = tp * poly_t();
                    return tp;
                }();
            }
    return p;
}

} // namespace edl
