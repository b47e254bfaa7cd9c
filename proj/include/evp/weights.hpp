#pragma once

#include <array>

#include "evp/mpoly.hpp"

namespace evp {

// Values of x at the four half-periods:
//   xi0 = 2z+1, xi1 = z/(z+2), xi2 = z(2z+1)/(z+2), xi3 = 1.
struct XiVector {
    std::array<ZRat, 4> xi;
    XiVector() {
        xi[0] = zf::lin(1, 2);
        xi[1] = ZRat(ZPoly({Rat(0), Rat(1)}), ZPoly({Rat(2), Rat(1)}));
        xi[2] = ZRat(ZPoly({Rat(0), Rat(1), Rat(2)}), ZPoly({Rat(2), Rat(1)}));
        xi[3] = ZRat(1);
    }
    const ZRat& operator[](int i) const { return xi[i]; }
};

inline const XiVector& xi_vector() {
    static const XiVector v;
    return v;
}

// Generic bivariate entries are built over a shared variable set; `ax`, `ay`
// address the two arguments, which may be symbols or constants.
struct Arg {
    bool is_var;
    int var = -1;
    ZRat value;
    static Arg v(int i) { return {true, i, ZRat(0)}; }
    static Arg c(const ZRat& x) { return {false, -1, x}; }
};

inline MPoly arg_poly(int nvars, const Arg& a) {
    return a.is_var ? MPoly::variable(nvars, a.var) : MPoly(nvars, a.value);
}

// G(x,y) = (z+2)xy(x+y) - z(x^2+y^2) - 2(z^2+3z+1)xy + z(2z+1)(x+y)
inline MPoly weight_G(int nvars, const Arg& xa, const Arg& ya) {
    MPoly x = arg_poly(nvars, xa), y = arg_poly(nvars, ya);
    ZRat zp2 = zf::lin(2, 1), z = zf::z();
    ZRat c1 = ZRat(ZPoly({Rat(1), Rat(3), Rat(1)})) * Rat(2); // 2(z^2+3z+1)
    ZRat c2 = z * zf::lin(1, 2);                              // z(2z+1)
    return zp2 * (x * y * (x + y)) - z * (x * x + y * y) - c1 * (x * y) + c2 * (x + y);
}

// Q(x,y) = y(y-2z-1)((z+2)y-3z) - x((z+2)y-z)(2z+1-3y)
inline MPoly weight_Q(int nvars, const Arg& xa, const Arg& ya) {
    MPoly x = arg_poly(nvars, xa), y = arg_poly(nvars, ya);
    int nv = nvars;
    ZRat zp2 = zf::lin(2, 1), z = zf::z();
    MPoly t1 = y * (y - MPoly(nv, zf::lin(1, 2))) * (zp2 * y - MPoly(nv, z * Rat(3)));
    MPoly t2 = x * (zp2 * y - MPoly(nv, z)) * (MPoly(nv, zf::lin(1, 2)) - ZRat(3) * y);
    return t1 - t2;
}

// R(x,y) = 3(z+2)^2 x^2 y^2 + z(z+2)(2z+1)(x^2+y^2)
//          - 2(z^2+4z+1)((z+2)xy + z(2z+1))(x+y)
//          + 4(z^4+4z^3+8z^2+4z+1)xy + 3z^2(2z+1)^2
inline MPoly weight_R(int nvars, const Arg& xa, const Arg& ya) {
    MPoly x = arg_poly(nvars, xa), y = arg_poly(nvars, ya);
    int nv = nvars;
    ZRat z = zf::z(), zp2 = zf::lin(2, 1), z2p1 = zf::lin(1, 2);
    ZRat c_a = zp2 * zp2 * Rat(3);
    ZRat c_b = z * zp2 * z2p1;
    ZRat c_c = ZRat(ZPoly({Rat(1), Rat(4), Rat(1)})) * Rat(2);
    ZRat c_d = ZRat(ZPoly({Rat(1), Rat(4), Rat(8), Rat(4), Rat(1)})) * Rat(4);
    ZRat c_e = z * z * z2p1 * z2p1 * Rat(3);
    MPoly xy = x * y;
    return c_a * (xy * xy) + c_b * (x * x + y * y)
        - c_c * ((zp2 * xy + MPoly(nv, z * z2p1)) * (x + y))
        + c_d * xy + MPoly(nv, c_e);
}

// F(x,y,w) = (z+2)xyw - z(xy+yw+xw+x+y+w) + z(2z+1)
inline MPoly weight_F(int nvars, const Arg& xa, const Arg& ya, const Arg& wa) {
    MPoly x = arg_poly(nvars, xa), y = arg_poly(nvars, ya), w = arg_poly(nvars, wa);
    ZRat z = zf::z(), zp2 = zf::lin(2, 1);
    return zp2 * (x * y * w) - z * (x * y + y * w + x * w + x + y + w)
        + MPoly(nvars, z * zf::lin(1, 2));
}

// scalar G on constants
inline ZRat weight_G(const ZRat& a, const ZRat& b) {
    return weight_G(0, Arg::c(a), Arg::c(b)).constant_value();
}

// G(x, xi_i) factors as g_const * (x - g_root)^g_mult:
//   i=0: 2(z+1)^2 * x^2
//   i=1: 2 z^2 (z+1)^2/(z+2)^2          (constant in x)
//   i=2: 2 z^2 * (x - (2z+1)/(z+2))^2
//   i=3: 2 * (x - z)^2
struct GXiFactor {
    ZRat constant;
    ZRat root;
    int mult;
};

inline const GXiFactor& g_xi_factor(int i) {
    static const std::array<GXiFactor, 4> table = [] {
        ZRat z = zf::z(), zp1 = zf::lin(1, 1), zp2 = zf::lin(2, 1), z2p1 = zf::lin(1, 2);
        std::array<GXiFactor, 4> t;
        t[0] = {Rat(2) * zp1 * zp1, ZRat(0), 2};
        t[1] = {Rat(2) * z * z * zp1 * zp1 / (zp2 * zp2), ZRat(0), 0};
        t[2] = {Rat(2) * z * z, z2p1 / zp2, 2};
        t[3] = {ZRat(2), z, 2};
        return t;
    }();
    return table[i];
}

} // namespace evp
