#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "evp/errors.hpp"
#include "evp/zpoly.hpp"

namespace evp {

// Rational function of zeta in canonical form:
//   den is integer-primitive with positive leading coefficient,
//   gcd(num, den) = 1 as polynomials.
// Equality is therefore coefficient-wise.
class ZRat {
  public:
    ZPoly num;
    ZPoly den; // never zero; ZPoly(1) for polynomials

    ZRat() : num(), den(1) {}
    explicit ZRat(const Rat& a) : num(a), den(1) {}
    explicit ZRat(long a) : num(a), den(1) {}
    explicit ZRat(const ZPoly& p) : num(p), den(1) {}
    ZRat(ZPoly n, ZPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static ZRat zeta() { return ZRat(ZPoly::zeta()); }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
    bool is_polynomial() const { return den.degree() == 0 && den.lead() == 1; }

    // As a rational constant; requires is_constant().
    Rat const_value() const {
        if (!is_constant()) throw Error("not a constant");
        if (num.is_zero()) return Rat(0);
        return num[0] / den[0];
    }

    void normalize() {
        if (den.is_zero()) throw DivisionByZero("zero denominator");
        if (num.is_zero()) { den = ZPoly(1); return; }
        ZPoly g = ZPoly::poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        auto [dc, dp] = den.content_primitive();
        den = dp;
        num.scale(1 / dc);
    }

    bool operator==(const ZRat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const ZRat& o) const { return !(*this == o); }

    ZRat operator-() const {
        ZRat r = *this;
        r.num = -r.num;
        return r;
    }

    friend ZRat operator+(const ZRat& a, const ZRat& b) {
        return ZRat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend ZRat operator-(const ZRat& a, const ZRat& b) {
        return ZRat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend ZRat operator*(const ZRat& a, const ZRat& b) {
        return ZRat(a.num * b.num, a.den * b.den);
    }
    friend ZRat operator/(const ZRat& a, const ZRat& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return ZRat(a.num * b.den, a.den * b.num);
    }
    ZRat& operator+=(const ZRat& o) { return *this = *this + o; }
    ZRat& operator-=(const ZRat& o) { return *this = *this - o; }
    ZRat& operator*=(const ZRat& o) { return *this = *this * o; }
    ZRat& operator/=(const ZRat& o) { return *this = *this / o; }

    friend ZRat operator*(const ZRat& a, const Rat& s) { ZRat r = a; r.num.scale(s); if (s == 0) r.den = ZPoly(1); return r; }
    friend ZRat operator*(const Rat& s, const ZRat& a) { return a * s; }

    ZRat inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return ZRat(den, num);
    }

    ZRat pow(long e) const {
        if (e == 0) return ZRat(1);
        ZRat base = e > 0 ? *this : inv();
        long n = e > 0 ? e : -e;
        ZRat r(1);
        while (n > 0) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    // formal d/dzeta via the quotient rule
    ZRat derivative() const {
        return ZRat(num.derivative() * den - num * den.derivative(), den * den);
    }

    // order of the zero (positive) or pole (negative) at zeta = a;
    // gcd(num, den) = 1 means at most one of them vanishes at a.
    long valuation_at(const Rat& a) const {
        if (is_zero()) throw ZeroFunction();
        if (num.eval(a) == 0) return num.order_at(a);
        if (den.eval(a) == 0) return -den.order_at(a);
        return 0;
    }

    // valuation at infinity: deg(den) - deg(num)
    long valuation_at_infinity() const {
        if (is_zero()) throw ZeroFunction();
        return den.degree() - num.degree();
    }

    // evaluation at a rational point; denominator must not vanish there
    Rat eval(const Rat& a) const {
        Rat d = den.eval(a);
        if (d == 0) throw DivisionByZero("pole at evaluation point");
        return num.eval(a) / d;
    }

    template <class T>
    T eval_t(const T& a) const {
        return num.eval_t(a) / den.eval_t(a);
    }

    // substitution zeta -> r(zeta), exact in Q(zeta)
    ZRat compose(const ZRat& r) const {
        // Horner on num and den against the rational argument, then combine:
        // num(r)/den(r) = (sum a_i r^i / r_den^i scaling) handled by ZRat ops.
        ZRat n(0), d(0);
        for (size_t i = num.c.size(); i-- > 0;) n = n * r + ZRat(num.c[i]);
        for (size_t i = den.c.size(); i-- > 0;) d = d * r + ZRat(den.c[i]);
        if (d.is_zero()) throw DivisionByZero("denominator vanishes identically under substitution");
        return n / d;
    }

    // Canonical printing: single reduced fraction with integer coefficients.
    // The numerator carries the rational content; parenthesized "num / den".
    std::string to_string(const std::string& var = "z") const {
        auto [nc, np] = num.is_zero() ? std::make_pair(Rat(0), ZPoly())
                                      : num.content_primitive();
        if (num.is_zero()) return "0";
        ZPoly pn = np;
        pn.scale(Rat(nc.get_num()));
        ZPoly pd = den;
        pd.scale(Rat(nc.get_den()));
        std::ostringstream os;
        if (pd.degree() == 0 && pd.lead() == 1) {
            os << pn.to_string(var);
        } else {
            os << "(" << pn.to_string(var) << ") / (" << pd.to_string(var) << ")";
        }
        return os.str();
    }
};

// handy builders for the linear factors that pervade the formulas
namespace zf {
inline ZRat z() { return ZRat::zeta(); }
inline ZRat c(long v) { return ZRat(v); }
inline ZRat c(const Rat& v) { return ZRat(v); }
inline ZRat lin(long a0, long a1) { return ZRat(ZPoly({Rat(a0), Rat(a1)})); } // a0 + a1*z
} // namespace zf

} // namespace evp
