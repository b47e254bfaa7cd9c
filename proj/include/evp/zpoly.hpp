#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "evp/errors.hpp"
#include "evp/rat.hpp"

namespace evp {

// Dense polynomial in zeta over Q. Invariant: leading coefficient nonzero
// unless the polynomial is zero (empty coefficient vector).
class ZPoly {
  public:
    std::vector<Rat> c; // c[i] is the coefficient of zeta^i

    ZPoly() = default;
    explicit ZPoly(const Rat& a) {
        if (a != 0) c.push_back(a);
    }
    explicit ZPoly(long a) : ZPoly(Rat(a)) {}
    ZPoly(std::initializer_list<Rat> lo_to_hi) : c(lo_to_hi) { trim(); }

    static ZPoly zeta() { return ZPoly({Rat(0), Rat(1)}); }
    // a + b*zeta
    static ZPoly linear(const Rat& a, const Rat& b) { return ZPoly({a, b}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    const Rat& operator[](size_t i) const { return c[i]; }
    Rat coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(c.size())) ? c[i] : Rat(0);
    }
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    bool operator==(const ZPoly& o) const { return c == o.c; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    ZPoly& operator+=(const ZPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly();
        ZPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    ZPoly& scale(const Rat& s) {
        if (s == 0) { c.clear(); return *this; }
        for (auto& x : c) x *= s;
        return *this;
    }
    friend ZPoly operator*(ZPoly a, const Rat& s) { return a.scale(s); }
    friend ZPoly operator*(const Rat& s, ZPoly a) { return a.scale(s); }

    // Euclidean division over Q.
    static void divrem(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        q = ZPoly();
        r = a;
        if (a.degree() < b.degree()) return;
        q.c.assign(a.degree() - b.degree() + 1, Rat(0));
        Rat binv = 1 / b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            long d = r.degree() - b.degree();
            Rat f = r.lead() * binv;
            q.c[d] = f;
            for (size_t i = 0; i < b.c.size(); ++i) r.c[d + i] -= f * b.c[i];
            r.trim();
        }
        q.trim();
    }

    ZPoly exact_div(const ZPoly& b) const {
        ZPoly q, r;
        divrem(*this, b, q, r);
        if (!r.is_zero()) throw InexactDivision("inexact univariate division");
        return q;
    }

    ZPoly derivative() const {
        ZPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = Rat(static_cast<long>(i)) * c[i];
        r.trim();
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    template <class T>
    T eval_t(const T& x) const {
        T r(0);
        for (size_t i = c.size(); i-- > 0;) { r = r * x; r = r + T(c[i]); }
        return r;
    }

    // Splits into (content, primitive) with *this = content * primitive, the
    // primitive part having coprime integer coefficients and positive lead.
    std::pair<Rat, ZPoly> content_primitive() const {
        if (is_zero()) return {Rat(0), ZPoly()};
        Int den_lcm = 1;
        for (const auto& x : c) {
            Int d = x.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            den_lcm = den_lcm / g * d;
        }
        Int num_gcd = 0;
        for (const auto& x : c) {
            Int n = x.get_num() * (den_lcm / x.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        if (lead() < 0) num_gcd = -num_gcd;
        Rat content(num_gcd, den_lcm);
        content.canonicalize();
        ZPoly prim = *this;
        Rat inv = 1 / content;
        prim.scale(inv);
        return {content, prim};
    }

    // gcd on integer primitive parts; result primitive with positive lead.
    static ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero()) return b.is_zero() ? ZPoly() : b.content_primitive().second;
        if (b.is_zero()) return a.content_primitive().second;
        ZPoly u = a.content_primitive().second;
        ZPoly v = b.content_primitive().second;
        while (!v.is_zero()) {
            ZPoly q, r;
            divrem(u, v, q, r);
            u = std::move(v);
            v = r.is_zero() ? ZPoly() : r.content_primitive().second;
        }
        return u.content_primitive().second;
    }

    // order of vanishing at x = a (0 if p(a) != 0); requires nonzero polynomial
    long order_at(const Rat& a) const {
        if (is_zero()) throw ZeroFunction();
        ZPoly p = *this;
        ZPoly lin({-a, Rat(1)});
        long ord = 0;
        while (p.eval(a) == 0) {
            p = p.exact_div(lin);
            ++ord;
        }
        return ord;
    }

    // composition with an affine map zeta -> u + v*zeta
    ZPoly compose_affine(const Rat& u, const Rat& v) const {
        ZPoly r;
        ZPoly arg({u, v});
        for (size_t i = c.size(); i-- > 0;) {
            r = r * arg;
            r += ZPoly(c[i]);
        }
        return r;
    }

    std::string to_string(const std::string& var = "z") const;
};

// Canonical text form, highest degree first, explicit '*', '^' for powers.
inline std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat a = c[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace evp
