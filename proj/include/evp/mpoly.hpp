#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evp/errors.hpp"
#include "evp/zrat.hpp"

namespace evp {

using ExpVec = std::vector<int>;

// graded lexicographic order: total degree first, then lex on exponents
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial in x1..xN over Q(zeta). Terms are kept in a
// canonical graded-lex map; no zero coefficients are stored.
class MPoly {
  public:
    int nvars = 0;
    std::map<ExpVec, ZRat, GradedLex> terms;

    MPoly() = default;
    explicit MPoly(int nv) : nvars(nv) {}
    MPoly(int nv, const ZRat& a) : nvars(nv) {
        if (!a.is_zero()) terms.emplace(ExpVec(nv, 0), a);
    }
    static MPoly variable(int nv, int i) {
        MPoly p(nv);
        ExpVec e(nv, 0);
        e[i] = 1;
        p.terms.emplace(std::move(e), ZRat(1));
        return p;
    }
    static MPoly constant(int nv, const ZRat& a) { return MPoly(nv, a); }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() ||
               (terms.size() == 1 && terms.begin()->first == ExpVec(nvars, 0));
    }
    ZRat constant_value() const {
        if (terms.empty()) return ZRat(0);
        if (!is_constant()) throw Error("not a constant polynomial");
        return terms.begin()->second;
    }

    int total_degree() const {
        if (terms.empty()) return -1;
        return std::accumulate(terms.rbegin()->first.begin(), terms.rbegin()->first.end(), 0);
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms) d = std::max(d, e[var]);
        return d;
    }

    bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    void add_term(const ExpVec& e, const ZRat& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars);
        if (a.terms.empty() || b.terms.empty()) return r;
        ExpVec e(a.nvars);
        for (const auto& [ea, ca] : a.terms) {
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const MPoly& a, const ZRat& s) {
        MPoly r(a.nvars);
        if (s.is_zero()) return r;
        r = a;
        for (auto& [e, c] : r.terms) c *= s;
        return r;
    }
    friend MPoly operator*(const ZRat& s, const MPoly& a) { return a * s; }
    MPoly& scale(const ZRat& s) { return *this = *this * s; }

    // Exact division; throws InexactDivision if b does not divide *this.
    MPoly exact_div(const MPoly& b) const {
        if (b.is_zero()) throw DivisionByZero("multivariate division by zero");
        MPoly rem = *this;
        MPoly q(nvars);
        const auto& blt = *b.terms.rbegin(); // leading term of b in graded lex
        ExpVec e(nvars);
        while (!rem.terms.empty()) {
            const auto& rlt = *rem.terms.rbegin();
            bool ok = true;
            for (int i = 0; i < nvars; ++i) {
                e[i] = rlt.first[i] - blt.first[i];
                if (e[i] < 0) { ok = false; break; }
            }
            if (!ok) throw InexactDivision("leading term not divisible");
            ZRat qc = rlt.second / blt.second;
            q.add_term(e, qc);
            // rem -= qterm * b
            ExpVec me(nvars);
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < nvars; ++i) me[i] = e[i] + eb[i];
                rem.add_term(me, -(qc * cb));
            }
        }
        return q;
    }

    // divisibility probe; returns the quotient only when division is exact
    std::optional<MPoly> try_exact_div(const MPoly& b) const {
        if (b.is_zero()) return std::nullopt;
        MPoly rem = *this;
        MPoly q(nvars);
        const auto& blt = *b.terms.rbegin();
        ExpVec e(nvars);
        while (!rem.terms.empty()) {
            const auto& rlt = *rem.terms.rbegin();
            for (int i = 0; i < nvars; ++i) {
                e[i] = rlt.first[i] - blt.first[i];
                if (e[i] < 0) return std::nullopt;
            }
            ZRat qc = rlt.second / blt.second;
            q.add_term(e, qc);
            ExpVec me(nvars);
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < nvars; ++i) me[i] = e[i] + eb[i];
                rem.add_term(me, -(qc * cb));
            }
        }
        return q;
    }

    MPoly derivative(int var) const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            ExpVec ne = e;
            ne[var] -= 1;
            r.add_term(ne, c * Rat(e[var]));
        }
        return r;
    }

    // substitute variable `var` by a rational-function value of zeta;
    // result has one variable fewer (indices above `var` shift down)
    MPoly substitute(int var, const ZRat& value) const {
        MPoly r(nvars - 1);
        // group by the remaining exponents, Horner is unnecessary at our sizes
        std::vector<ZRat> powers = {ZRat(1)};
        int dv = degree_in(var);
        for (int i = 1; i <= dv; ++i) powers.push_back(powers.back() * value);
        ExpVec e(nvars - 1);
        for (const auto& [ev, c] : terms) {
            for (int i = 0, j = 0; i < nvars; ++i)
                if (i != var) e[j++] = ev[i];
            r.add_term(e, c * powers[ev[var]]);
        }
        return r;
    }

    // substitute all variables by zeta-rational values
    ZRat eval_all(const std::vector<ZRat>& vals) const {
        ZRat r(0);
        for (const auto& [e, c] : terms) {
            ZRat t = c;
            for (int i = 0; i < nvars; ++i)
                if (e[i] != 0) t *= vals[i].pow(e[i]);
            r += t;
        }
        return r;
    }

    template <class T>
    T eval_numeric(const std::vector<T>& vals, const T& zeta) const {
        T r(0);
        for (const auto& [e, c] : terms) {
            T t = c.eval_t(zeta);
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * vals[i];
            r = r + t;
        }
        return r;
    }

    // apply a permutation of variables: new variable perm[i] receives old i
    MPoly permute_vars(const std::vector<int>& perm) const {
        MPoly r(nvars);
        ExpVec e(nvars);
        for (const auto& [ev, c] : terms) {
            for (int i = 0; i < nvars; ++i) e[perm[i]] = ev[i];
            r.add_term(e, c);
        }
        return r;
    }

    // substitute zeta -> s(zeta) inside every coefficient
    MPoly compose_zeta(const ZRat& s) const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) r.add_term(e, c.compose(s));
        return r;
    }

    // minimal valuation at zeta = a over all coefficients (the zeta-content order)
    long min_valuation_at(const Rat& a) const {
        if (is_zero()) throw ZeroFunction();
        bool first = true;
        long m = 0;
        for (const auto& [e, c] : terms) {
            long v = c.valuation_at(a);
            if (first || v < m) m = v;
            first = false;
        }
        return m;
    }

    std::string to_string(const std::string& varbase = "x") const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // canonical order: highest graded-lex term first
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second.to_string() << ")";
            for (int i = 0; i < nvars; ++i) {
                if (it->first[i] == 0) continue;
                os << "*" << varbase << (i + 1);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }
};

// linear factor (x_i - r) as an MPoly
inline MPoly linear_factor(int nvars, int var, const ZRat& r) {
    MPoly p = MPoly::variable(nvars, var);
    return p - MPoly(nvars, r);
}

// Vandermonde product prod_{i<j} (v_j - v_i) for a list of MPoly values
inline MPoly vandermonde(const std::vector<MPoly>& v, int nvars) {
    MPoly p(nvars, ZRat(1));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) p *= (v[j] - v[i]);
    return p;
}

} // namespace evp
