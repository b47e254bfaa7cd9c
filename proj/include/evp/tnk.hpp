#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "evp/tsplit.hpp"

namespace evp {

using KVec = std::array<int, 4>;

inline int kvec_sum(const KVec& k) { return k[0] + k[1] + k[2] + k[3]; }

struct KIndex {
    KVec k{0, 0, 0, 0};
    int n = 0;
    int m() const { return 2 * n - kvec_sum(k); }
    bool valid() const { return m() >= 0; }
};

enum class Provenance { determinant, recursion, symmetry, seed };

inline std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::determinant: return "determinant";
        case Provenance::recursion: return "recursion";
        case Provenance::symmetry: return "symmetry";
        case Provenance::seed: return "seed";
    }
    return "?";
}

// A lattice value: a symmetric rational function of x_1..x_m over Q(zeta)
// whose denominator is a product of the elementary per-variable factors
// coming from G(x, xi_i). For m = 0 this is a plain element of Q(zeta).
struct TValue {
    KIndex index;
    MPoly num;
    MPoly den; // product of monic linear factors; constant 1 when none survive
    Provenance provenance = Provenance::determinant;

    int nvars() const { return num.nvars; }

    ZRat scalar() const {
        if (num.nvars != 0 && !(num.is_constant() && den.is_constant()))
            throw Error("TValue is not a scalar");
        return num.constant_value() / den.constant_value();
    }

    bool equals(const TValue& o) const { return (num * o.den) == (o.num * den); }

    std::string to_string() const {
        if (den.is_constant() && den.constant_value() == ZRat(1)) return num.to_string();
        return "(" + num.to_string() + ") / (" + den.to_string() + ")";
    }
};

// T_n^(k): specialize k_j^+ left slots and k_j^- right slots of the split
// polynomial at xi_j and divide by the displayed prefactor.
inline TValue tnk_value(const KIndex& idx) {
    if (!idx.valid()) throw InvalidIndex("m = 2n - |k| must be nonnegative");
    const int m = idx.m();
    const auto& xi = xi_vector();
    KVec kp{}, km{};
    int kp_sum = 0, km_sum = 0;
    for (int i = 0; i < 4; ++i) {
        kp[i] = std::max(idx.k[i], 0);
        km[i] = std::max(-idx.k[i], 0);
        kp_sum += kp[i];
        km_sum += km[i];
    }

    std::vector<Slot> g1, g2;
    for (int j = 0; j < m; ++j) g1.push_back(Slot::v(j));
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < kp[i]; ++c) g1.push_back(Slot::c(xi[i]));
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < km[i]; ++c) g2.push_back(Slot::c(xi[i]));

    MPoly P = split_T(g1, g2, m);
    if (P.is_zero())
        throw ZeroFunction("computed T vanished identically (nonvanishing regression)");

    // scalar prefactor
    ZRat scal(binomial(km_sum, 2) % 2 == 0 ? Rat(1) : Rat(-1));
    scal = scal * rat_pow(Rat(1, 2), km_sum);
    for (int i = 0; i < 4; ++i) {
        if (km[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (kp[j] == 0) continue;
            scal = scal / weight_G(xi[i], xi[j]).pow(km[i] * kp[j]);
        }
    }

    // per-variable denominator factors from G(x_j, xi_i)^{k_i^-}
    MPoly den(m, ZRat(1));
    for (int i = 0; i < 4; ++i) {
        if (km[i] == 0) continue;
        const GXiFactor& f = g_xi_factor(i);
        scal = scal / f.constant.pow(static_cast<long>(m) * km[i]);
        if (f.mult == 0) continue;
        for (int j = 0; j < m; ++j) {
            MPoly lf = linear_factor(m, j, f.root);
            for (int e = 0; e < f.mult * km[i]; ++e) den *= lf;
        }
    }

    MPoly num = P * scal;

    // cancel elementary factors that the numerator absorbs
    if (m > 0) {
        for (int i = 0; i < 4; ++i) {
            if (km[i] == 0) continue;
            const GXiFactor& f = g_xi_factor(i);
            if (f.mult == 0) continue;
            for (int j = 0; j < m; ++j) {
                MPoly lf = linear_factor(m, j, f.root);
                while (true) {
                    auto qd = den.try_exact_div(lf);
                    if (!qd) break;
                    auto qn = num.try_exact_div(lf);
                    if (!qn) break;
                    den = *qd;
                    num = *qn;
                }
            }
        }
    }

    TValue v;
    v.index = idx;
    v.num = std::move(num);
    v.den = std::move(den);
    v.provenance = Provenance::determinant;
    return v;
}

// t^(k) = T_{|k|/2}^(k), a rational function of zeta (m = 0)
inline ZRat tk_value(const KVec& k) {
    int s = kvec_sum(k);
    if (s % 2 != 0) throw ParityError();
    KIndex idx{k, s / 2};
    TValue v = tnk_value(idx);
    ZRat r = v.scalar();
    if (r.is_zero()) throw ZeroFunction("t^(k) vanished (nonvanishing regression)");
    return r;
}

// process-wide cache; every entry is immutable once computed
inline const ZRat& tk_cached(const KVec& k) {
    static std::map<KVec, ZRat> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return cache.emplace(k, tk_value(k)).first->second;
}

} // namespace evp
