#pragma once

#include <utility>
#include <vector>

#include "evp/errors.hpp"
#include "evp/mpoly.hpp"

namespace evp {

template <class R>
struct RingOps; // is_zero / one / mul / sub / exact_div

template <>
struct RingOps<ZRat> {
    static bool is_zero(const ZRat& a) { return a.is_zero(); }
    static ZRat one() { return ZRat(1); }
    static ZRat zero() { return ZRat(0); }
    static ZRat mul(const ZRat& a, const ZRat& b) { return a * b; }
    static ZRat sub(const ZRat& a, const ZRat& b) { return a - b; }
    static ZRat exact_div(const ZRat& a, const ZRat& b) { return a / b; }
};

template <>
struct RingOps<ZPoly> {
    static bool is_zero(const ZPoly& a) { return a.is_zero(); }
    static ZPoly one() { return ZPoly(1); }
    static ZPoly zero() { return ZPoly(); }
    static ZPoly mul(const ZPoly& a, const ZPoly& b) { return a * b; }
    static ZPoly sub(const ZPoly& a, const ZPoly& b) { return a - b; }
    static ZPoly exact_div(const ZPoly& a, const ZPoly& b) { return a.exact_div(b); }
};

struct MPolyOps {
    int nvars;
    bool is_zero(const MPoly& a) const { return a.is_zero(); }
    MPoly one() const { return MPoly(nvars, ZRat(1)); }
    MPoly zero() const { return MPoly(nvars); }
    static MPoly mul(const MPoly& a, const MPoly& b) { return a * b; }
    static MPoly sub(const MPoly& a, const MPoly& b) { return a - b; }
    static MPoly exact_div(const MPoly& a, const MPoly& b) { return a.exact_div(b); }
};

// Fraction-free Bareiss elimination. Entries must lie in an integral domain
// where the principal-minor divisions are exact (guaranteed by the algorithm).
template <class R, class Ops>
R bareiss_det(std::vector<std::vector<R>> m, const Ops& ops) {
    const size_t n = m.size();
    if (n == 0) return ops.one();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    int sign = 1;
    R prev = ops.one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ops.is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && ops.is_zero(m[p][k])) ++p;
            if (p == n) return ops.zero(); // zero column below the diagonal
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R t = Ops::sub(Ops::mul(m[i][j], m[k][k]), Ops::mul(m[i][k], m[k][j]));
                m[i][j] = Ops::exact_div(t, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    R d = m[n - 1][n - 1];
    if (sign < 0) d = Ops::sub(ops.zero(), d);
    return d;
}

inline ZRat bareiss_det(std::vector<std::vector<ZRat>> m) {
    return bareiss_det(std::move(m), RingOps<ZRat>());
}
inline ZPoly bareiss_det(std::vector<std::vector<ZPoly>> m) {
    return bareiss_det(std::move(m), RingOps<ZPoly>());
}
inline MPoly bareiss_det(std::vector<std::vector<MPoly>> m, int nvars) {
    return bareiss_det(std::move(m), MPolyOps{nvars});
}

// Cofactor expansion, used as an independent oracle for small sizes.
template <class R, class Ops>
R cofactor_det(const std::vector<std::vector<R>>& m, const Ops& ops) {
    const size_t n = m.size();
    if (n == 0) return ops.one();
    if (n == 1) return m[0][0];
    R acc = ops.zero();
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<R>> sub(n - 1, std::vector<R>(n - 1));
        for (size_t i = 1; i < n; ++i)
            for (size_t jj = 0, t = 0; jj < n; ++jj)
                if (jj != j) sub[i - 1][t++] = m[i][jj];
        R term = Ops::mul(m[0][j], cofactor_det(sub, ops));
        acc = (j % 2 == 0) ? (acc + term) : Ops::sub(acc, term);
    }
    return acc;
}

inline ZRat cofactor_det(const std::vector<std::vector<ZRat>>& m) {
    return cofactor_det(m, RingOps<ZRat>());
}
inline MPoly cofactor_det(const std::vector<std::vector<MPoly>>& m, int nvars) {
    return cofactor_det(m, MPolyOps{nvars});
}

} // namespace evp
