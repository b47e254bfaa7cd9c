#pragma once

#include <optional>
#include <vector>

#include "evp/det.hpp"
#include "evp/weights.hpp"

namespace evp {

struct Config {
    int max_level = 5;   // bound on the underlying determinant size N
    int max_symbols = 8; // bound on the number of symbolic variables
    static Config& get() {
        static Config c;
        return c;
    }
};

// One argument slot of the split polynomial T(group1; group2): either one of
// the caller's free variables or a value in Q(zeta).
struct Slot {
    bool is_var;
    int var = -1;
    ZRat value;
    static Slot v(int i) { return {true, i, ZRat(0)}; }
    static Slot c(ZRat x) { return {false, -1, std::move(x)}; }
};

namespace detail {

struct Placement {
    // per block: list of slots, each entry an Arg over nvars variables
    std::vector<std::vector<Arg>> block{4};
    int nvars = 0;                       // free + deferred
    std::vector<ZRat> deferred_values;   // values of variables m, m+1, ...
};

// Distribute a group into two blocks of fixed capacities so that no value is
// repeated within a block; surplus copies become deferred symbols, to be
// substituted after the Vandermonde divisions.
inline void place_group(const std::vector<Slot>& group, int cap_a, int cap_b,
                        std::vector<Arg>& blk_a, std::vector<Arg>& blk_b,
                        int nfree, Placement& pl) {
    std::vector<std::pair<ZRat, int>> groups; // distinct value -> count
    std::vector<int> freevars;
    for (const auto& s : group) {
        if (s.is_var) {
            freevars.push_back(s.var);
            continue;
        }
        bool found = false;
        for (auto& g : groups)
            if (g.first == s.value) { g.second++; found = true; break; }
        if (!found) groups.emplace_back(s.value, 1);
    }
    int room_a = cap_a, room_b = cap_b;
    std::vector<Arg> overflow;
    for (auto& [val, cnt] : groups) {
        bool in_a = false, in_b = false;
        for (int c = 0; c < cnt; ++c) {
            if (!in_a && room_a > 0) {
                blk_a.push_back(Arg::c(val));
                in_a = true;
                --room_a;
            } else if (!in_b && room_b > 0) {
                blk_b.push_back(Arg::c(val));
                in_b = true;
                --room_b;
            } else {
                int sym = nfree + static_cast<int>(pl.deferred_values.size());
                pl.deferred_values.push_back(val);
                overflow.push_back(Arg::v(sym));
            }
        }
    }
    for (int v : freevars) overflow.push_back(Arg::v(v));
    for (const auto& a : overflow) {
        if (room_a > 0) { blk_a.push_back(a); --room_a; }
        else if (room_b > 0) { blk_b.push_back(a); --room_b; }
        else throw Error("internal: block capacity exhausted");
    }
    if (room_a != 0 || room_b != 0) throw Error("internal: block capacity mismatch");
}

} // namespace detail

// The split polynomial T(group1; group2), computed from the determinant
// formula with entry blocks 1/G, Q/((y-x)G), Q/((x-y)G), R/G after clearing
// every denominator into the matrix and dividing out the four block
// Vandermonde products. Confluent specializations are kept symbolic through
// the divisions and substituted afterwards.
inline MPoly split_T(const std::vector<Slot>& group1, const std::vector<Slot>& group2,
                     int nfree) {
    const int total = static_cast<int>(group1.size() + group2.size());
    if (total % 2 != 0) throw InvalidIndex("split_T needs an even number of arguments");
    const int N = total / 2;
    if (N > Config::get().max_level) throw SizeBound("determinant level above configured bound");
    if (N == 0) return MPoly(nfree, ZRat(1));

    const int g1 = static_cast<int>(group1.size());
    int k = (g1 + 1) / 2;
    k = std::max(k, g1 - N);
    k = std::min(k, N);
    const int l = g1 - k;
    if (l < 0 || l > N) throw InvalidIndex("group sizes incompatible with a (k,l) split");

    detail::Placement pl;
    detail::place_group(group1, k, l, pl.block[0], pl.block[2], nfree, pl);
    detail::place_group(group2, N - k, N - l, pl.block[1], pl.block[3], nfree, pl);
    const int nv = nfree + static_cast<int>(pl.deferred_values.size());
    pl.nvars = nv;
    if (nv > Config::get().max_symbols) throw SizeBound("too many symbolic variables");

    // slots 0..N-1: blocks 1,2 (rows); slots N..2N-1: blocks 3,4 (columns)
    std::vector<Arg> slot;
    slot.reserve(2 * N);
    for (const auto& a : pl.block[0]) slot.push_back(a);
    for (const auto& a : pl.block[1]) slot.push_back(a);
    for (const auto& a : pl.block[2]) slot.push_back(a);
    for (const auto& a : pl.block[3]) slot.push_back(a);

    auto spoly = [&](int i) { return arg_poly(nv, slot[i]); };

    // pairwise G values and the two families of linear differences
    std::vector<std::vector<MPoly>> Gm(N, std::vector<MPoly>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) Gm[i][j] = weight_G(nv, slot[i], slot[N + j]);

    std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(N));
    for (int i = 0; i < N; ++i) {
        // prefix/suffix products of G over columns
        std::vector<MPoly> pref(N + 1, MPoly(nv, ZRat(1))), suff(N + 1, MPoly(nv, ZRat(1)));
        for (int j = 0; j < N; ++j) pref[j + 1] = pref[j] * Gm[i][j];
        for (int j = N; j-- > 0;) suff[j] = suff[j + 1] * Gm[i][j];
        if (i < k) {
            // rows from block1: linear factors (x_{N+j'} - x_i) over j' > l
            std::vector<MPoly> dif(N);
            for (int j = l; j < N; ++j) dif[j] = spoly(N + j) - spoly(i);
            std::vector<MPoly> dp(N + 1, MPoly(nv, ZRat(1))), ds(N + 1, MPoly(nv, ZRat(1)));
            for (int j = l; j < N; ++j) dp[j + 1] = dp[j] * dif[j];
            for (int j = N; j-- > l;) ds[j] = ds[j + 1] * dif[j];
            for (int j = 0; j < N; ++j) {
                MPoly gpart = pref[j] * suff[j + 1];
                if (j < l) {
                    M[i][j] = gpart * dp[N];
                } else {
                    M[i][j] = weight_Q(nv, slot[i], slot[N + j]) * gpart * dp[j] * ds[j + 1];
                }
            }
        } else {
            // rows from block2: linear factors (x_i - x_{N+j'}) over j' <= l
            std::vector<MPoly> dif(N);
            for (int j = 0; j < l; ++j) dif[j] = spoly(i) - spoly(N + j);
            std::vector<MPoly> dp(N + 1, MPoly(nv, ZRat(1))), ds(N + 1, MPoly(nv, ZRat(1)));
            for (int j = 0; j < l; ++j) dp[j + 1] = dp[j] * dif[j];
            for (int j = l; j-- > 0;) ds[j] = ds[j + 1] * dif[j];
            for (int j = 0; j < N; ++j) {
                MPoly gpart = pref[j] * suff[j + 1];
                if (j < l) {
                    MPoly lpart = dp[j] * ds[j + 1];
                    M[i][j] = weight_Q(nv, slot[N + j], slot[i]) * gpart * lpart;
                } else {
                    M[i][j] = weight_R(nv, slot[i], slot[N + j]) * gpart * dp[l];
                }
            }
        }
    }

    MPoly det = bareiss_det(std::move(M), nv);

    // divide by the four block Vandermonde products
    ZRat const_div(1);
    auto divide_block = [&](int begin, int size) {
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b) {
                const Arg &sa = slot[begin + a], &sb = slot[begin + b];
                if (!sa.is_var && !sb.is_var) {
                    ZRat d = sb.value - sa.value;
                    if (d.is_zero()) throw Error("internal: coinciding values in one block");
                    const_div *= d;
                } else {
                    det = det.exact_div(arg_poly(nv, sb) - arg_poly(nv, sa));
                }
            }
    };
    divide_block(0, k);
    divide_block(k, N - k);
    divide_block(N, l);
    divide_block(N + l, N - l);
    det = det * const_div.inv();

    // substitute the deferred confluent values, highest variable first
    for (int s = static_cast<int>(pl.deferred_values.size()); s-- > 0;)
        det = det.substitute(nfree + s, pl.deferred_values[s]);
    return det;
}

// The symmetric polynomial T(x_1..x_{2n}).
inline MPoly big_T(int n) {
    if (n < 0) throw InvalidIndex("big_T needs n >= 0");
    std::vector<Slot> g1;
    for (int i = 0; i < 2 * n; ++i) g1.push_back(Slot::v(i));
    return split_T(g1, {}, 2 * n);
}

} // namespace evp
