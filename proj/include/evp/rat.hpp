#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "evp/errors.hpp"

namespace evp {

// Exact rational scalar. mpq_class already maintains the canonical form
// gcd(|num|, den) = 1, den >= 1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw DivisionByZero();
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (b == 0) {
        if (e < 0) throw DivisionByZero("0 to a negative power");
        return Rat(0);
    }
    Int num = int_pow(b.get_num(), static_cast<unsigned long>(e < 0 ? -e : e));
    Int den = int_pow(b.get_den(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rat r = (e > 0) ? Rat(num, den) : Rat(den, num);
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    Int r;
    if (n < 0) throw DomainError("factorial of negative integer");
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k! for integer x (possibly
// negative) and k >= 0.
inline Int binomial(long x, long k) {
    if (k < 0) return Int(0);
    Int num = 1;
    for (long j = 0; j < k; ++j) num *= Int(x - j);
    return num / factorial(k);
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

} // namespace evp
