#include <catch2/catch_amalgamated.hpp>

#include "evp/det.hpp"
#include "evp/mpoly.hpp"
#include "evp/zpoly.hpp"
#include "evp/zrat.hpp"

using namespace evp;

namespace {

// small deterministic generator for property-style checks
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

ZRat random_zrat(Rng& rng) {
    ZPoly n, d;
    do {
        n = ZPoly({Rat(rng.small(-5, 5)), Rat(rng.small(-3, 3)), Rat(rng.small(0, 2))});
    } while (n.is_zero());
    do {
        d = ZPoly({Rat(rng.small(-5, 5)), Rat(rng.small(-3, 3)), Rat(rng.small(0, 1))});
    } while (d.is_zero());
    return ZRat(n, d);
}

MPoly random_mpoly(Rng& rng, int nvars, int maxdeg, int nterms) {
    MPoly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(rng.small(0, maxdeg));
        p.add_term(e, ZRat(rng.small(-3, 3)));
    }
    return p;
}

} // namespace

TEST_CASE("ratzeta arithmetic basics") {
    ZRat z = ZRat::zeta();
    ZRat a = z / (z + ZRat(2));
    ZRat b = (z + ZRat(2)) / z;
    REQUIRE(a * b == ZRat(1)); // inverse pair

    REQUIRE(z + ZRat(1) - ZRat(1) == z); // additive identity

    // (2z+1)/(z+2) / (2z+1) = 1/(z+2), cross-checked by multiplication
    ZRat lhs = zf::lin(1, 2) / zf::lin(2, 1) / zf::lin(1, 2);
    ZRat rhs = ZRat(1) / zf::lin(2, 1);
    REQUIRE(lhs == rhs);
    REQUIRE(lhs * zf::lin(1, 2) * zf::lin(2, 1) == ZRat(ZPoly({Rat(1), Rat(2)})));

    REQUIRE_THROWS_AS(a / ZRat(0), DivisionByZero);
}

TEST_CASE("ratzeta canonical round trip") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        ZRat f = random_zrat(rng);
        if (f.is_zero()) continue;
        ZRat again = ZRat(f.num, ZPoly(1)) * ZRat(f.den, ZPoly(1)).inv();
        REQUIRE(again == f);
        // scaling numerator and denominator together does not change the form
        ZPoly s({Rat(3), Rat(-7)});
        ZRat scaled(f.num * s, f.den * s);
        REQUIRE(scaled == f);
    }
}

TEST_CASE("mpoly exact division") {
    // (x2^2 - x1^2) / (x2 - x1) = x1 + x2
    MPoly x1 = MPoly::variable(2, 0), x2 = MPoly::variable(2, 1);
    MPoly q = (x2 * x2 - x1 * x1).exact_div(x2 - x1);
    REQUIRE(q == x1 + x2);

    Rng rng(3);
    MPoly a = random_mpoly(rng, 2, 3, 5);
    REQUIRE(a.exact_div(MPoly(2, ZRat(1))) == a); // unit divisor

    // Vandermonde(x1,x2,x3) / (x3-x1) = (x2-x1)(x3-x2)
    MPoly x3 = MPoly::variable(3, 2);
    MPoly y1 = MPoly::variable(3, 0), y2 = MPoly::variable(3, 1);
    MPoly v = (y2 - y1) * (x3 - y1) * (x3 - y2);
    REQUIRE(v.exact_div(x3 - y1) == (y2 - y1) * (x3 - y2));

    REQUIRE_THROWS_AS((x1 * x1 + MPoly(2, ZRat(1))).exact_div(x2 - x1), InexactDivision);
}

TEST_CASE("mpoly division property: (q*b)/b = q") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly q = random_mpoly(rng, 3, 2, 4);
        MPoly b = random_mpoly(rng, 3, 2, 3);
        if (b.is_zero()) continue;
        REQUIRE((q * b).exact_div(b) == q);
    }
}

TEST_CASE("bareiss determinant") {
    // 1x1
    std::vector<std::vector<MPoly>> m1{{MPoly::variable(1, 0)}};
    REQUIRE(bareiss_det(m1, 1) == MPoly::variable(1, 0));

    // identity 3x3
    std::vector<std::vector<ZRat>> id(3, std::vector<ZRat>(3, ZRat(0)));
    for (int i = 0; i < 3; ++i) id[i][i] = ZRat(1);
    REQUIRE(bareiss_det(id) == ZRat(1));

    // [[x1,x2],[x2,x1]] -> x1^2 - x2^2
    MPoly x1 = MPoly::variable(2, 0), x2 = MPoly::variable(2, 1);
    std::vector<std::vector<MPoly>> m2{{x1, x2}, {x2, x1}};
    REQUIRE(bareiss_det(m2, 2) == x1 * x1 - x2 * x2);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    Rng rng(23);
    for (int size = 1; size <= 4; ++size) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::vector<ZRat>> m(size, std::vector<ZRat>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) m[i][j] = ZRat(rng.small(-6, 6));
            REQUIRE(bareiss_det(m) == cofactor_det(m));
        }
    }
    // and with polynomial entries
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::vector<MPoly>> m(3, std::vector<MPoly>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = random_mpoly(rng, 2, 1, 2);
        REQUIRE(bareiss_det(m, 2) == cofactor_det(m, 2));
    }
}

TEST_CASE("valuation at points and infinity") {
    ZRat z = ZRat::zeta();
    ZRat f = z * z / (z + ZRat(2));
    REQUIRE(f.valuation_at(Rat(0)) == 2);
    REQUIRE(f.valuation_at_infinity() == -1);
    REQUIRE(f.valuation_at(Rat(-2)) == -1);
    REQUIRE(f.valuation_at(Rat(5)) == 0);
    REQUIRE_THROWS_AS(ZRat(0).valuation_at(Rat(0)), ZeroFunction);
}

TEST_CASE("valuation is additive") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        ZRat f = random_zrat(rng), g = random_zrat(rng);
        if (f.is_zero() || g.is_zero()) continue;
        for (Rat pt : {Rat(0), Rat(1), Rat(-2)}) {
            REQUIRE((f * g).valuation_at(pt) == f.valuation_at(pt) + g.valuation_at(pt));
        }
        REQUIRE((f * g).valuation_at_infinity() ==
                f.valuation_at_infinity() + g.valuation_at_infinity());
    }
}

TEST_CASE("derivative follows the quotient rule") {
    ZRat z = ZRat::zeta();
    ZRat f = (z * z + ZRat(1)) / (z - ZRat(1));
    ZRat expect = (ZRat(2) * z * (z - ZRat(1)) - (z * z + ZRat(1))) / ((z - ZRat(1)) * (z - ZRat(1)));
    REQUIRE(f.derivative() == expect);
}

TEST_CASE("canonical printing grammar") {
    ZRat z = ZRat::zeta();
    ZRat f = ZRat(-2) * z * z * (z - ZRat(1)) * (z + ZRat(1)) * (z + ZRat(1)) * zf::lin(1, 2)
             / (zf::lin(2, 1) * zf::lin(2, 1));
    REQUIRE(f.to_string() ==
            "(-4*z^6 - 6*z^5 + 2*z^4 + 6*z^3 + 2*z^2) / (z^2 + 4*z + 4)");
    REQUIRE(ZRat(Rat(1, 3)).to_string() == "(1) / (3)");
    REQUIRE((z + ZRat(1)).to_string() == "z + 1");
}
