#include <doctest.h>

#include <random>

#include "kalpha/bigfloat.hpp"
#include "kalpha/exactnum.hpp"

using namespace kalpha;

namespace {

QuadSurd S(const char* s) { return QuadSurd::parse(s); }

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("9/20") == Rational(9, 20));
    CHECK(Rational::parse("0.45") == Rational(9, 20));
    CHECK(Rational::parse("-0.05") == Rational(-1, 20));
    CHECK(Rational::parse("045/100") == Rational(9, 20));
    CHECK(Rational::parse("-3/6").str() == "-1/2");
    CHECK(Rational::parse("+7").str() == "7/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
}

TEST_CASE("surd canonical form") {
    QuadSurd g = S("(-1+1*sqrt(5))/2");
    CHECK(g.str() == "(-1+1*sqrt(5))/2");
    CHECK(QuadSurd::parse(g.str()) == g);
    CHECK(S("2*sqrt(12)") == S("4*sqrt(3)"));
    CHECK(S("(2+2*sqrt(5))/4") == S("(1+1*sqrt(5))/2"));
    CHECK((g * g + g).str() == "1/1");
    CHECK(S("sqrt(9)").is_rational());
}

TEST_CASE("periodic continued fractions") {
    CHECK(surd_from_periodic_cf({}, {2, 1}) == S("(-1+1*sqrt(3))/2"));
    CHECK(surd_from_periodic_cf({3}, {1, 2}) == S("2-1*sqrt(3)"));
    CHECK(surd_from_periodic_cf({}, {1, 1}) == S("(-1+1*sqrt(5))/2"));
    CHECK(surd_from_periodic_cf({}, {1}) == surd_from_periodic_cf({}, {1, 1}));
    CHECK_THROWS_AS(surd_from_periodic_cf({1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(surd_from_periodic_cf({}, {0, 2}), std::invalid_argument);
}

TEST_CASE("re-expansion reproduces pre and period") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> dig(1, 6), len(0, 3), plen(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        CFString pre(static_cast<std::size_t>(len(rng))), period(static_cast<std::size_t>(plen(rng)));
        for (auto& a : pre) a = dig(rng);
        for (auto& a : period) a = dig(rng);
        QuadSurd x = surd_from_periodic_cf(pre, period);
        if (x.is_rational()) continue;
        std::size_t n = pre.size() + 3 * period.size();
        CFString got = cf_digits(x, n);
        REQUIRE(got.size() == n);
        CFString want = pre;
        for (int k = 0; k < 3; ++k) want.insert(want.end(), period.begin(), period.end());
        CHECK(got == want);
    }
}

TEST_CASE("mobius action") {
    auto m = Mobius(1, 1, 1, 2);
    CHECK(mobius_apply(Mobius::S(), Rational(-1)).value == Rational(1));
    QuadSurd g = surd_from_periodic_cf({}, {1});
    CHECK(mobius_apply(Mobius::T(), g).value == g + QuadSurd(1));
    CHECK(mobius_apply(m, Rational(0)).value == Rational(1, 2));
    CHECK(mobius_apply(Mobius::S(), Rational(0)).inf);
    CHECK(mobius_apply(Mobius::T(3), Proj<Rational>::infinity()).inf);
    CHECK(mobius_apply(m, Proj<Rational>::infinity()).value == Rational(1));
    CHECK(Mobius(1, 2, 3, 4).projectively_equal(Mobius(-1, -2, -3, -4)));
    CHECK(pow(Mobius::S(), 2).projectively_equal(Mobius()));
}

TEST_CASE("mobius_apply is a group action") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> k(-5, 5);
    auto random_matrix = [&] {
        Mobius m;
        for (int i = 0; i < 4; ++i) m = m * Mobius::T(k(rng)) * Mobius::S();
        return m;
    };
    for (int i = 0; i < 500; ++i) {
        Mobius a = random_matrix(), b = random_matrix();
        CHECK(abs(a.det()) == 1);
        Rational x(Int(k(rng)), Int(7));
        CHECK(mobius_apply(a * b, x) == mobius_apply(a, mobius_apply(b, Proj<Rational>(x))));
        QuadSurd y = surd_from_periodic_cf({}, {2, 1}) + QuadSurd(k(rng));
        CHECK(mobius_apply(a * b, y) == mobius_apply(a, mobius_apply(b, Proj<QuadSurd>(y))));
    }
}

TEST_CASE("floor") {
    CHECK(floor_exact(Rational(5, 2)) == 2);
    CHECK(floor_exact(Rational(-5, 2)) == -3);
    CHECK(floor_exact(S("(-1+1*sqrt(3))/2")) == 0);
    CHECK(floor_exact(-surd_from_periodic_cf({}, {1})) == -1);
    CHECK(floor_exact(S("3*sqrt(4)")) == 6);
}

TEST_CASE("floor agrees with a 100-digit approximation on 10^4 surds") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-100000, 100000), rad(2, 5000), den(1, 999);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        QuadSurd x = QuadSurd::make(Int(coef(rng)), Int(coef(rng)), Int(rad(rng)), Int(den(rng)));
        Ball b = Ball::from_surd(x, 340);
        mpfr_t lo, hi;
        mpfr_inits2(340, lo, hi, (mpfr_ptr)0);
        mpfr_sub(lo, b.mid(), b.rad(), MPFR_RNDD);
        mpfr_add(hi, b.mid(), b.rad(), MPFR_RNDU);
        mpfr_floor(lo, lo);
        mpfr_floor(hi, hi);
        if (mpfr_equal_p(lo, hi)) {
            mpz_class z;
            mpfr_get_z(z.get_mpz_t(), lo, MPFR_RNDN);
            CHECK(floor_exact(x) == z);
            ++checked;
        }
        mpfr_clears(lo, hi, (mpfr_ptr)0);
    }
    CHECK(checked > 9900);
}

TEST_CASE("ordering across fields") {
    CHECK(S("sqrt(2)") < S("sqrt(3)"));
    CHECK(S("(1+1*sqrt(2))") > S("(1+1*sqrt(5))/2"));
    CHECK(compare(S("sqrt(8)"), S("2*sqrt(2)")) == 0);
    CHECK(S("(-3+2*sqrt(6))/5") < QuadSurd(Rational(9, 20)));
    CHECK((S("sqrt(2)") - S("sqrt(2)")).sign() == 0);
}

TEST_CASE("decimal output") {
    CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
    CHECK(to_decimal(S("sqrt(2)"), 10) == "1.4142135624");
    CHECK(to_decimal(-surd_from_periodic_cf({}, {1}), 6) == "-0.618034");
}

TEST_CASE("ball arithmetic encloses the exact value") {
    Ball b = Ball::from_surd(S("sqrt(2)"), 128);
    Ball sq = b * b;
    Ball two = Ball::from_int(2, 128);
    Ball diff = sq - two;
    CHECK(std::fabs(diff.mid_double()) <= diff.rad_double() + 1e-36);
    Ball l = Ball::from_int(2, 128).log();
    CHECK(l.mid_str(20) == "0.69314718055994530942");
    CHECK_THROWS(Ball::from_int(1, 128) / Ball::from_int(0, 128));
}
