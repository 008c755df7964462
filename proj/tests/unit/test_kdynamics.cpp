#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kalpha/kdynamics.hpp"

using namespace kalpha;

namespace {

FareyWord W(const char* s) { return farey_word(BinaryWord(s)); }

Mobius pow_mob(const Mobius& m, int k) {
    Mobius r(1, 0, 0, 1);
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

std::vector<std::size_t> sort_perm(const std::vector<Rational>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
}

}  // namespace

TEST_CASE("single steps") {
    const Rational alpha(9, 20);
    auto up = k_step(alpha, alpha);
    CHECK(up.value == (Rational(2) * alpha - Rational(1)) / alpha);
    CHECK(*up.digit == -2);
    auto lo = k_step(alpha, alpha - Rational(1));
    CHECK(lo.value == (Rational(2) * alpha - Rational(1)) / (Rational(1) - alpha));
    CHECK(*lo.digit == 2);
    auto z = k_step(alpha, Rational(0));
    CHECK(z.value == Rational(0));
    CHECK_FALSE(z.digit.has_value());
    CHECK_THROWS_AS(k_step(alpha, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(k_step(alpha, Rational(-3, 5)), std::invalid_argument);
    CHECK(c_alpha(Rational(1, 2), Rational(1, 3)) == -3);
}

TEST_CASE("orbits and their matrices") {
    auto o = orbit(Rational(1, 2), Rational(1, 2), 5);
    CHECK(o.hit_zero);
    REQUIRE(o.points.size() == 2);
    CHECK(o.points[1] == Rational(0));

    o = orbit(Rational(1, 3), Rational(-2, 3), 5);
    CHECK(o.digits == std::vector<Int>{2, 2});
    CHECK(o.points.back() == Rational(0));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        long q = std::uniform_int_distribution<long>(3, 200)(rng);
        Rational alpha(Int(std::uniform_int_distribution<long>(1, q - 1)(rng)), Int(q));
        long d = std::uniform_int_distribution<long>(2, 5000)(rng);
        Rational x = alpha - Rational(Int(std::uniform_int_distribution<long>(1, d)(rng)), Int(d));
        auto rec = orbit(alpha, x, 30);
        for (std::size_t l = 0; l < rec.points.size(); ++l) {
            auto back = mobius_apply(rec.matrices[l], Proj<Rational>(rec.points[l]));
            CHECK_FALSE(back.inf);
            CHECK(back.value == x);
            CHECK(rec.points[l] >= alpha - Rational(1));
            CHECK(rec.points[l] <= alpha);
        }
    }
}

TEST_CASE("matching matrices of small words") {
    const Mobius S = Mobius::S(), T2 = Mobius::T(2), T = Mobius::T();
    auto c = matching_matrices(W("01"));
    CHECK(c.M.projectively_equal(S * T2));
    CHECK(c.M_prime.projectively_equal(S * Mobius::T(-2)));
    CHECK((T * c.M).projectively_equal(Mobius(1, 1, 1, 2)));
    c = matching_matrices(W("001"));
    CHECK(c.M.projectively_equal(pow_mob(S * T2, 2)));
    CHECK(c.M_prime.projectively_equal(S * Mobius::T(-3)));
    CHECK((c.m0 == 2 && c.m1 == 1));
    c = matching_matrices(W("00101"));
    CHECK(c.M.projectively_equal(pow_mob(S * T2, 2) * T * S * T2));
    CHECK(c.M_prime.projectively_equal(S * Mobius::T(-3) * S * Mobius::T(-3)));
    CHECK(c.identity_holds);
    CHECK_THROWS_AS(matching_matrices(W("0")), std::invalid_argument);
}

TEST_CASE("the matching identity holds on F_8") {
    const Mobius lhs_tail = Mobius::S() * Mobius::T(-1) * Mobius::S();
    std::size_t n = 0;
    for (const auto& w : farey_list(8)) {
        if (w.degenerate()) continue;
        auto c = matching_matrices(w);
        CHECK((Mobius::T() * c.M).projectively_equal(c.M_prime * lhs_tail));
        CHECK(c.identity_holds);
        ++n;
    }
    CHECK(n == 255);
}

TEST_CASE("exact matching at sampled parameters") {
    for (const auto& w : farey_words_up_to_length(7)) {
        Qumterval J = qumterval_of(w);
        auto rep = verify_matching(w, sample_alphas(J, 2));
        CHECK(rep.checks.size() == 5);
        CHECK(rep.all_exact);
        for (const auto& a : rep.checks) CHECK(a.lower_end == a.upper_end);
    }
    auto rep = verify_matching(W("001"), {Rational(1, 3)});
    CHECK(rep.all_exact);
    CHECK(rep.checks[0].lower_end == Rational(0));
    // 4/15 lies in J_0001001, not in J_00101; the check reports it.
    rep = verify_matching(W("00101"), {Rational(4, 15)});
    CHECK_FALSE(rep.checks[0].inside);
    CHECK_FALSE(rep.all_exact);
    CHECK(verify_matching(W("0001001"), {Rational(4, 15)}).all_exact);
}

TEST_CASE("digit tables for FW0") {
    for (const auto& w : farey_words_up_to_length(10)) {
        if (!w.in_fw0() && w.str() != "01") continue;
        Qumterval J = qumterval_of(w);
        auto lo = expected_lower_digits(w), hi = expected_upper_digits(w);
        CHECK(lo.size() == J.m0);
        CHECK(hi.size() == J.m1);
        for (const auto& alpha : sample_alphas(J, 3)) {
            auto o0 = orbit(alpha, alpha - Rational(1), J.m0);
            auto o1 = orbit(alpha, alpha, J.m1);
            REQUIRE(o0.digits.size() == J.m0);
            REQUIRE(o1.digits.size() == J.m1);
            CHECK(o0.digits == lo);
            CHECK(o1.digits == hi);
        }
    }
    CHECK_THROWS_AS(expected_lower_digits(W("011")), std::invalid_argument);
}

TEST_CASE("orbit order is constant on each qumterval") {
    for (const auto& w : farey_words_up_to_length(8)) {
        Qumterval J = qumterval_of(w);
        std::vector<std::size_t> perm0, perm1;
        bool first = true;
        for (const auto& alpha : sample_alphas(J, 2)) {
            auto o0 = orbit(alpha, alpha - Rational(1), J.m0);
            auto o1 = orbit(alpha, alpha, J.m1);
            auto p0 = sort_perm(o0.points), p1 = sort_perm(o1.points);
            if (first) {
                perm0 = p0;
                perm1 = p1;
                first = false;
            }
            CHECK(p0 == perm0);
            CHECK(p1 == perm1);
        }
    }
}

TEST_CASE("(j0, j1) from the standard factorization") {
    CHECK(orbit_order_extremes(W("00101")) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(orbit_order_extremes(W("01")) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(orbit_order_extremes(W("001")) == std::pair<std::size_t, std::size_t>{1, 1});
    for (const auto& w : farey_words_up_to_length(10)) {
        Qumterval J = qumterval_of(w);
        for (const auto& alpha : sample_alphas(J, 1))
            CHECK(orbit_order_extremes(w) == orbit_order_extremes_bruteforce(w, alpha));
    }
}

TEST_CASE("the symmetry alpha -> 1 - alpha") {
    auto s = symmetry_conjugate(Rational(1, 3), Rational(1, 4));
    CHECK(s.alpha == Rational(2, 3));
    CHECK(s.x == Rational(-1, 4));
    CHECK_FALSE(s.exceptional);
    CHECK(k_step(Rational(1, 3), Rational(1, 4)).value == -k_step(Rational(2, 3), Rational(-1, 4)).value);
    CHECK(symmetry_conjugate(Rational(1, 3), Rational(3, 8)).exceptional);  // 8/3 + 1/3 = 3

    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 1000) {
        long q = std::uniform_int_distribution<long>(3, 300)(rng);
        Rational alpha(Int(std::uniform_int_distribution<long>(1, q - 1)(rng)), Int(q));
        long d = std::uniform_int_distribution<long>(2, 3000)(rng);
        Rational x = alpha - Rational(Int(std::uniform_int_distribution<long>(1, d - 1)(rng)), Int(d));
        if (x.sign() == 0) continue;
        auto c = symmetry_conjugate(alpha, x);
        if (c.exceptional) continue;
        auto a = k_step(alpha, x), b = k_step(c.alpha, c.x);
        CHECK(a.value == -b.value);
        CHECK(*a.digit == -*b.digit);
        ++checked;
    }
}

TEST_CASE("slow first return") {
    auto r = slow_first_return(Rational(1, 3), Rational(1, 4), 100);
    CHECK(r.value == k_step(Rational(1, 3), Rational(1, 4)).value);
    CHECK(r.translations == 4);
    CHECK_THROWS_AS(slow_first_return(Rational(1, 3), Rational(0), 10), std::invalid_argument);
    CHECK_THROWS_AS(slow_first_return(Rational(1, 3), Rational(1, 1000), 10), std::runtime_error);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 500; ++i) {
        long q = std::uniform_int_distribution<long>(3, 100)(rng);
        Rational alpha(Int(std::uniform_int_distribution<long>(1, q - 1)(rng)), Int(q));
        long d = std::uniform_int_distribution<long>(2, 500)(rng);
        Rational x = alpha - Rational(Int(std::uniform_int_distribution<long>(1, d)(rng)), Int(d));
        if (x.sign() == 0) continue;
        auto s = slow_first_return(alpha, x, 100000);
        auto k = k_step(alpha, x);
        CHECK(s.value == k.value);
        Int c = *k.digit;
        CHECK(Int(static_cast<unsigned long>(s.translations)) == abs(c));
    }
}

TEST_CASE("quadratic orbits of the qumterval endpoints") {
    for (const char* s : {"001", "00101", "0001"}) {
        Qumterval J = qumterval_of(W(s));
        QuadSurd a = J.alpha_plus;
        auto o = orbit(a, a, J.m1 + 2);
        for (std::size_t l = 0; l < o.points.size(); ++l) {
            auto back = mobius_apply(o.matrices[l], Proj<QuadSurd>(o.points[l]));
            CHECK_FALSE(back.inf);
            CHECK(back.value == a);
        }
        CHECK(o.points.size() == J.m1 + 3);
    }
}
