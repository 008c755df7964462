#include <doctest.h>

#include <numeric>
#include <random>

#include "kalpha/cfstrings.hpp"

using namespace kalpha;

namespace {

std::vector<FareyWord> words_up_to(long n) {
    std::vector<FareyWord> out;
    for (long q = 2; q <= n; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.push_back(word_from_rational(Rational(Int(p), Int(q))));
    return out;
}

CFString random_string(std::mt19937_64& rng, int max_len, int max_digit) {
    std::uniform_int_distribution<int> len(1, max_len), dig(1, max_digit);
    CFString s(static_cast<std::size_t>(len(rng)));
    for (auto& a : s) a = dig(rng);
    return s;
}

// All strings with digits in 1..d and length 1..n.
std::vector<CFString> all_strings(int n, int d) {
    std::vector<CFString> out, layer{{}};
    for (int len = 1; len <= n; ++len) {
        std::vector<CFString> next;
        for (const auto& s : layer)
            for (int a = 1; a <= d; ++a) {
                CFString t = s;
                t.push_back(a);
                next.push_back(t);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = next;
    }
    return out;
}

}  // namespace

TEST_CASE("text form") {
    CHECK(cf_str({3, 1, 2}) == "[3,1,2]");
    CHECK(cf_parse("[3, 1,2]") == CFString{3, 1, 2});
    CHECK(cf_parse("4,1") == CFString{4, 1});
    CHECK_THROWS_AS(cf_parse("[0,2]"), std::invalid_argument);
    CHECK_THROWS_AS(cf_parse("[]"), std::invalid_argument);
}

TEST_CASE("conjugates") {
    CHECK(right_conjugate({3, 1, 3}) == CFString{3, 1, 2, 1});
    CHECK(left_conjugate({3, 1, 3}) == CFString{1, 2, 1, 3});
    CHECK(right_conjugate({2, 1}) == CFString{3});
    CHECK_THROWS_AS(right_conjugate({1}), std::invalid_argument);
}

TEST_CASE("conjugation is involutive and preserves values") {
    std::mt19937_64 rng(5);
    int n = 0;
    while (n < 10000) {
        CFString s = random_string(rng, 8, 5);
        if (s == CFString{1}) continue;
        ++n;
        CHECK(right_conjugate(right_conjugate(s)) == s);
        CHECK(left_conjugate(left_conjugate(s)) == s);
        CHECK(cf_value(right_conjugate(s)) == cf_value(s));
        CHECK(cf_value(left_conjugate(s)) == Rational(1) - cf_value(s));
    }
}

TEST_CASE("partial shift") {
    CHECK(partial_shift({3, 1, 2}) == CFString{2, 1, 2});
    CHECK(partial_shift({1, 5}) == CFString{5});
    CHECK(partial_shift(partial_shift({2, 1})) == CFString{1});
}

TEST_CASE("denominators") {
    CHECK(denominator({2, 1}) == 3);
    CHECK(denominator({1}) == 1);
    CFString s{3, 1, 2, 1, 2, 1};
    // independent evaluation of [0;3,1,2,1,2,1] from the bottom up
    Rational x(0);
    for (auto it = s.rbegin(); it != s.rend(); ++it) x = Rational(1) / (Rational(static_cast<long>(*it)) + x);
    CHECK(denominator(s) == x.den());
    CHECK(numerator(s) == x.num());
    std::mt19937_64 rng(6);
    for (int i = 0; i < 2000; ++i) {
        CFString a = random_string(rng, 6, 9), b = random_string(rng, 6, 9);
        Int qa = denominator(a), qb = denominator(b), qab = denominator(cf_concat(a, b));
        CHECK(qa * qb <= qab);
        CHECK(qab <= 2 * qa * qb);
    }
}

TEST_CASE("cylinders") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) {
        CFString s = random_string(rng, 12, 6);
        Rational len = cylinder_length(s);
        Int q = denominator(s);
        CHECK(Rational(Int(1), 2 * q * q) <= len);
        CHECK(len <= Rational(Int(1), q * q));
    }
}

TEST_CASE("alternate lexicographic order") {
    CHECK_FALSE(alt_lex_lt({2, 1}, {3, 1}));
    CHECK(alt_lex_lt({1, 2}, {1, 3}));
    CHECK_THROWS_AS(alt_lex_lt({1}, {1, 2}), std::invalid_argument);
    CHECK_FALSE(string_ll({2, 1}, {2, 1, 4}));
    auto all = all_strings(4, 3);
    for (const auto& s : all)
        for (const auto& t : all) {
            if (s.size() != t.size()) continue;
            CHECK(alt_lex_lt(s, t) == (cf_value(s) < cf_value(t)));
        }
}

TEST_CASE("string lemma") {
    CHECK(string_lemma_check({2, 1}, {1, 1}));
    CHECK(surd_from_periodic_cf({}, {2, 1}) < surd_from_periodic_cf({}, {1, 1}));
    CHECK_FALSE(string_lemma_check({2, 1}, {2, 1}));
    auto all = all_strings(4, 3);
    for (const auto& s : all)
        for (const auto& t : all) {
            bool lhs = string_lemma_check(s, t);
            bool rhs = surd_from_periodic_cf({}, s) < surd_from_periodic_cf({}, t);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("runlength") {
    CHECK(runlength(BinaryWord("0001001001")) == CFString{3, 1, 2, 1, 2, 1});
    CHECK(runlength(BinaryWord("1110110110")) == CFString{3, 1, 2, 1, 2, 1});
    CHECK(runlength(BinaryWord("01")) == CFString{1, 1});
    CHECK(runlength(BinaryWord("00101")) == CFString{2, 1, 1, 1});
    CHECK(runlength_inverse({2, 1, 1, 1}, '0').str() == "00101");
    CHECK(runlength_inverse({2, 1, 1, 1}, '1').str() == "11010");
    CHECK(even_length({2, 1, 2}) == CFString{2, 1, 1, 1});
    CHECK(even_length({2, 1}) == CFString{2, 1});
    for (const auto& w : words_up_to(14)) {
        CFString S = runlength(w.word);
        CHECK(S.size() % 2 == 0);
        CHECK(runlength(w.word.check()) == S);
        CHECK(runlength(w.word.check().transpose()) == cf_transpose(S));
        CHECK(runlength(w.word.check().transpose()) == left_conjugate(right_conjugate(S)));
        CHECK(runlength_inverse(S, '0') == w.word);
    }
}

TEST_CASE("string orders along Farey runlengths") {
    for (const auto& w : words_up_to(14)) {
        CFString S = runlength(w.word);
        for (std::size_t k = 2; k < S.size(); k += 2) {
            CFString P(S.begin(), S.begin() + static_cast<long>(k)), Sk(S.begin() + static_cast<long>(k), S.end());
            CHECK(string_ll(S, Sk));
            if (w.in_fw0()) CHECK(string_ll(cf_concat(Sk, P), partial_shift(S)));
        }
    }
}

TEST_CASE("Farey structure") {
    FareyStructure fs = farey_structure({2, 1, 1, 1});
    CHECK(fs.a == 1);
    CHECK(fs.skeleton.str() == "01");
    CHECK(fs.side == FareySide::FW0);
    CHECK(fs.unique);
    CHECK(farey_blocks(fs) == CFString{2, 1, 1, 1});

    fs = farey_structure({2, 1});
    CHECK(fs.a == 1);
    CHECK(fs.skeleton.str() == "0");   // the single block B0 = (a+1, 1)
    CHECK_FALSE(fs.unique);

    fs = farey_structure({1, 1});
    CHECK(fs.a == 1);
    CHECK(fs.skeleton.str() == "1");
    CHECK(fs.side == FareySide::FW0);
    CHECK_FALSE(fs.unique);

    CHECK_THROWS_AS(farey_structure({1, 3, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(farey_structure({2, 1, 1}), std::invalid_argument);

    for (const auto& w : words_up_to(14)) {
        CFString S = runlength(w.word);
        FareyStructure f = farey_structure(S);
        CHECK(farey_blocks(f) == S);
        CHECK((f.side == FareySide::FW0) == (w.in_fw0() || w.str() == "01"));
    }
}
