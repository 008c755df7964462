#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "kalpha/exactnum.hpp"

namespace kalpha {

// Finite word over {0,1}, stored as an ASCII string of '0'/'1'.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::string digits);

    const std::string& str() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    char operator[](std::size_t i) const { return s_[i]; }

    std::size_t count0() const;
    std::size_t count1() const;

    BinaryWord transpose() const;     // ^t w, reversed
    BinaryWord check() const;         // digits exchanged
    BinaryWord vee_first() const;     // first digit exchanged
    BinaryWord vee_last() const;      // last digit exchanged
    BinaryWord rotate(std::size_t k) const;  // tau^k: move the first k digits to the end
    BinaryWord prefix(std::size_t n) const { return BinaryWord(s_.substr(0, n)); }
    BinaryWord suffix_from(std::size_t n) const { return BinaryWord(s_.substr(n)); }
    bool is_palindrome() const;
    // Value of the integer with these binary digits (most significant first).
    Int as_integer() const;

    friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) { return BinaryWord(a.s_ + b.s_); }
    friend bool operator==(const BinaryWord& a, const BinaryWord& b) { return a.s_ == b.s_; }
    friend bool operator<(const BinaryWord& a, const BinaryWord& b) { return a.s_ < b.s_; }  // lexicographic

private:
    std::string s_;
};

struct FareyWord {
    BinaryWord word;
    Rational rho;

    FareyWord() = default;
    FareyWord(BinaryWord w, Rational r) : word(std::move(w)), rho(std::move(r)) {}

    std::size_t m0() const { return word.count0(); }
    std::size_t m1() const { return word.count1(); }
    std::size_t size() const { return word.size(); }
    bool degenerate() const { return word.size() < 2; }
    bool in_fw0() const { return m0() > m1(); }
    bool in_fw1() const { return m0() < m1(); }
    const std::string& str() const { return word.str(); }

    friend bool operator==(const FareyWord& a, const FareyWord& b) { return a.word == b.word; }
};

Rational rho_of(const BinaryWord& w);

// u < v iff uv < vu lexicographically (the order of the infinite repetitions).
bool word_order_lt(const BinaryWord& u, const BinaryWord& v);
// u << v iff some prefixes of equal length compare lexicographically u1 < v1.
bool strong_order_ll(const BinaryWord& u, const BinaryWord& v);

constexpr int kFareyListCap = 16;
std::vector<FareyWord> farey_list(int n);

enum class Side { Plus, Minus };

// W_r from the rotation coding (eps_k = floor(k r) - floor((k-1) r), x -> 0+).
FareyWord word_from_rational(const Rational& r);
// Same word obtained by Stern-Brocot descent with concatenation of the
// neighbouring words; results are cached (safe for concurrent readers).
FareyWord word_from_rational_tree(const Rational& r);
BinaryWord phi_r_coding(const Rational& r, Side side);

bool is_farey(const BinaryWord& w);
FareyWord farey_word(const BinaryWord& w);  // validates, throws if w is not Farey

std::pair<FareyWord, FareyWord> standard_factorization(const FareyWord& w);

struct CyclicExtremes {
    BinaryWord min, second_min, max;
};
CyclicExtremes cyclic_extremes(const FareyWord& w);
CyclicExtremes cyclic_extremes_bruteforce(const BinaryWord& w);

std::vector<Rational> rotation_set(const FareyWord& w);

BinaryWord substitute(const BinaryWord& w, const BinaryWord& u0, const BinaryWord& u1);
BinaryWord apply_U0(const BinaryWord& w);  // 0 -> 0, 1 -> 01
BinaryWord apply_U1(const BinaryWord& w);  // 0 -> 01, 1 -> 1

// Mirror word ^t(check w) = W_{1-r}.
FareyWord mirror(const FareyWord& w);

// Farey parents p1/q1 < r < p2/q2 in the Stern-Brocot tree (r non-degenerate).
std::pair<Rational, Rational> farey_parents(const Rational& r);

}  // namespace kalpha
