#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kalpha/cfstrings.hpp"
#include "kalpha/exactnum.hpp"
#include "kalpha/words.hpp"

namespace kalpha {

struct BinInterval {
    FareyWord word;
    Rational a_minus;
    Rational a_plus;
    Rational length() const { return a_plus - a_minus; }
};

BinInterval bin_interval(const FareyWord& w);
bool eb_membership(const Rational& x);

// Eventually periodic binary expansion 0.pre(period)^inf of a rational in [0,1).
struct BinaryExpansion {
    std::string pre;
    std::string period;   // nonempty; "0" for dyadic values
};
BinaryExpansion binary_expansion(const Rational& x);

// phi(x) = [0; RL(binary digits of x)] on [0, 1/2].  Dyadic inputs give a
// rational (both binary expansions are evaluated and must agree); other
// rationals give a quadratic irrational.
QuadSurd phi_map(const Rational& x);
QuadSurd phi_of_expansion(const BinaryExpansion& e);

// Minkowski question mark function on rationals and on quadratic surds of
// (0,1), exact in both cases.
Rational minkowski_q(const Rational& x);
Rational minkowski_q(const QuadSurd& x);

struct Qumterval {
    FareyWord word;
    CFString S;
    QuadSurd alpha_minus;
    QuadSurd alpha_plus;
    Rational pseudocenter;
    std::size_t m0 = 0, m1 = 0;

    bool contains(const QuadSurd& a) const { return alpha_minus < a && a < alpha_plus; }
    bool contains(const Rational& a) const { return contains(QuadSurd(a)); }
};

Qumterval qumterval_of(const FareyWord& w);

enum class Location { Interior, Boundary };

struct Located {
    Qumterval J;
    Location where = Location::Interior;
    std::size_t depth = 0;   // Farey-tree steps taken
};

Located locate_qumterval(const Rational& alpha);

// Simplest (least denominator) rational in the open interval (lo, hi),
// lo >= 0; hi may be omitted for +infinity.
Rational simplest_between(const QuadSurd& lo, const std::optional<QuadSurd>& hi);

struct CardioidAngles {
    Rational theta_minus, theta_plus;
};
CardioidAngles cardioid_angles(const Rational& r);

struct ZetaOptions {
    std::optional<std::pair<Rational, Rational>> window;
    bool binary_intervals = false;   // sum |I_w|^s instead of |J_w|^s
};
double zeta_partial(double s, int depth, const ZetaOptions& opt = {});

// All Farey words of length 2..n in increasing order of rho.
std::vector<FareyWord> farey_words_up_to_length(int n);

// JSON rows for an atlas of qumtervals of words with |w| <= n.
std::string atlas_json(int max_length);
std::string atlas_csv(int max_length);

}  // namespace kalpha
