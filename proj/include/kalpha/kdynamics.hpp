#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kalpha/bifurcation.hpp"
#include "kalpha/exactnum.hpp"
#include "kalpha/words.hpp"

namespace kalpha {

// Digit convention: K_alpha(x) = -1/x - c with c = floor(-1/x + 1 - alpha);
// the inverse branch is the matrix (0 -1; 1 c) = S T^c.

template <class T>
Int c_alpha(const T& alpha, const T& x);

template <class T>
struct StepResult {
    T value;
    std::optional<Int> digit;   // empty for the fixed point 0
};

template <class T>
StepResult<T> k_step(const T& alpha, const T& x);

template <class T>
struct OrbitRecord {
    T start;
    std::vector<T> points;          // points[0] = start, points[l] = K^l(start)
    std::vector<Int> digits;        // digits[j-1] = c_{j,alpha}(start)
    std::vector<Mobius> matrices;   // matrices[l] = M_{alpha,start,l}
    bool hit_zero = false;
};

template <class T>
OrbitRecord<T> orbit(const T& alpha, const T& x, std::size_t steps);

struct MatchingCertificate {
    FareyWord word;
    Mobius M, M_prime;
    std::size_t m0 = 0, m1 = 0;
    bool identity_holds = false;   // T M = M' S T^-1 S projectively
};

MatchingCertificate matching_matrices(const FareyWord& w);

struct AlphaCheck {
    Rational alpha;
    bool inside = false;
    bool matrices_equal = false;
    bool orbits_match = false;
    Rational lower_end;   // K^{m0+1}(alpha - 1)
    Rational upper_end;   // K^{m1+1}(alpha)
};

struct MatchingReport {
    MatchingCertificate certificate;
    std::vector<AlphaCheck> checks;
    bool all_exact = false;
};

MatchingReport verify_matching(const FareyWord& w, const std::vector<Rational>& alphas);

// Rationals strictly inside J_w: the pseudocenter and `per_side` simplest
// rationals on each side of it.
std::vector<Rational> sample_alphas(const Qumterval& J, int per_side);

// (j0, j1) from the standard factorization; FW1 words through the mirror.
std::pair<std::size_t, std::size_t> orbit_order_extremes(const FareyWord& w);
// Same pair read off the exact orbits at a parameter in J_w.
std::pair<std::size_t, std::size_t> orbit_order_extremes_bruteforce(const FareyWord& w, const Rational& alpha);

struct SymmetryResult {
    Rational alpha, x;
    bool exceptional = false;   // x = 1/(k - alpha)
};
SymmetryResult symmetry_conjugate(const Rational& alpha, const Rational& x);

struct SlowReturn {
    Rational value;
    std::size_t translations = 0;
};
SlowReturn slow_first_return(const Rational& alpha, const Rational& x, std::size_t max_steps);

// Expected digit patterns for alpha - 1 and alpha (w in FW0 or w = 01).
std::vector<Int> expected_lower_digits(const FareyWord& w);
std::vector<Int> expected_upper_digits(const FareyWord& w);

}  // namespace kalpha
