#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kalpha/bifurcation.hpp"
#include "kalpha/bigfloat.hpp"
#include "kalpha/exactnum.hpp"
#include "kalpha/kdynamics.hpp"
#include "kalpha/words.hpp"

namespace kalpha {

// The plane is (xi, t): t is the K_alpha coordinate, xi the extension
// coordinate, and Phi(xi, t) = (-1/(xi - c_alpha(t)), K_alpha(t)) with
// invariant density (1 + xi t)^-2.

struct Rect {
    QuadSurd x_lo, x_hi;
    Rational y_lo, y_hi;
};

// A horizontal boundary piece of the attractor: xi in [left, right] at
// height level.
struct Segment {
    Rational level;
    QuadSurd left, right;
};

struct Attractor {
    FareyWord word;
    Rational alpha;
    QuadSurd corner_x, corner_y;
    std::vector<Rational> h_levels_low;    // alpha-1, K(alpha-1), ..., K^m0(alpha-1)
    std::vector<Rational> h_levels_high;   // alpha, K(alpha), ..., K^m1(alpha)
    std::vector<Segment> lower, upper;     // sorted by level
    std::vector<QuadSurd> v_levels;        // sorted distinct segment endpoints
    std::vector<Rect> rects;               // one per horizontal strip, sorted by y
};

std::pair<QuadSurd, QuadSurd> attractor_corners(const FareyWord& w);

// The recipe: lower family from [y, x/(x+1)] at alpha-1, upper family from
// [y/(1-y), x] at alpha, each pushed forward by Phi along the orbit of its
// level.  Throws std::logic_error when a seam, the covering of [y, x], or the
// inclusion of the fixed rectangle fails.
Attractor build_attractor(const Rational& alpha, const FareyWord& w);

struct QSystemCheck {
    bool upper_ok = false;   // STS y = pi_1 Phi^{j1}(x, alpha)
    bool lower_ok = false;   // ST^-1S x = pi_1 Phi^{j0}(y, alpha-1)
    std::size_t j0 = 0, j1 = 0;
};
QSystemCheck check_qsystem(const FareyWord& w, const Rational& alpha);

// Exact value of (1 + x1 y1)(1 + x0 y0) / ((1 + x1 y0)(1 + x0 y1)).
QuadSurd rect_mass_ratio(const Rect& r);
Ball rect_mass(const Rect& r, mpfr_prec_t prec);

// Default working precision: $KALPHA_PRECISION_BITS if set (>= 64), else 128.
mpfr_prec_t default_precision();

struct EntropySample {
    Rational alpha;
    FareyWord word;
    std::size_t m0 = 0, m1 = 0;
    Ball A;
    Ball h;
    double err_bound = 0;   // radius of the ball around h
};

struct EntropyOptions {
    mpfr_prec_t precision = 0;    // 0: default_precision()
    bool reduce_symmetric = true; // alpha > 1/2 through h(1 - alpha)
};

Ball attractor_area(const Attractor& a, mpfr_prec_t prec);
EntropySample entropy_at(const Rational& alpha, const EntropyOptions& opt = {});
// Same, with the qumterval already known (skips the Farey-tree search).
EntropySample entropy_in(const Rational& alpha, const FareyWord& w, const EntropyOptions& opt = {});

Ball density_slice(const Attractor& a, const Rational& t, mpfr_prec_t prec);
Ball measure_interval(const Attractor& a, const Rational& lo, const Rational& hi, mpfr_prec_t prec);

// Rational grid with denominator 2^k (<= 10^6) inside (from, to), endpoints
// excluded and duplicates removed.
std::vector<Rational> dyadic_grid(const Rational& from, const Rational& to, int samples);
std::vector<EntropySample> entropy_curve(const Rational& from, const Rational& to, int samples,
                                         int workers = 0, const EntropyOptions& opt = {});
std::vector<EntropySample> entropy_many(const std::vector<Rational>& alphas, int workers = 0,
                                        const EntropyOptions& opt = {});
std::string entropy_csv(const std::vector<EntropySample>& rows);
std::string entropy_json(const std::vector<EntropySample>& rows);

std::string attractor_json(const Attractor& a);

struct AsymptoticRow {
    long N = 0;
    Rational alpha;
    double h = 0, A = 0;
    double prediction = 0;   // pi^2 / (3 log(N+1))
    double ratio = 0;        // h / prediction
    double lower_bound = 0;  // log N - log 4
};
std::vector<AsymptoticRow> asymptotic_probe(const std::vector<long>& N_list);

struct SlopeRow {
    Rational delta;
    std::size_t candidates = 0;
    double max_slope = 0;
    std::string argmax_word;
};
struct SlopeOptions {
    Rational delta0 = Rational(1, 32);
    int halvings = 8;
    Rational kappa = Rational(1, 16);  // candidate qumtervals have |J| >= kappa * delta
    // Restrict to qumtervals on one side of the target (-1 left, +1 right, 0 both).
    int side = 0;
};
// Max over qumtervals J_v inside (target - delta, target + delta) of the
// difference quotient of h between two simplest rationals of J_v, one on
// each side of its pseudocenter.
std::vector<SlopeRow> slope_growth_probe(const QuadSurd& target, const SlopeOptions& opt = {});

// Birkhoff average of log|K'| = -2 log|t| along a double-precision orbit.
double lyapunov_estimate(double alpha, std::size_t steps, std::uint64_t seed);

}  // namespace kalpha
