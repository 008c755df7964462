#include "kalpha/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kalpha/bigfloat.hpp"

namespace kalpha {

namespace {

Int two_pow(std::size_t n) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
    return out;
}

// Runs of a finite word, as continued fraction digits.
CFString runs_of(const std::string& s) {
    if (s.empty()) return {};
    return runlength(BinaryWord(s));
}

}  // namespace

BinInterval bin_interval(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("bin_interval: degenerate word");
    Int den = two_pow(w.size()) - 1;
    Rational a_plus(w.word.as_integer(), den);
    Rational a_minus = Rational(w.word.transpose().as_integer(), den) - Rational(1, 2);
    return {w, a_minus, a_plus};
}

bool eb_membership(const Rational& x) {
    if (x.sign() < 0 || x > Rational(1, 2)) throw std::invalid_argument("eb_membership: x must lie in [0,1/2]");
    // D^k(x) in [x, x + 1/2] for all k: the orbit of a rational is eventually
    // periodic, so iterating until the first repetition decides membership.
    const Rational hi = x + Rational(1, 2);
    Int n = x.num(), d = x.den();
    std::map<Int, bool> seen;
    while (!seen.count(n)) {
        seen[n] = true;
        Rational y(n, d);
        if (y < x || y > hi) return false;
        n = 2 * n;
        if (n >= d) n -= d;
    }
    return true;
}

BinaryExpansion binary_expansion(const Rational& x) {
    if (x.sign() < 0 || x >= Rational(1)) throw std::invalid_argument("binary_expansion: x must lie in [0,1)");
    Int n = x.num(), d = x.den();
    std::map<Int, std::size_t> at;
    std::string digits;
    while (!at.count(n)) {
        at[n] = digits.size();
        n *= 2;
        if (n >= d) {
            digits.push_back('1');
            n -= d;
        } else {
            digits.push_back('0');
        }
    }
    std::size_t start = at[n];
    return {digits.substr(0, start), digits.substr(start)};
}

QuadSurd phi_of_expansion(const BinaryExpansion& e) {
    if (e.period.empty()) throw std::invalid_argument("phi: empty period");
    bool constant = e.period.find_first_not_of(e.period[0]) == std::string::npos;
    if (constant) {
        // The last run is infinite, so the continued fraction terminates.
        char c = e.period[0];
        std::string head = e.pre;
        while (!head.empty() && head.back() == c) head.pop_back();
        if (head.empty()) return QuadSurd(0);
        return QuadSurd(cf_value(runs_of(head)));
    }
    // Cut at a run boundary which also sits inside the periodic part, so the
    // block of one period starts and ends on run boundaries.
    const std::size_t L = e.period.size(), P = e.pre.size();
    auto at = [&](std::size_t i) { return i < P ? e.pre[i] : e.period[(i - P) % L]; };
    std::size_t i0 = P + 1;
    while (at(i0 - 1) == at(i0)) ++i0;
    std::string head, block;
    for (std::size_t i = 0; i < i0; ++i) head.push_back(at(i));
    for (std::size_t i = i0; i < i0 + L; ++i) block.push_back(at(i));
    return surd_from_periodic_cf(runs_of(head), runs_of(block));
}

QuadSurd phi_map(const Rational& x) {
    if (x.sign() < 0 || x > Rational(1, 2)) throw std::invalid_argument("phi_map: x must lie in [0,1/2]");
    if (x == Rational(1, 2)) return QuadSurd(1);
    BinaryExpansion e = binary_expansion(x);
    QuadSurd v = phi_of_expansion(e);
    if (e.period == "0" && !e.pre.empty()) {
        // the other expansion ...0111...
        BinaryExpansion alt = e;
        while (!alt.pre.empty() && alt.pre.back() == '0') alt.pre.pop_back();
        alt.pre.back() = '0';
        alt.period = "1";
        QuadSurd w = phi_of_expansion(alt);
        if (!(w == v)) throw std::logic_error("phi_map: the two binary expansions disagree at " + x.str());
    }
    return v;
}

Rational minkowski_q(const Rational& x) {
    if (x.sign() < 0 || x > Rational(1)) throw std::invalid_argument("minkowski_q: x must lie in [0,1]");
    if (x == Rational(1)) return Rational(1);
    CFString a = cf_digits(x);
    Rational out(0);
    unsigned long acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += static_cast<unsigned long>(a[k]);
        Rational term(Int(2), two_pow(acc));
        out += (k % 2 == 0) ? term : -term;
    }
    return out;
}

Rational minkowski_q(const QuadSurd& x) {
    if (x.is_rational()) return minkowski_q(x.rational_value());
    CFString pre, period;
    cf_periodic_split(x, pre, period);
    auto block_sum = [](const CFString& digits, unsigned long& total) {
        Rational s(0);
        total = 0;
        for (std::size_t k = 0; k < digits.size(); ++k) {
            total += static_cast<unsigned long>(digits[k]);
            Rational term(Int(2), two_pow(total));
            s += (k % 2 == 0) ? term : -term;
        }
        return s;
    };
    unsigned long sp = 0, sc = 0;
    Rational head = block_sum(pre, sp);
    Rational body = block_sum(period, sc);
    Rational ratio = Rational(Int(1), two_pow(sc));
    if (period.size() % 2) ratio = -ratio;
    Rational scale = Rational(Int(1), two_pow(sp));
    if (pre.size() % 2) scale = -scale;
    return head + scale * body / (Rational(1) - ratio);
}

Qumterval qumterval_of(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("qumterval_of: degenerate word");
    Qumterval J;
    J.word = w;
    J.S = runlength(w.word);
    J.alpha_plus = surd_from_periodic_cf({}, J.S);
    J.alpha_minus = surd_from_periodic_cf(right_conjugate(J.S), cf_transpose(J.S));
    J.pseudocenter = cf_value(J.S);
    J.m0 = w.m0();
    J.m1 = w.m1();
    return J;
}

Located locate_qumterval(const Rational& alpha) {
    if (alpha.sign() <= 0 || alpha >= Rational(1))
        throw std::invalid_argument("locate_qumterval: alpha must lie in (0,1); 0 and 1 belong to E_KU");
    QuadSurd a(alpha);
    FareyWord lo(BinaryWord("0"), Rational(0)), hi(BinaryWord("1"), Rational(1));
    for (std::size_t depth = 1;; ++depth) {
        FareyWord mid(lo.word + hi.word, Rational(lo.rho.num() + hi.rho.num(), lo.rho.den() + hi.rho.den()));
        Qumterval J = qumterval_of(mid);
        if (J.contains(a)) return {J, Location::Interior, depth};
        if (a == J.alpha_minus || a == J.alpha_plus)
            throw std::logic_error("locate_qumterval: rational parameter on a quadratic endpoint");
        if (a < J.alpha_minus)
            hi = mid;
        else
            lo = mid;
    }
}

Rational simplest_between(const QuadSurd& lo, const std::optional<QuadSurd>& hi) {
    if (lo.sign() < 0) throw std::invalid_argument("simplest_between: lower end must be >= 0");
    if (hi && !(lo < *hi)) throw std::invalid_argument("simplest_between: empty interval");
    Int n = floor_exact(lo) + 1;
    if (!hi || QuadSurd(n) < *hi) return Rational(n);
    Int f = n - 1;
    QuadSurd nlo = QuadSurd(1) / (*hi - QuadSurd(f));
    std::optional<QuadSurd> nhi;
    if (!(lo == QuadSurd(f))) nhi = QuadSurd(1) / (lo - QuadSurd(f));
    return Rational(f) + Rational(1) / simplest_between(nlo, nhi);
}

CardioidAngles cardioid_angles(const Rational& r) {
    if (r.sign() <= 0 || r >= Rational(1)) throw std::invalid_argument("cardioid_angles: need 0 < r < 1");
    FareyWord w = word_from_rational(r);
    Int den = two_pow(w.size()) - 1;
    return {Rational(w.word.transpose().rotate(1).as_integer(), den), Rational(w.word.rotate(1).as_integer(), den)};
}

std::vector<FareyWord> farey_words_up_to_length(int n) {
    std::vector<Rational> rs;
    for (long q = 2; q <= n; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) rs.emplace_back(Int(p), Int(q));
    std::sort(rs.begin(), rs.end());
    std::vector<FareyWord> out;
    out.reserve(rs.size());
    for (const auto& r : rs) out.push_back(word_from_rational(r));
    return out;
}

namespace {

double upper_double(const QuadSurd& x) {
    Ball b = Ball::from_surd(x, 96);
    mpfr_t up;
    mpfr_init2(up, 64);
    mpfr_add(up, b.mid(), b.rad(), MPFR_RNDU);
    double v = mpfr_get_d(up, MPFR_RNDU);
    mpfr_clear(up);
    return v;
}

}  // namespace

double zeta_partial(double s, int depth, const ZetaOptions& opt) {
    if (!(s > 0)) throw std::invalid_argument("zeta_partial: s must be > 0");
    if (depth > 20) throw std::invalid_argument("zeta_partial: depth must be <= 20");
    double total = 0;
    for (const auto& w : farey_words_up_to_length(depth)) {
        double len;
        if (opt.binary_intervals) {
            BinInterval I = bin_interval(w);
            if (opt.window && (I.a_plus <= opt.window->first || I.a_minus >= opt.window->second)) continue;
            len = upper_double(QuadSurd(I.length()));
        } else {
            Qumterval J = qumterval_of(w);
            if (opt.window && (J.alpha_plus <= QuadSurd(opt.window->first) || J.alpha_minus >= QuadSurd(opt.window->second)))
                continue;
            len = upper_double(J.alpha_plus - J.alpha_minus);
        }
        total += std::nextafter(std::pow(len, s), INFINITY);
    }
    return total;
}

std::string atlas_json(int max_length) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& w : farey_words_up_to_length(max_length)) {
        Qumterval J = qumterval_of(w);
        nlohmann::ordered_json row;
        row["word"] = w.str();
        row["S"] = cf_str(J.S);
        row["alpha_minus"] = J.alpha_minus.str();
        row["alpha_plus"] = J.alpha_plus.str();
        row["pseudocenter"] = J.pseudocenter.str();
        row["m0"] = J.m0;
        row["m1"] = J.m1;
        arr.push_back(row);
    }
    return arr.dump(2);
}

std::string atlas_csv(int max_length) {
    std::ostringstream os;
    os << "word,S,alpha_minus,alpha_plus,pseudocenter,m0,m1,alpha_minus_dec,alpha_plus_dec\n";
    for (const auto& w : farey_words_up_to_length(max_length)) {
        Qumterval J = qumterval_of(w);
        os << w.str() << ",\"" << cf_str(J.S) << "\"," << J.alpha_minus.str() << "," << J.alpha_plus.str() << ","
           << J.pseudocenter.str() << "," << J.m0 << "," << J.m1 << "," << to_decimal(J.alpha_minus, 50) << ","
           << to_decimal(J.alpha_plus, 50) << "\n";
    }
    return os.str();
}

}  // namespace kalpha
