#include "kalpha/kdynamics.hpp"

#include <stdexcept>

#include "kalpha/cfstrings.hpp"

namespace kalpha {

template <class T>
Int c_alpha(const T& alpha, const T& x) {
    if (x.sign() == 0) throw std::invalid_argument("c_alpha undefined at 0");
    return floor_exact(T(-1) / x + T(1) - alpha);
}

template <class T>
StepResult<T> k_step(const T& alpha, const T& x) {
    if (x < alpha - T(1) || x > alpha) throw std::invalid_argument("k_step: x outside [alpha-1, alpha]");
    if (x.sign() == 0) return {T(0), std::nullopt};
    Int c = c_alpha(alpha, x);
    return {T(-1) / x - T(c), c};
}

template <class T>
OrbitRecord<T> orbit(const T& alpha, const T& x, std::size_t steps) {
    OrbitRecord<T> rec;
    rec.start = x;
    rec.points.push_back(x);
    rec.matrices.emplace_back();
    T cur = x;
    for (std::size_t i = 0; i < steps; ++i) {
        if (cur.sign() == 0) {
            rec.hit_zero = true;
            break;
        }
        StepResult<T> st = k_step(alpha, cur);
        rec.digits.push_back(*st.digit);
        rec.matrices.push_back(rec.matrices.back() * Mobius(0, -1, 1, *st.digit));
        cur = st.value;
        rec.points.push_back(cur);
    }
    if (cur.sign() == 0) rec.hit_zero = true;
    return rec;
}

template Int c_alpha<Rational>(const Rational&, const Rational&);
template Int c_alpha<QuadSurd>(const QuadSurd&, const QuadSurd&);
template StepResult<Rational> k_step<Rational>(const Rational&, const Rational&);
template StepResult<QuadSurd> k_step<QuadSurd>(const QuadSurd&, const QuadSurd&);
template OrbitRecord<Rational> orbit<Rational>(const Rational&, const Rational&, std::size_t);
template OrbitRecord<QuadSurd> orbit<QuadSurd>(const QuadSurd&, const QuadSurd&, std::size_t);

namespace {

const Mobius kP(1, 0, 0, -1);

std::vector<long long> block_digits(const FareyWord& w) {
    CFString S = runlength(w.word);
    std::vector<long long> a;
    for (std::size_t i = 0; i < S.size(); i += 2) {
        if (S[i + 1] != 1) throw std::logic_error("runlength of an FW0 word must read (a1,1,...,an,1)");
        a.push_back(S[i]);
    }
    return a;
}

bool left_half(const FareyWord& w) { return w.in_fw0() || w.str() == "01"; }

}  // namespace

MatchingCertificate matching_matrices(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("matching_matrices: degenerate word");
    MatchingCertificate cert;
    cert.word = w;
    cert.m0 = w.m0();
    cert.m1 = w.m1();
    if (left_half(w)) {
        std::vector<long long> a = block_digits(w);
        const Mobius ST2 = Mobius::S() * Mobius::T(2);
        Mobius M, Mp;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (k) M = M * Mobius::T();
            M = M * pow(ST2, a[k]);
            long shift = static_cast<long>(-a[k] - (k == 0 ? 1 : 2));
            Mp = Mp * Mobius::S() * Mobius::T(shift);
        }
        cert.M = M;
        cert.M_prime = Mp;
    } else {
        MatchingCertificate m = matching_matrices(mirror(w));
        cert.M = kP * m.M_prime * kP;
        cert.M_prime = kP * m.M * kP;
    }
    Mobius lhs = Mobius::T() * cert.M;
    Mobius rhs = cert.M_prime * Mobius::S() * Mobius::T(-1) * Mobius::S();
    cert.identity_holds = lhs.projectively_equal(rhs);
    return cert;
}

MatchingReport verify_matching(const FareyWord& w, const std::vector<Rational>& alphas) {
    MatchingReport rep;
    rep.certificate = matching_matrices(w);
    Qumterval J = qumterval_of(w);
    rep.all_exact = rep.certificate.identity_holds;
    for (const auto& a : alphas) {
        AlphaCheck c;
        c.alpha = a;
        c.inside = J.contains(a);
        if (c.inside) {
            auto lo = orbit(a, a - Rational(1), J.m0 + 1);
            auto hi = orbit(a, a, J.m1 + 1);
            c.matrices_equal = lo.matrices.size() > J.m0 && hi.matrices.size() > J.m1 &&
                               lo.matrices[J.m0].projectively_equal(rep.certificate.M) &&
                               hi.matrices[J.m1].projectively_equal(rep.certificate.M_prime);
            // An orbit truncated at 0 stays there (K(0) = 0); this happens at
            // the pseudocenter, where both sides reach 0 at the matching time.
            if (lo.matrices.size() > J.m0 && hi.matrices.size() > J.m1) {
                c.lower_end = lo.points.back();
                c.upper_end = hi.points.back();
                c.orbits_match = c.lower_end == c.upper_end;
            }
        }
        rep.all_exact = rep.all_exact && c.inside && c.matrices_equal && c.orbits_match;
        rep.checks.push_back(c);
    }
    return rep;
}

std::vector<Rational> sample_alphas(const Qumterval& J, int per_side) {
    std::vector<Rational> out{J.pseudocenter};
    QuadSurd pc(J.pseudocenter);
    QuadSurd left = pc, right = pc;
    for (int i = 0; i < per_side; ++i) {
        Rational l = simplest_between(J.alpha_minus, left);
        Rational r = simplest_between(right, J.alpha_plus);
        out.push_back(l);
        out.push_back(r);
        left = QuadSurd(l);
        right = QuadSurd(r);
    }
    return out;
}

std::pair<std::size_t, std::size_t> orbit_order_extremes(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("orbit_order_extremes: degenerate word");
    if (!left_half(w)) {
        auto [j0, j1] = orbit_order_extremes(mirror(w));
        return {j1, j0};
    }
    auto [a, b] = standard_factorization(w);
    return {a.m0(), b.m1()};
}

std::pair<std::size_t, std::size_t> orbit_order_extremes_bruteforce(const FareyWord& w, const Rational& alpha) {
    auto lo = orbit(alpha, alpha - Rational(1), w.m0());
    auto hi = orbit(alpha, alpha, w.m1());
    if (lo.points.size() != w.m0() + 1 || hi.points.size() != w.m1() + 1)
        throw std::logic_error("orbit reached 0 before the matching time");
    std::size_t j0 = 1, j1 = 1;
    for (std::size_t j = 1; j <= w.m0(); ++j)
        if (lo.points[j] < lo.points[j0]) j0 = j;
    for (std::size_t j = 1; j <= w.m1(); ++j)
        if (hi.points[j] > hi.points[j1]) j1 = j;
    return {j0, j1};
}

SymmetryResult symmetry_conjugate(const Rational& alpha, const Rational& x) {
    SymmetryResult r{Rational(1) - alpha, -x, false};
    if (x.sign() != 0) r.exceptional = (Rational(1) / x + alpha).is_integer();
    return r;
}

SlowReturn slow_first_return(const Rational& alpha, const Rational& x, std::size_t max_steps) {
    const Rational lo = alpha - Rational(1);
    if (x < lo || x >= alpha) throw std::invalid_argument("slow_first_return: x outside [alpha-1, alpha)");
    if (x.sign() == 0) throw std::invalid_argument("slow_first_return: x = 0 never returns");
    SlowReturn out;
    Rational y = Rational(-1) / x;
    while (y < lo || y >= alpha) {
        if (out.translations >= max_steps) throw std::runtime_error("slow_first_return: step budget exceeded");
        y = y < lo ? y + Rational(1) : y - Rational(1);
        ++out.translations;
    }
    out.value = y;
    return out;
}

std::vector<Int> expected_lower_digits(const FareyWord& w) {
    if (!left_half(w)) throw std::invalid_argument("expected digit tables are stated for FW0 and 01");
    std::vector<long long> a = block_digits(w);
    std::vector<Int> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        bool last = k + 1 == a.size();
        for (long long i = 0; i < a[k] - 1; ++i) out.emplace_back(2);
        out.emplace_back(last ? 2 : 3);
    }
    return out;
}

std::vector<Int> expected_upper_digits(const FareyWord& w) {
    if (!left_half(w)) throw std::invalid_argument("expected digit tables are stated for FW0 and 01");
    std::vector<long long> a = block_digits(w);
    std::vector<Int> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.emplace_back(Int(std::to_string(-a[k] - (k == 0 ? 1 : 2))));
    return out;
}

}  // namespace kalpha
