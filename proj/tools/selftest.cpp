#include "selftest.hpp"

#include <cmath>
#include <random>

#include "kalpha/natext.hpp"

namespace kalpha::selftest {

namespace {

struct Suite {
    std::ostream& os;
    bool ok = true;
    void check(bool cond, const std::string& what) {
        os << (cond ? "[ok]   " : "[FAIL] ") << what << "\n";
        ok = ok && cond;
    }
};

}  // namespace

bool exactnum(std::ostream& os) {
    Suite s{os};
    s.check(surd_from_periodic_cf({}, {2, 1}) == QuadSurd::parse("(-1+1*sqrt(3))/2"), "[0; (2,1)] = (sqrt3 - 1)/2");
    s.check(surd_from_periodic_cf({3}, {1, 2}) == QuadSurd::parse("(2-1*sqrt(3))"), "[0; 3, (1,2)] = 2 - sqrt3");
    QuadSurd g = surd_from_periodic_cf({}, {1, 1});
    s.check(floor_exact(-g) == -1 && floor_exact(Rational(5, 2)) == 2, "floor of -g and 5/2");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dig(-4, 4);
    bool comp = true;
    for (int i = 0; i < 200; ++i) {
        Mobius a(dig(rng), 1, 0, 1), b(1, 0, dig(rng), 1);
        Mobius m1 = a * b, m2 = b * a;
        Rational x(Int(dig(rng)), Int(7));
        auto lhs = mobius_apply(m1 * m2, x);
        auto rhs = mobius_apply(m1, mobius_apply(m2, Proj<Rational>(x)));
        comp = comp && lhs.inf == rhs.inf && (lhs.inf || lhs.value == rhs.value);
    }
    s.check(comp, "mobius_apply respects products (200 random cases)");
    return s.ok;
}

bool words(std::ostream& os) {
    Suite s{os};
    auto F3 = farey_list(3);
    std::string joined;
    for (const auto& w : F3) joined += w.str() + " ";
    s.check(joined == "0 0001 001 00101 01 01011 011 0111 1 ", "F_3 listing");
    bool incr = true;
    auto F8 = farey_list(8);
    for (std::size_t i = 0; i + 1 < F8.size(); ++i) incr = incr && word_order_lt(F8[i].word, F8[i + 1].word);
    s.check(incr && F8.size() == 257, "F_8 has 257 words, strictly increasing");
    bool rho = true;
    for (long q = 2; q <= 60; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) {
                Rational r{Int(p), Int(q)};
                rho = rho && rho_of(word_from_rational(r).word) == r && word_from_rational(r) == word_from_rational_tree(r);
            }
    s.check(rho, "rho(W_r) = r and tree/rotation paths agree, q <= 60");
    auto [a, b] = standard_factorization(farey_word(BinaryWord("00101")));
    s.check(a.str() == "001" && b.str() == "01", "standard factorization of 00101");
    return s.ok;
}

bool cfstrings(std::ostream& os) {
    Suite s{os};
    s.check(right_conjugate({3, 1, 3}) == CFString{3, 1, 2, 1}, "(3,1,3)' = (3,1,2,1)");
    s.check(left_conjugate({3, 1, 3}) == CFString{1, 2, 1, 3}, "'(3,1,3) = (1,2,1,3)");
    s.check(runlength(BinaryWord("0001001001")) == CFString{3, 1, 2, 1, 2, 1}, "RL(0001001001)");
    bool even = true, blocks = true;
    for (const auto& w : farey_list(6)) {
        if (w.degenerate()) continue;
        CFString S = runlength(w.word);
        even = even && S.size() % 2 == 0;
        blocks = blocks && farey_blocks(farey_structure(S)) == S;
    }
    s.check(even, "|RL(w)| even on F_6");
    s.check(blocks, "Farey structure reassembles on F_6");
    return s.ok;
}

bool bifurcation(std::ostream& os) {
    Suite s{os};
    BinInterval I = bin_interval(farey_word(BinaryWord("00101")));
    s.check(I.a_minus == Rational(9, 62) && I.a_plus == Rational(5, 31), "I_00101 = (9/62, 5/31)");
    CardioidAngles c = cardioid_angles(Rational(2, 5));
    s.check(c.theta_minus == Rational(9, 31) && c.theta_plus == Rational(10, 31), "cardioid angles of 2/5");
    std::mt19937_64 rng(11);
    bool mink = true;
    for (int i = 0; i < 100; ++i) {
        long q = std::uniform_int_distribution<long>(1, 300)(rng);
        long p = std::uniform_int_distribution<long>(0, q / 2)(rng);
        Rational x(Int(p), Int(2 * q));
        if (x > Rational(1, 2)) continue;
        mink = mink && minkowski_q(phi_map(x)) == Rational(2) * x;
    }
    s.check(mink, "Q(phi(x)) = 2x on 100 random rationals");
    Qumterval J = qumterval_of(farey_word(BinaryWord("001")));
    s.check(J.alpha_minus == QuadSurd::parse("(2-1*sqrt(3))") && J.pseudocenter == Rational(1, 3), "J_001");
    s.check(locate_qumterval(Rational(9, 20)).J.word.str() == "01", "0.45 lies in J_01");
    return s.ok;
}

bool kdynamics(std::ostream& os) {
    Suite s{os};
    bool id = true, match = true;
    for (const auto& w : farey_list(5)) {
        if (w.degenerate()) continue;
        id = id && matching_matrices(w).identity_holds;
        match = match && verify_matching(w, sample_alphas(qumterval_of(w), 2)).all_exact;
    }
    s.check(id, "TM = M'ST^-1S on F_5");
    s.check(match, "exact orbit matching on F_5, 5 alphas each");
    auto cert = matching_matrices(farey_word(BinaryWord("01")));
    s.check((Mobius::T() * cert.M).projectively_equal(Mobius(1, 1, 1, 2)), "TM = [[1,1],[1,2]] for w = 01");
    auto [j0, j1] = orbit_order_extremes(farey_word(BinaryWord("00101")));
    s.check(j0 == 2 && j1 == 1, "(j0, j1) = (2, 1) for 00101");
    s.check(slow_first_return(Rational(1, 3), Rational(1, 4), 100).value == k_step(Rational(1, 3), Rational(1, 4)).value,
            "slow first return equals K at (1/3, 1/4)");
    return s.ok;
}

bool natext(std::ostream& os) {
    Suite s{os};
    const double plateau = M_PI * M_PI / (6 * std::log(1 + (std::sqrt(5.0) - 1) / 2));
    EntropySample e = entropy_at(Rational(9, 20));
    s.check(std::fabs(e.h.mid_double() - plateau) < 1e-12, "h(0.45) = pi^2/(6 log(1+g))");
    EntropySample a = entropy_at(Rational(3, 10)), b = entropy_at(Rational(7, 10), {0, false});
    s.check(std::fabs(a.h.mid_double() - b.h.mid_double()) < 1e-12, "h(3/10) = h(7/10) through the direct FW1 attractor");
    bool qs = true;
    for (const auto& w : farey_list(4)) {
        if (w.degenerate()) continue;
        QSystemCheck q = check_qsystem(w, qumterval_of(w).pseudocenter);
        qs = qs && q.upper_ok && q.lower_ok;
    }
    s.check(qs, "corner system on F_4");
    Attractor att = build_attractor(Rational(4, 15), farey_word(BinaryWord("0001001")));
    Ball full = measure_interval(att, att.alpha - Rational(1), att.alpha, 128);
    s.check(std::fabs(full.mid_double() - 1) < 1e-30, "mu([alpha-1, alpha]) = 1 at 4/15");
    return s.ok;
}

bool for_command(const std::string& name, std::ostream& os) {
    if (name == "farey") return words(os) & cfstrings(os);
    if (name == "qumterval") return cfstrings(os) & bifurcation(os);
    if (name == "ebif" || name == "cardioid") return bifurcation(os);
    if (name == "orbit") return exactnum(os) & kdynamics(os);
    if (name == "match") return kdynamics(os);
    return natext(os);
}

}  // namespace kalpha::selftest
