#include "kalpha/natext.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace kalpha {

namespace {

bool left_half(const FareyWord& w) { return w.in_fw0() || w.str() == "01"; }

// xi -> -1/(xi - c), the first coordinate of Phi along a level with digit c.
QuadSurd phi_xi(const QuadSurd& xi, const Int& c) {
    QuadSurd den = xi - QuadSurd(c);
    if (den.sign() == 0) throw std::logic_error("Phi: pole on the attractor");
    return QuadSurd(-1) / den;
}

std::vector<Segment> push_family(const Rational& alpha, const Rational& start, std::size_t steps,
                                 QuadSurd left, QuadSurd right, std::vector<Rational>& levels) {
    OrbitRecord<Rational> orb = orbit(alpha, start, steps);
    if (orb.points.size() != steps + 1 || orb.digits.size() != steps)
        throw std::logic_error("build_attractor: orbit of " + start.str() + " reached 0 before the matching time");
    levels = orb.points;
    std::vector<Segment> out;
    out.push_back({start, left, right});
    for (std::size_t j = 0; j < steps; ++j) {
        left = phi_xi(left, orb.digits[j]);
        right = phi_xi(right, orb.digits[j]);
        out.push_back({orb.points[j + 1], left, right});
    }
    return out;
}

void check_chain(const std::vector<Segment>& fam, const QuadSurd& y, const QuadSurd& x, const char* name) {
    auto fail = [&](const std::string& why) {
        throw std::logic_error(std::string("build_attractor: ") + name + " family " + why);
    };
    for (std::size_t k = 0; k < fam.size(); ++k) {
        if (!(fam[k].left < fam[k].right)) fail("has an empty segment at level " + fam[k].level.str());
        if (k + 1 < fam.size()) {
            if (!(fam[k].level < fam[k + 1].level)) fail("repeats the level " + fam[k].level.str());
            if (!(fam[k].right == fam[k + 1].left))
                fail("breaks at the seam between levels " + fam[k].level.str() + " and " + fam[k + 1].level.str() + ": " +
                     fam[k].right.str() + " vs " + fam[k + 1].left.str());
        }
    }
    if (!(fam.front().left == y) || !(fam.back().right == x)) fail("does not span [y, x]");
}

}  // namespace

std::pair<QuadSurd, QuadSurd> attractor_corners(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("attractor_corners: degenerate word");
    if (!left_half(w)) {
        auto [x, y] = attractor_corners(mirror(w));
        return {-y, -x};
    }
    CFString S = runlength(w.word);
    return {surd_from_periodic_cf({}, cf_transpose(S)), -surd_from_periodic_cf({}, S)};
}

Attractor build_attractor(const Rational& alpha, const FareyWord& w) {
    Qumterval J = qumterval_of(w);
    if (!J.contains(alpha)) throw std::invalid_argument("build_attractor: " + alpha.str() + " is not inside J_" + w.str());
    Attractor a;
    a.word = w;
    a.alpha = alpha;
    std::tie(a.corner_x, a.corner_y) = attractor_corners(w);
    const QuadSurd& x = a.corner_x;
    const QuadSurd& y = a.corner_y;
    const QuadSurd one(1);

    a.lower = push_family(alpha, alpha - Rational(1), w.m0(), y, x / (x + one), a.h_levels_low);
    a.upper = push_family(alpha, alpha, w.m1(), y / (one - y), x, a.h_levels_high);
    auto by_level = [](const Segment& s, const Segment& t) { return s.level < t.level; };
    std::sort(a.lower.begin(), a.lower.end(), by_level);
    std::sort(a.upper.begin(), a.upper.end(), by_level);
    check_chain(a.lower, y, x, "lower");
    check_chain(a.upper, y, x, "upper");

    for (const auto* fam : {&a.lower, &a.upper})
        for (const auto& s : *fam) {
            a.v_levels.push_back(s.left);
            a.v_levels.push_back(s.right);
        }
    std::sort(a.v_levels.begin(), a.v_levels.end());
    a.v_levels.erase(std::unique(a.v_levels.begin(), a.v_levels.end()), a.v_levels.end());

    std::vector<Rational> t = a.h_levels_low;
    t.insert(t.end(), a.h_levels_high.begin(), a.h_levels_high.end());
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.front() != alpha - Rational(1) || t.back() != alpha)
        throw std::logic_error("build_attractor: levels leave [alpha-1, alpha]");

    // Between two consecutive levels the slice is [L, R]: R from the highest
    // lower segment not above the strip, L from the lowest upper segment not
    // below it (both boundaries are non-decreasing step functions).
    std::size_t il = 0, iu = 0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        while (il + 1 < a.lower.size() && a.lower[il + 1].level <= t[k]) ++il;
        while (iu < a.upper.size() && a.upper[iu].level < t[k + 1]) ++iu;
        if (iu == a.upper.size()) throw std::logic_error("build_attractor: no upper boundary above " + t[k].str());
        Rect r{a.upper[iu].left, a.lower[il].right, t[k], t[k + 1]};
        if (!(r.x_lo < r.x_hi))
            throw std::logic_error("build_attractor: empty slice between levels " + t[k].str() + " and " + t[k + 1].str());
        a.rects.push_back(r);
    }

    const bool reflected = alpha > Rational(1, 2);
    const QuadSurd in_lo = reflected ? QuadSurd(Rational(-1, 3)) : QuadSurd(0);
    const QuadSurd in_hi = reflected ? QuadSurd(0) : QuadSurd(Rational(1, 3));
    for (const auto& r : a.rects)
        if (r.x_lo > in_lo || r.x_hi < in_hi)
            throw std::logic_error("build_attractor: the fixed rectangle is not contained in the strip at " + r.y_lo.str());
    return a;
}

QSystemCheck check_qsystem(const FareyWord& w, const Rational& alpha) {
    QSystemCheck out;
    auto [x, y] = attractor_corners(w);
    std::tie(out.j0, out.j1) = orbit_order_extremes(w);
    auto push = [&](QuadSurd xi, const Rational& t0, std::size_t n) {
        OrbitRecord<Rational> orb = orbit(alpha, t0, n);
        if (orb.digits.size() != n) throw std::logic_error("check_qsystem: orbit reached 0");
        for (const auto& c : orb.digits) xi = phi_xi(xi, c);
        return xi;
    };
    out.upper_ok = push(x, alpha, out.j1) == mobius_apply(Mobius::S() * Mobius::T() * Mobius::S(), y).value;
    out.lower_ok = push(y, alpha - Rational(1), out.j0) == mobius_apply(Mobius::S() * Mobius::T(-1) * Mobius::S(), x).value;
    return out;
}

QuadSurd rect_mass_ratio(const Rect& r) {
    if (!(r.x_lo < r.x_hi) || !(r.y_lo <= r.y_hi)) throw std::invalid_argument("rect_mass: malformed rectangle");
    const QuadSurd one(1);
    QuadSurd f[4] = {one + r.x_hi * QuadSurd(r.y_hi), one + r.x_lo * QuadSurd(r.y_lo), one + r.x_hi * QuadSurd(r.y_lo),
                     one + r.x_lo * QuadSurd(r.y_hi)};
    for (const auto& v : f)
        if (v.sign() <= 0) throw std::domain_error("rect_mass: 1 + xy vanishes on the rectangle");
    return f[0] * f[1] / (f[2] * f[3]);
}

Ball rect_mass(const Rect& r, mpfr_prec_t prec) { return Ball::from_surd(rect_mass_ratio(r), prec).log(); }

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("KALPHA_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 64) return static_cast<mpfr_prec_t>(v);
    }
    return 128;
}

Ball attractor_area(const Attractor& a, mpfr_prec_t prec) {
    Ball A = Ball::from_int(0, prec);
    for (const auto& r : a.rects) A += rect_mass(r, prec);
    return A;
}

EntropySample entropy_in(const Rational& alpha, const FareyWord& w, const EntropyOptions& opt) {
    const mpfr_prec_t prec = opt.precision ? opt.precision : default_precision();
    if (prec < 64) throw std::invalid_argument("entropy: precision must be at least 64 bits");
    EntropySample s;
    s.alpha = alpha;
    s.word = w;
    s.m0 = w.m0();
    s.m1 = w.m1();
    Attractor att = (opt.reduce_symmetric && !left_half(w)) ? build_attractor(Rational(1) - alpha, mirror(w))
                                                            : build_attractor(alpha, w);
    s.A = attractor_area(att, prec);
    Ball pi = Ball::pi(prec);
    s.h = pi * pi / (s.A * Ball::from_int(3, prec));
    s.err_bound = s.h.rad_double();
    return s;
}

EntropySample entropy_at(const Rational& alpha, const EntropyOptions& opt) {
    Located loc = locate_qumterval(alpha);
    return entropy_in(alpha, loc.J.word, opt);
}

namespace {

std::size_t strip_index(const Attractor& a, const Rational& t) {
    if (t < a.alpha - Rational(1) || t > a.alpha) throw std::invalid_argument("density: t outside [alpha-1, alpha]");
    auto it = std::upper_bound(a.rects.begin(), a.rects.end(), t,
                               [](const Rational& v, const Rect& r) { return v < r.y_hi; });
    if (it == a.rects.end()) return a.rects.size() - 1;
    return static_cast<std::size_t>(it - a.rects.begin());
}

}  // namespace

Ball density_slice(const Attractor& a, const Rational& t, mpfr_prec_t prec) {
    const Rect& r = a.rects[strip_index(a, t)];
    QuadSurd mass;
    if (t.sign() == 0) {
        mass = r.x_hi - r.x_lo;
    } else {
        const QuadSurd tt(t), one(1);
        mass = r.x_hi / (one + r.x_hi * tt) - r.x_lo / (one + r.x_lo * tt);
    }
    return Ball::from_surd(mass, prec) / attractor_area(a, prec);
}

Ball measure_interval(const Attractor& a, const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (lo > hi || lo < a.alpha - Rational(1) || hi > a.alpha)
        throw std::invalid_argument("measure_interval: need alpha-1 <= lo <= hi <= alpha");
    Ball m = Ball::from_int(0, prec);
    for (const auto& r : a.rects) {
        Rational y0 = std::max(r.y_lo, lo), y1 = std::min(r.y_hi, hi);
        if (y0 >= y1) continue;
        m += rect_mass({r.x_lo, r.x_hi, y0, y1}, prec);
    }
    return m / attractor_area(a, prec);
}

std::vector<Rational> dyadic_grid(const Rational& from, const Rational& to, int samples) {
    if (samples < 2) throw std::invalid_argument("entropy_curve: need at least 2 samples");
    if (!(from < to)) throw std::invalid_argument("entropy_curve: empty range");
    const Int D = Int(1) << 19;
    std::vector<Rational> out;
    for (int i = 0; i < samples; ++i) {
        Rational v = from + (to - from) * Rational(Int(2 * i + 1), Int(2 * samples));
        Int n = floor_exact(v * Rational(D) + Rational(1, 2));
        Rational g(n, D);
        while (g <= from) g += Rational(Int(1), D);
        while (g >= to) g -= Rational(Int(1), D);
        if (g <= from) continue;
        if (out.empty() || out.back() != g) out.push_back(g);
    }
    return out;
}

std::vector<EntropySample> entropy_many(const std::vector<Rational>& alphas, int workers, const EntropyOptions& opt) {
    std::vector<EntropySample> out(alphas.size());
    std::vector<std::exception_ptr> errors(alphas.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < alphas.size();) {
            try {
                out[i] = entropy_at(alphas[i], opt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = workers > 0 ? static_cast<unsigned>(workers) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, alphas.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<EntropySample> entropy_curve(const Rational& from, const Rational& to, int samples, int workers,
                                         const EntropyOptions& opt) {
    return entropy_many(dyadic_grid(from, to, samples), workers, opt);
}

std::string entropy_csv(const std::vector<EntropySample>& rows) {
    std::ostringstream os;
    os << "alpha,word,m0,m1,A,h,err_bound\n";
    for (const auto& s : rows)
        os << s.alpha.str() << "," << s.word.str() << "," << s.m0 << "," << s.m1 << "," << s.A.mid_str(30) << ","
           << s.h.mid_str(30) << "," << s.h.rad_str() << "\n";
    return os.str();
}

std::string entropy_json(const std::vector<EntropySample>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : rows) {
        nlohmann::ordered_json r;
        r["alpha"] = s.alpha.str();
        r["word"] = s.word.str();
        r["m0"] = s.m0;
        r["m1"] = s.m1;
        r["A"] = s.A.mid_str(30);
        r["h"] = s.h.mid_str(30);
        r["err_bound"] = s.h.rad_str();
        arr.push_back(r);
    }
    return arr.dump(2);
}

std::string attractor_json(const Attractor& a) {
    using nlohmann::ordered_json;
    auto surd = [](const QuadSurd& v) {
        ordered_json j;
        j["exact"] = v.str();
        j["decimal"] = to_decimal(v, 50);
        return j;
    };
    auto segs = [&](const std::vector<Segment>& fam) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : fam) {
            ordered_json j;
            j["level"] = s.level.str();
            j["left"] = surd(s.left);
            j["right"] = surd(s.right);
            arr.push_back(j);
        }
        return arr;
    };
    ordered_json j;
    j["word"] = a.word.str();
    j["alpha"] = a.alpha.str();
    j["m0"] = a.word.m0();
    j["m1"] = a.word.m1();
    j["corner_x"] = surd(a.corner_x);
    j["corner_y"] = surd(a.corner_y);
    for (auto [key, lv] : {std::pair{"h_levels_low", &a.h_levels_low}, std::pair{"h_levels_high", &a.h_levels_high}}) {
        ordered_json arr = ordered_json::array();
        for (const auto& v : *lv) arr.push_back(v.str());
        j[key] = arr;
    }
    j["lower"] = segs(a.lower);
    j["upper"] = segs(a.upper);
    ordered_json rects = ordered_json::array();
    for (const auto& r : a.rects) {
        ordered_json o;
        o["x_lo"] = surd(r.x_lo);
        o["x_hi"] = surd(r.x_hi);
        o["y_lo"] = r.y_lo.str();
        o["y_hi"] = r.y_hi.str();
        rects.push_back(o);
    }
    j["rects"] = rects;
    return j.dump(2);
}

std::vector<AsymptoticRow> asymptotic_probe(const std::vector<long>& N_list) {
    std::vector<AsymptoticRow> out;
    for (long N : N_list) {
        if (N < 2) throw std::invalid_argument("asymptotic_probe: N must be >= 2");
        FareyWord w(BinaryWord(std::string(static_cast<std::size_t>(N), '0') + "1"), Rational(Int(1), Int(N + 1)));
        AsymptoticRow row;
        row.N = N;
        row.alpha = Rational(Int(1), Int(N + 1));
        EntropySample s = entropy_in(row.alpha, w);
        row.h = s.h.mid_double();
        row.A = s.A.mid_double();
        row.prediction = M_PI * M_PI / (3.0 * std::log(static_cast<double>(N + 1)));
        row.ratio = row.h / row.prediction;
        row.lower_bound = std::log(static_cast<double>(N)) - std::log(4.0);
        out.push_back(row);
    }
    return out;
}

std::vector<SlopeRow> slope_growth_probe(const QuadSurd& target, const SlopeOptions& opt) {
    if (opt.halvings < 0 || opt.delta0.sign() <= 0 || opt.kappa.sign() <= 0)
        throw std::invalid_argument("slope_growth_probe: bad options");
    std::map<std::string, double> slope_cache;
    auto slope_of = [&](const FareyWord& w, const Qumterval& J) {
        auto it = slope_cache.find(w.str());
        if (it != slope_cache.end()) return it->second;
        QuadSurd pc(J.pseudocenter);
        Rational a = simplest_between(J.alpha_minus, pc);
        Rational b = simplest_between(pc, J.alpha_plus);
        Ball dh = entropy_in(b, w).h - entropy_in(a, w).h;
        double v = std::fabs(dh.mid_double()) / (b - a).to_double();
        slope_cache.emplace(w.str(), v);
        return v;
    };

    std::vector<SlopeRow> rows;
    Rational delta = opt.delta0;
    for (int k = 0; k <= opt.halvings; ++k, delta = delta / Rational(2)) {
        const QuadSurd wlo = target - QuadSurd(delta), whi = target + QuadSurd(delta);
        const Rational min_len = opt.kappa * delta;
        SlopeRow row;
        row.delta = delta;
        // Farey-tree descent: the subtree below (lo, hi) lives in the gap
        // between J_lo and J_hi.
        std::function<void(const FareyWord&, const FareyWord&, const QuadSurd&, const QuadSurd&)> visit =
            [&](const FareyWord& lo, const FareyWord& hi, const QuadSurd& glo, const QuadSurd& ghi) {
                if (ghi <= wlo || glo >= whi) return;
                if (ghi < glo + QuadSurd(min_len)) return;
                FareyWord mid(lo.word + hi.word,
                              Rational(lo.rho.num() + hi.rho.num(), lo.rho.den() + hi.rho.den()));
                Qumterval J = qumterval_of(mid);
                bool inside = wlo <= J.alpha_minus && J.alpha_plus <= whi &&
                              J.alpha_plus - J.alpha_minus >= QuadSurd(min_len);
                if (opt.side < 0 && J.alpha_plus > target) inside = false;
                if (opt.side > 0 && J.alpha_minus < target) inside = false;
                if (inside) {
                    ++row.candidates;
                    double s = slope_of(mid, J);
                    if (s > row.max_slope) {
                        row.max_slope = s;
                        row.argmax_word = mid.str();
                    }
                }
                visit(lo, mid, glo, J.alpha_minus);
                visit(mid, hi, J.alpha_plus, ghi);
            };
        visit(FareyWord(BinaryWord("0"), Rational(0)), FareyWord(BinaryWord("1"), Rational(1)), QuadSurd(0), QuadSurd(1));
        rows.push_back(row);
    }
    return rows;
}

double lyapunov_estimate(double alpha, std::size_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> start(alpha - 1.0, alpha);
    double x = start(rng);
    auto step = [&](double t) {
        double v = -1.0 / t;
        return v - std::floor(v + 1.0 - alpha);
    };
    auto reseed = [&] {
        do x = start(rng);
        while (x == 0.0);
    };
    for (int i = 0; i < 1000; ++i) {
        if (std::fabs(x) < 1e-300) reseed();
        x = step(x);
    }
    double sum = 0;
    for (std::size_t i = 0; i < steps; ++i) {
        if (std::fabs(x) < 1e-300) reseed();
        sum += -2.0 * std::log(std::fabs(x));
        x = step(x);
    }
    return sum / static_cast<double>(steps);
}

}  // namespace kalpha
