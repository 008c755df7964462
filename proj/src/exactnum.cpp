#include "kalpha/exactnum.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

namespace kalpha {

namespace {

int sgn_int(const Int& x) { return sgn(x); }

// sign(A + B*sqrt(d)) for integers A, B and d >= 0.
int sign_lin(const Int& A, const Int& B, const Int& d) {
    int sa = sgn_int(A), sb = sgn_int(B);
    if (sb == 0 || d == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Int lhs = A * A, rhs = B * B * d;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

// sign(P + Q1*sqrt(d1) + Q2*sqrt(d2)).
int sign3(const Int& P, const Int& Q1, const Int& d1, const Int& Q2, const Int& d2) {
    if (Q1 == 0) return sign_lin(P, Q2, d2);
    if (Q2 == 0) return sign_lin(P, Q1, d1);
    int s;
    if (sgn_int(Q1) == sgn_int(Q2)) {
        s = sgn_int(Q1);
    } else {
        int c = cmp(Int(Q1 * Q1 * d1), Int(Q2 * Q2 * d2));
        s = c == 0 ? 0 : (c > 0 ? sgn_int(Q1) : sgn_int(Q2));
    }
    int sp = sgn_int(P);
    if (sp == 0) return s;
    if (s == 0 || s == sp) return s == 0 ? sp : s;
    Int A = P * P - Q1 * Q1 * d1 - Q2 * Q2 * d2;
    Int B = -2 * Q1 * Q2;
    int t = sign_lin(A, B, Int(d1 * d2));
    if (t == 0) return 0;
    return t > 0 ? sp : s;
}

// Brings b onto the radicand of a (or vice versa) when both are irrational
// with different stored radicands whose product is a square.
bool same_field(const QuadSurd& a, const QuadSurd& b) {
    return a.is_rational() || b.is_rational() || a.d() == b.d();
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> out;
        const unsigned long limit = 2000;
        std::vector<bool> sieve(limit + 1, true);
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

namespace {

// mpz_class(std::string) guesses the base from a leading 0, which would read
// "045" as octal.
Int dec_int(const std::string& s) {
    if (!s.empty() && s[0] == '+') return Int(s.substr(1), 10);
    return Int(s, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    static const std::regex frac(R"(^([+-]?\d+)(?:/(\d+))?$)");
    static const std::regex dec(R"(^([+-]?)(\d*)\.(\d+)$)");
    std::smatch m;
    if (std::regex_match(s, m, frac)) {
        Int n = dec_int(m[1].str());
        Int d = m[2].matched ? dec_int(m[2].str()) : Int(1);
        return Rational(n, d);
    }
    if (std::regex_match(s, m, dec)) {
        std::string whole = m[2].str().empty() ? "0" : m[2].str();
        std::string frac_part = m[3].str();
        Int n = dec_int(whole + frac_part);
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_part.size());
        if (m[1].str() == "-") n = -n;
        return Rational(n, d);
    }
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
}

Int floor_exact(const Rational& x) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return out;
}

// ---------------------------------------------------------------- QuadSurd

QuadSurd::QuadSurd(Int p, Int q, Int r, Int d, bool)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    reduce();
}

void QuadSurd::reduce() {
    if (r_ == 0) throw std::domain_error("surd with zero denominator");
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 1;
    }
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
    }
}

QuadSurd QuadSurd::make(const Int& p, const Int& q, const Int& d, const Int& r) {
    if (d < 0) throw std::domain_error("negative radicand");
    Int dd = d, qq = q, pp = p;
    if (dd == 0 || qq == 0) return QuadSurd(pp, Int(0), r, Int(1), true);
    if (mpz_perfect_square_p(dd.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), dd.get_mpz_t());
        return QuadSurd(pp + qq * s, Int(0), r, Int(1), true);
    }
    for (unsigned long pr : small_primes()) {
        Int sq = Int(pr) * pr;
        if (sq > dd) break;
        while (mpz_divisible_ui_p(dd.get_mpz_t(), pr * pr)) {
            mpz_divexact_ui(dd.get_mpz_t(), dd.get_mpz_t(), pr * pr);
            qq *= pr;
        }
    }
    if (mpz_perfect_square_p(dd.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), dd.get_mpz_t());
        return QuadSurd(pp + qq * s, Int(0), r, Int(1), true);
    }
    return QuadSurd(pp, qq, r, dd, true);
}

Rational QuadSurd::rational_value() const {
    if (!is_rational()) throw std::domain_error("surd is irrational");
    return Rational(p_, r_);
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(p_, Int(-q_), r_, d_, true); }

int QuadSurd::sign() const { return sign_lin(p_, q_, d_); }

QuadSurd QuadSurd::operator-() const { return QuadSurd(Int(-p_), Int(-q_), r_, d_, true); }

namespace {

// Rewrites b over a's radicand; throws when the fields differ.
QuadSurd align_to(const QuadSurd& a, const QuadSurd& b) {
    if (same_field(a, b)) return b;
    Int prod = a.d() * b.d();
    if (!mpz_perfect_square_p(prod.get_mpz_t()))
        throw std::domain_error("surds from different quadratic fields: d=" + a.d().get_str() +
                                " and d=" + b.d().get_str());
    // sqrt(db) = s / da * sqrt(da) with s = sqrt(da*db).
    Int s;
    mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
    return QuadSurd::make(b.p() * a.d(), b.q() * s, a.d(), b.r() * a.d());
}

}  // namespace

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b0) {
    const QuadSurd b = align_to(a, b0);
    Int d = a.is_rational() ? b.d_ : a.d_;
    return QuadSurd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_, d, true);
}

QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) { return a + (-b); }

QuadSurd operator*(const QuadSurd& a, const QuadSurd& b0) {
    const QuadSurd b = align_to(a, b0);
    Int d = a.is_rational() ? b.d_ : a.d_;
    return QuadSurd(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, a.r_ * b.r_, d, true);
}

QuadSurd operator/(const QuadSurd& a, const QuadSurd& b0) {
    const QuadSurd b = align_to(a, b0);
    if (b.sign() == 0) throw std::domain_error("division by zero surd");
    // 1/b = r_b (p_b - q_b sqrt d) / (p_b^2 - q_b^2 d)
    Int norm = b.p_ * b.p_ - b.q_ * b.q_ * b.d_;
    QuadSurd num = a * QuadSurd(b.p_, Int(-b.q_), Int(1), b.d_, true);
    return QuadSurd(num.p_ * b.r_, num.q_ * b.r_, num.r_ * norm, num.is_rational() ? b.d_ : num.d_, true);
}

int compare(const QuadSurd& a, const QuadSurd& b) {
    if (a.is_rational() && b.is_rational()) return cmp(Int(a.p_ * b.r_), Int(b.p_ * a.r_));
    // (pa + qa sqrt(da)) rb - (pb + qb sqrt(db)) ra
    Int P = a.p_ * b.r_ - b.p_ * a.r_;
    Int Q1 = a.q_ * b.r_;
    Int Q2 = -b.q_ * a.r_;
    if (a.d_ == b.d_) return sign_lin(P, Int(Q1 + Q2), a.d_);
    return sign3(P, Q1, a.d_, Q2, b.d_);
}

std::string QuadSurd::str() const {
    if (is_rational()) return Rational(p_, r_).str();
    std::string out = "(" + p_.get_str();
    if (q_ > 0)
        out += "+" + q_.get_str();
    else
        out += "-" + Int(-q_).get_str();
    out += "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
    return out;
}

QuadSurd QuadSurd::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    static const std::regex surd(R"(^\(([+-]?\d+)([+-])(\d+)\*sqrt\((\d+)\)\)(?:/(\d+))?$)");
    static const std::regex plain(R"(^([+-]?\d+)([+-])(\d+)\*sqrt\((\d+)\)$)");
    static const std::regex bare(R"(^([+-]?)(\d+)?\*?sqrt\((\d+)\)$)");
    std::smatch m;
    if (std::regex_match(s, m, surd)) {
        Int q = dec_int(m[3].str());
        if (m[2].str() == "-") q = -q;
        Int r = m[5].matched ? dec_int(m[5].str()) : Int(1);
        if (r == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return make(dec_int(m[1].str()), q, dec_int(m[4].str()), r);
    }
    if (std::regex_match(s, m, plain)) {
        Int q = dec_int(m[3].str());
        if (m[2].str() == "-") q = -q;
        return make(dec_int(m[1].str()), q, dec_int(m[4].str()), Int(1));
    }
    if (std::regex_match(s, m, bare)) {
        Int q = m[2].matched ? dec_int(m[2].str()) : Int(1);
        if (m[1].str() == "-") q = -q;
        return make(Int(0), q, dec_int(m[3].str()), Int(1));
    }
    return QuadSurd(Rational::parse(s));
}

double QuadSurd::to_double() const { return std::stod(to_decimal(*this, 20)); }

Int floor_exact(const QuadSurd& x) {
    if (x.is_rational()) return floor_exact(x.rational_value());
    // q*sqrt(d) lies strictly between consecutive integers around +-isqrt(q^2 d).
    Int t;
    Int qq = x.q() * x.q() * x.d();
    mpz_sqrt(t.get_mpz_t(), qq.get_mpz_t());
    Int lower = x.q() > 0 ? Int(x.p() + t) : Int(x.p() - t - 1);
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), lower.get_mpz_t(), x.r().get_mpz_t());
    return out;
}

// ---------------------------------------------------------------- decimals

namespace {

std::string mpfr_fixed(mpfr_t v, int digits) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, v);
    std::string out(buf);
    mpfr_free_str(buf);
    if (out.size() > 1 && out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos)
        out.erase(0, 1);
    return out;
}

}  // namespace

std::string to_decimal(const Rational& x, int digits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64 + mpz_sizeinbase(x.raw().get_num_mpz_t(), 2));
    mpfr_t v;
    mpfr_init2(v, prec);
    mpfr_set_q(v, x.raw().get_mpq_t(), MPFR_RNDN);
    std::string out = mpfr_fixed(v, digits);
    mpfr_clear(v);
    return out;
}

std::string to_decimal(const QuadSurd& x, int digits) {
    if (x.is_rational()) return to_decimal(x.rational_value(), digits);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64 + mpz_sizeinbase(x.p().get_mpz_t(), 2) +
                                                 mpz_sizeinbase(x.q().get_mpz_t(), 2) +
                                                 mpz_sizeinbase(x.d().get_mpz_t(), 2));
    mpfr_t s, t;
    mpfr_init2(s, prec);
    mpfr_init2(t, prec);
    mpfr_set_z(s, x.d().get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(s, s, MPFR_RNDN);
    mpfr_mul_z(s, s, x.q().get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(t, x.p().get_mpz_t(), MPFR_RNDN);
    mpfr_add(s, s, t, MPFR_RNDN);
    mpfr_div_z(s, s, x.r().get_mpz_t(), MPFR_RNDN);
    std::string out = mpfr_fixed(s, digits);
    mpfr_clear(s);
    mpfr_clear(t);
    return out;
}

// ---------------------------------------------------------------- Mobius

Mobius operator*(const Mobius& x, const Mobius& y) {
    return Mobius(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                  x.c_ * y.b_ + x.d_ * y.d_);
}

Mobius Mobius::inverse() const {
    Int dt = det();
    if (dt != 1 && dt != -1) throw std::domain_error("matrix not invertible over Z");
    // Projectively the adjugate is enough; keep the exact inverse when det = 1.
    if (dt == 1) return Mobius(d_, -b_, -c_, a_);
    return Mobius(-d_, b_, c_, -a_);
}

Mobius Mobius::normalized() const {
    int s = 0;
    for (const Int* e : {&a_, &b_, &c_, &d_}) {
        if (*e != 0) {
            s = sgn(*e);
            break;
        }
    }
    if (s < 0) return Mobius(-a_, -b_, -c_, -d_);
    return *this;
}

bool Mobius::projectively_equal(const Mobius& o) const { return normalized() == o.normalized(); }

std::string Mobius::str() const {
    return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() + "]]";
}

Mobius pow(const Mobius& m, long long e) {
    Mobius base = e < 0 ? m.inverse() : m;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Mobius acc;
    while (n) {
        if (n & 1ULL) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------- continued fractions

namespace {

void check_digits(const CFString& s, const char* what) {
    for (long long a : s)
        if (a < 1) throw std::invalid_argument(std::string(what) + ": continued fraction digits must be >= 1");
}

Mobius string_matrix(const CFString& s) {
    Mobius m;
    for (long long a : s) m = m * Mobius::digit(a);
    return m;
}

}  // namespace

QuadSurd surd_from_periodic_cf(const CFString& pre, const CFString& period) {
    if (period.empty()) throw std::invalid_argument("surd_from_periodic_cf: empty period");
    check_digits(pre, "surd_from_periodic_cf");
    check_digits(period, "surd_from_periodic_cf");
    Mobius m = string_matrix(period);
    // y = (A y + B)/(C y + D)  <=>  C y^2 + (D - A) y - B = 0, take the root in (0,1).
    Int disc = (m.d() - m.a()) * (m.d() - m.a()) + 4 * m.b() * m.c();
    QuadSurd y = QuadSurd::make(m.a() - m.d(), Int(1), disc, Int(2 * m.c()));
    if (pre.empty()) return y;
    return mobius_apply(string_matrix(pre), y).value;
}

Rational cf_value(const CFString& s) {
    check_digits(s, "cf_value");
    Rational x(0);
    for (auto it = s.rbegin(); it != s.rend(); ++it) x = Rational(1) / (Rational(Int(std::to_string(*it))) + x);
    return x;
}

CFString cf_digits(const Rational& x0) {
    if (x0.sign() < 0 || x0 >= Rational(1)) throw std::invalid_argument("cf_digits: value must lie in [0,1)");
    CFString out;
    Int p = x0.num(), q = x0.den();
    while (p != 0) {
        // 1/x = q/p = a + rest
        Int a, rem;
        mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        out.push_back(a.get_si());
        q = p;
        p = rem;
    }
    return out;
}

CFString cf_digits(const QuadSurd& x0, std::size_t max_digits) {
    if (x0.is_rational()) {
        CFString all = cf_digits(x0.rational_value());
        if (all.size() > max_digits) all.resize(max_digits);
        return all;
    }
    if (x0.sign() < 0 || x0 >= QuadSurd(1)) throw std::invalid_argument("cf_digits: value must lie in [0,1)");
    CFString out;
    QuadSurd x = x0;
    while (out.size() < max_digits) {
        QuadSurd y = QuadSurd(1) / x;
        Int a = floor_exact(y);
        out.push_back(a.get_si());
        x = y - QuadSurd(a);
    }
    return out;
}

bool cf_periodic_split(const QuadSurd& x0, CFString& pre, CFString& period) {
    pre.clear();
    period.clear();
    if (x0.is_rational()) return false;
    if (x0.sign() < 0 || x0 >= QuadSurd(1)) throw std::invalid_argument("cf_periodic_split: value must lie in (0,1)");
    std::map<std::string, std::size_t> seen;
    CFString digits;
    QuadSurd x = x0;
    const std::size_t cap = 1000000;
    while (digits.size() < cap) {
        auto key = x.str();
        auto it = seen.find(key);
        if (it != seen.end()) {
            pre.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
            period.assign(digits.begin() + static_cast<long>(it->second), digits.end());
            return true;
        }
        seen.emplace(std::move(key), digits.size());
        QuadSurd y = QuadSurd(1) / x;
        Int a = floor_exact(y);
        digits.push_back(a.get_si());
        x = y - QuadSurd(a);
    }
    throw std::runtime_error("cf_periodic_split: no period found within digit cap");
}

}  // namespace kalpha
