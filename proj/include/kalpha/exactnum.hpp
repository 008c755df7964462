#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kalpha {

using Int = mpz_class;

// Digits of a (finite piece of a) regular continued fraction [0; a1, a2, ...].
using CFString = std::vector<long long>;

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& n, const Int& d);
    explicit Rational(const mpq_class& q);

    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const;
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

// Exact element (p + q*sqrt(d))/r of a real quadratic field.  A value with
// q == 0 is rational and carries d == 1.  d is cleared of square factors by
// trial division when a surd is created through make(); arithmetic keeps the
// radicand of its operands.
class QuadSurd {
public:
    QuadSurd() : p_(0), q_(0), r_(1), d_(1) {}
    QuadSurd(long n) : p_(n), q_(0), r_(1), d_(1) {}
    QuadSurd(const Int& n) : p_(n), q_(0), r_(1), d_(1) {}
    QuadSurd(const Rational& x) : p_(x.num()), q_(0), r_(x.den()), d_(1) {}

    static QuadSurd make(const Int& p, const Int& q, const Int& d, const Int& r);
    static QuadSurd parse(std::string_view text);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rational rational_value() const;
    QuadSurd conjugate() const;
    int sign() const;

    QuadSurd operator-() const;
    friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
    friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
    friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
    friend QuadSurd operator/(const QuadSurd& a, const QuadSurd& b);
    QuadSurd& operator+=(const QuadSurd& o) { return *this = *this + o; }
    QuadSurd& operator-=(const QuadSurd& o) { return *this = *this - o; }
    QuadSurd& operator*=(const QuadSurd& o) { return *this = *this * o; }
    QuadSurd& operator/=(const QuadSurd& o) { return *this = *this / o; }

    // Works across different fields (sign of a + b*sqrt(d1) + c*sqrt(d2)).
    friend int compare(const QuadSurd& a, const QuadSurd& b);
    friend bool operator==(const QuadSurd& a, const QuadSurd& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const;
    double to_double() const;

private:
    QuadSurd(Int p, Int q, Int r, Int d, bool);
    void reduce();

    Int p_, q_, r_, d_;
};

Int floor_exact(const Rational& x);
Int floor_exact(const QuadSurd& x);

// Decimal expansion with `digits` digits after the point (MPFR, round to nearest).
std::string to_decimal(const Rational& x, int digits);
std::string to_decimal(const QuadSurd& x, int digits);

class Mobius {
public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Mobius S() { return Mobius(0, -1, 1, 0); }
    static Mobius T(long k = 1) { return Mobius(1, k, 0, 1); }
    // (0 -1; 1 c) = S T^c, the inverse of the K_alpha branch with digit c.
    static Mobius branch(long long c) { return Mobius(0, -1, 1, Int(std::to_string(c))); }
    static Mobius digit(long long a) { return Mobius(0, 1, 1, Int(std::to_string(a))); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }
    Mobius inverse() const;
    Mobius normalized() const;
    bool projectively_equal(const Mobius& o) const;

    friend Mobius operator*(const Mobius& x, const Mobius& y);
    friend bool operator==(const Mobius& x, const Mobius& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    std::string str() const;

private:
    Int a_, b_, c_, d_;
};

Mobius pow(const Mobius& m, long long e);

// A point of the projective line over T: either a finite value or infinity.
template <class T>
struct Proj {
    bool inf = false;
    T value{};

    Proj() = default;
    Proj(const T& v) : inf(false), value(v) {}
    static Proj infinity() {
        Proj p;
        p.inf = true;
        return p;
    }
    friend bool operator==(const Proj& x, const Proj& y) {
        if (x.inf || y.inf) return x.inf == y.inf;
        return x.value == y.value;
    }
};

template <class T>
Proj<T> mobius_apply(const Mobius& m, const Proj<T>& x) {
    if (x.inf) {
        if (m.c() == 0) return Proj<T>::infinity();
        return Proj<T>(T(Rational(m.a(), m.c())));
    }
    T den = T(m.c()) * x.value + T(m.d());
    T num = T(m.a()) * x.value + T(m.b());
    if (den.sign() == 0) return Proj<T>::infinity();
    return Proj<T>(num / den);
}

template <class T>
Proj<T> mobius_apply(const Mobius& m, const T& x) {
    return mobius_apply(m, Proj<T>(x));
}

// Value of pre * y where y in (0,1) is the attracting fixed point of the
// string map of `period`: the number [0; pre, period, period, ...].
QuadSurd surd_from_periodic_cf(const CFString& pre, const CFString& period);

// Value of the finite continued fraction [0; s1, ..., sn] (empty -> 0).
Rational cf_value(const CFString& s);

// Digits a1, a2, ... of x in (0,1) as [0; a1, a2, ...]; rational inputs
// terminate, surds are truncated after max_digits.
CFString cf_digits(const Rational& x);
CFString cf_digits(const QuadSurd& x, std::size_t max_digits);

// Detects the eventually periodic expansion of a quadratic irrational in
// (0,1) exactly (complete quotients repeat).  Returns false for rationals.
bool cf_periodic_split(const QuadSurd& x, CFString& pre, CFString& period);

}  // namespace kalpha
