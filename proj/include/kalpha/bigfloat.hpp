#pragma once

#include <mpfr.h>

#include <string>

#include "kalpha/exactnum.hpp"

namespace kalpha {

// Midpoint-radius interval over MPFR.  rad is an upper bound for the distance
// between mid and the exact quantity being tracked; it is always rounded up.
class Ball {
public:
    explicit Ball(mpfr_prec_t prec = 128);
    Ball(const Ball& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(const Ball& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    static Ball from_int(const Int& z, mpfr_prec_t prec);
    static Ball from_rational(const Rational& q, mpfr_prec_t prec);
    // The working precision is raised by the coefficient sizes so that the
    // cancellation in p + q*sqrt(d) does not eat the requested bits.
    static Ball from_surd(const QuadSurd& x, mpfr_prec_t prec);
    static Ball pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }

    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    Ball& operator+=(const Ball& o) { return *this = *this + o; }

    Ball sqrt() const;
    Ball log() const;
    Ball rounded(mpfr_prec_t prec) const;

    double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }
    std::string mid_str(int digits) const;   // fixed notation
    std::string rad_str() const;             // scientific, 3 significant digits
    bool positive() const;                   // mid - rad > 0

    const mpfr_t& mid() const { return mid_; }
    const mpfr_t& rad() const { return rad_; }

private:
    void add_rounding_error();
    mpfr_t mid_;
    mpfr_t rad_;
};

}  // namespace kalpha
