#include "kalpha/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace kalpha {

namespace {
constexpr mpfr_prec_t kRadPrec = 64;
}

Ball::Ball(mpfr_prec_t prec) {
    mpfr_init2(mid_, prec);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : Ball(o) {}

Ball& Ball::operator=(const Ball& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

// rad += |mid| * 2^(1-prec): the error of one round-to-nearest operation.
void Ball::add_rounding_error() {
    if (mpfr_zero_p(mid_)) return;
    mpfr_t e;
    mpfr_init2(e, kRadPrec);
    mpfr_abs(e, mid_, MPFR_RNDU);
    mpfr_mul_2si(e, e, 1 - static_cast<long>(mpfr_get_prec(mid_)), MPFR_RNDU);
    mpfr_add(rad_, rad_, e, MPFR_RNDU);
    mpfr_clear(e);
}

Ball Ball::from_int(const Int& z, mpfr_prec_t prec) {
    Ball b(prec);
    if (mpfr_set_z(b.mid_, z.get_mpz_t(), MPFR_RNDN) != 0) b.add_rounding_error();
    return b;
}

Ball Ball::from_rational(const Rational& q, mpfr_prec_t prec) {
    Ball b(prec);
    if (mpfr_set_q(b.mid_, q.raw().get_mpq_t(), MPFR_RNDN) != 0) b.add_rounding_error();
    return b;
}

Ball Ball::from_surd(const QuadSurd& x, mpfr_prec_t prec) {
    if (x.is_rational()) return from_rational(x.rational_value(), prec);
    long extra = static_cast<long>(mpz_sizeinbase(x.p().get_mpz_t(), 2) + mpz_sizeinbase(x.q().get_mpz_t(), 2) +
                                   mpz_sizeinbase(x.d().get_mpz_t(), 2) / 2) -
                 static_cast<long>(mpz_sizeinbase(x.r().get_mpz_t(), 2));
    mpfr_prec_t wp = prec + std::max(0L, extra) + 32;
    Ball s = from_int(x.d(), wp).sqrt();
    Ball v = (from_int(x.p(), wp) + from_int(x.q(), wp) * s) / from_int(x.r(), wp);
    return v.rounded(prec);
}

Ball Ball::pi(mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_const_pi(b.mid_, MPFR_RNDN);
    b.add_rounding_error();
    return b;
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec(), b.prec()));
    int inexact = mpfr_add(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
    if (inexact) out.add_rounding_error();
    return out;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec(), b.prec()));
    int inexact = mpfr_sub(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
    if (inexact) out.add_rounding_error();
    return out;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec(), b.prec()));
    int inexact = mpfr_mul(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a| rb + |b| ra + ra rb
    mpfr_t t, u;
    mpfr_init2(t, kRadPrec);
    mpfr_init2(u, kRadPrec);
    mpfr_abs(t, a.mid_, MPFR_RNDU);
    mpfr_mul(t, t, b.rad_, MPFR_RNDU);
    mpfr_abs(u, b.mid_, MPFR_RNDU);
    mpfr_mul(u, u, a.rad_, MPFR_RNDU);
    mpfr_add(t, t, u, MPFR_RNDU);
    mpfr_mul(u, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(out.rad_, t, u, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(u);
    if (inexact) out.add_rounding_error();
    return out;
}

Ball operator/(const Ball& a, const Ball& b) {
    mpfr_t lo;
    mpfr_init2(lo, kRadPrec);
    mpfr_abs(lo, b.mid_, MPFR_RNDD);
    mpfr_sub(lo, lo, b.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) {
        mpfr_clear(lo);
        throw std::domain_error("ball division by an interval containing zero");
    }
    Ball out(std::max(a.prec(), b.prec()));
    int inexact = mpfr_div(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // (|a| rb + |b| ra) / (|b| (|b| - rb))
    mpfr_t t, u, v;
    mpfr_init2(t, kRadPrec);
    mpfr_init2(u, kRadPrec);
    mpfr_init2(v, kRadPrec);
    mpfr_abs(t, a.mid_, MPFR_RNDU);
    mpfr_mul(t, t, b.rad_, MPFR_RNDU);
    mpfr_abs(u, b.mid_, MPFR_RNDU);
    mpfr_mul(u, u, a.rad_, MPFR_RNDU);
    mpfr_add(t, t, u, MPFR_RNDU);
    mpfr_abs(v, b.mid_, MPFR_RNDD);
    mpfr_mul(v, v, lo, MPFR_RNDD);
    mpfr_div(out.rad_, t, v, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(u);
    mpfr_clear(v);
    mpfr_clear(lo);
    if (inexact) out.add_rounding_error();
    return out;
}

Ball Ball::sqrt() const {
    mpfr_t lo;
    mpfr_init2(lo, kRadPrec);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0 && !mpfr_zero_p(rad_)) {
        mpfr_clear(lo);
        throw std::domain_error("ball sqrt of an interval reaching zero");
    }
    Ball out(prec());
    int inexact = mpfr_sqrt(out.mid_, mid_, MPFR_RNDN);
    if (!mpfr_zero_p(rad_)) {
        // |sqrt(x +- r) - sqrt(x)| <= r / sqrt(x - r)
        mpfr_sqrt(lo, lo, MPFR_RNDD);
        mpfr_div(out.rad_, rad_, lo, MPFR_RNDU);
    }
    mpfr_clear(lo);
    if (inexact) out.add_rounding_error();
    return out;
}

Ball Ball::log() const {
    mpfr_t lo;
    mpfr_init2(lo, kRadPrec);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(lo) <= 0) {
        mpfr_clear(lo);
        throw std::domain_error("ball log of a non-positive interval");
    }
    Ball out(prec());
    mpfr_log(out.mid_, mid_, MPFR_RNDN);
    // |log(x +- r) - log(x)| <= r / (x - r)
    mpfr_div(out.rad_, rad_, lo, MPFR_RNDU);
    mpfr_clear(lo);
    out.add_rounding_error();
    return out;
}

Ball Ball::rounded(mpfr_prec_t p) const {
    Ball out(p);
    int inexact = mpfr_set(out.mid_, mid_, MPFR_RNDN);
    mpfr_set(out.rad_, rad_, MPFR_RNDU);
    if (inexact) out.add_rounding_error();
    return out;
}

std::string Ball::mid_str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", digits, mid_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string Ball::rad_str() const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.3RUe", rad_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

bool Ball::positive() const {
    mpfr_t lo;
    mpfr_init2(lo, mpfr_get_prec(mid_));
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    bool ok = mpfr_sgn(lo) > 0;
    mpfr_clear(lo);
    return ok;
}

}  // namespace kalpha
