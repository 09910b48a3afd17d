#include "ramsey/interval.hpp"

namespace ramsey {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_bigint(const BigInt& v, mpfr_prec_t prec) {
    Interval r(prec);
    const std::string s = v.str();
    mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

Interval Interval::from_rational(const Rational& v, mpfr_prec_t prec) {
    Interval num = from_bigint(numerator(v), prec);
    Interval den = from_bigint(denominator(v), prec);
    Interval r(prec);
    mpfr_div(r.lo_, num.lo_, den.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, num.hi_, den.lo_, MPFR_RNDU);
    if (numerator(v) < 0) {
        // negative values: recompute with swapped denominator endpoints
        mpfr_div(r.lo_, num.lo_, den.lo_, MPFR_RNDD);
        mpfr_div(r.hi_, num.hi_, den.hi_, MPFR_RNDU);
    }
    return r;
}

Interval Interval::log() const {
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::mul_nonneg(const Interval& o) const {
    Interval r(prec_);
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::div_pos(const Interval& o) const {
    Interval r(prec_);
    mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::mul_long(long v) const {
    Interval r(prec_);
    mpfr_mul_si(r.lo_, lo_, v, MPFR_RNDD);
    mpfr_mul_si(r.hi_, hi_, v, MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

double Interval::midpoint() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::optional<bool> Interval::certainly_less(const Interval& a, const Interval& b) {
    if (mpfr_cmp(a.hi_, b.lo_) < 0) return true;   // whole of a below whole of b
    if (mpfr_cmp(a.lo_, b.hi_) >= 0) return false;  // whole of a at or above b
    return std::nullopt;
}

}  // namespace ramsey
