#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "ramsey/bigint.hpp"

namespace ramsey {

// Closed interval [lo, hi] with outward MPFR rounding. Only what the
// probabilistic calculators need: nonnegative-operand products live alongside
// general add/sub, logs, and exp.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& other);
    Interval& operator=(const Interval& other);
    ~Interval();

    mpfr_prec_t precision() const { return prec_; }

    static Interval from_long(long v, mpfr_prec_t prec);
    static Interval from_bigint(const BigInt& v, mpfr_prec_t prec);
    static Interval from_rational(const Rational& v, mpfr_prec_t prec);

    // natural log of the whole interval (requires lo >= 0; log 0 = -inf)
    Interval log() const;
    Interval exp() const;

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    // requires both operands nonnegative (all uses here are)
    Interval mul_nonneg(const Interval& o) const;
    // requires divisor strictly positive
    Interval div_pos(const Interval& o) const;
    Interval mul_long(long v) const;  // v >= 0

    bool contains_zero() const;
    double midpoint() const;
    double lo_d() const;
    double hi_d() const;

    // strict comparison: true/false when the intervals separate, nullopt on overlap
    static std::optional<bool> certainly_less(const Interval& a, const Interval& b);

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace ramsey
