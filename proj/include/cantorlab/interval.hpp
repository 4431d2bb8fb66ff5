#pragma once

#include <string>

#include "cantorlab/rational.hpp"

namespace cantorlab {

// Closed interval [lo, hi] with exact rational endpoints. The true value of a
// quantity contaminated by series truncation is guaranteed to lie inside.
// A point interval (lo == hi) is an exact value; exact arithmetic on point
// intervals stays point, so exactness propagates without a separate type.
class Interval {
  public:
    Interval() = default;
    Interval(Rational v) : lo_(v), hi_(std::move(v)) {}  // NOLINT: implicit on purpose
    Interval(long v) : Interval(Rational(v)) {}          // NOLINT
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_point() const { return lo_ == hi_; }

    // The exact value of a point interval; throws on a genuine interval.
    const Rational& exact() const;

    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_less(const Interval& o) const { return hi_ < o.lo_; }

    Interval operator+(const Interval& o) const { return Interval(lo_ + o.lo_, hi_ + o.hi_); }
    Interval operator-(const Interval& o) const { return Interval(lo_ - o.hi_, hi_ - o.lo_); }
    Interval operator*(const Interval& o) const;
    // Requires o strictly positive or strictly negative.
    Interval operator/(const Interval& o) const;
    Interval operator-() const { return Interval(-hi_, -lo_); }
    Interval& operator+=(const Interval& o) { *this = *this + o; return *this; }
    Interval& operator-=(const Interval& o) { *this = *this - o; return *this; }
    Interval& operator*=(const Interval& o) { *this = *this * o; return *this; }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

    // Outward rounding to dyadic endpoints with the given fractional bits;
    // keeps certified bounds while stopping rational blow-up in long series.
    Interval round_outward(unsigned bits) const {
        return Interval(lo_.floor_dyadic(bits), hi_.ceil_dyadic(bits));
    }

    double to_double() const { return mid().to_double(); }
    std::string str() const;

  private:
    Rational lo_, hi_;
};

inline Interval operator*(const Rational& a, const Interval& b) { return Interval(a) * b; }

}  // namespace cantorlab
