#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cantorlab {

using BigInt = mpz_class;

// Exact rational, always canonical (lowest terms, positive denominator).
// Thin wrapper over GMP so the rest of the library owns the surface:
// dyadic rounding, exact pow, safe double conversion, num/den parsing.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
    Rational(long n, unsigned long d) : q_(n, d) { q_.canonicalize(); }
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Parses "num", "num/den", or a decimal like "0.25" (exact).
    static Rational parse(const std::string& text);

    const BigInt num() const { return q_.get_num(); }
    const BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // x^e for integer e (e < 0 requires x != 0).
    Rational pow(long e) const;

    // 2^e as a rational, e may be negative.
    static Rational pow2(long e);

    // Largest multiple of 2^-bits that is <= *this (resp. smallest >=).
    Rational floor_dyadic(unsigned bits) const;
    Rational ceil_dyadic(unsigned bits) const;

    // floor(*this) as BigInt.
    BigInt floor() const;

    // Correctly handles magnitudes far outside double range (underflow to 0 etc).
    double to_double() const { return q_.get_d(); }

    // "num/den" (or just "num" when den == 1).
    std::string str() const;

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }

}  // namespace cantorlab
