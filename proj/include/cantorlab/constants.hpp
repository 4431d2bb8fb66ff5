#pragma once

#include "cantorlab/interval.hpp"

namespace cantorlab {

// Certified transcendental constants and logarithms. Every value is an
// Interval whose endpoints are exact rationals bracketing the true real;
// series are cut with explicit remainder bounds and all intermediate
// arithmetic rounds outward, so the brackets are sound by construction.
namespace constants {

// ln 2 (from 2*atanh(1/3)), bracketed to roughly 2^-prec_bits.
Interval ln2(unsigned prec_bits);

// pi via Machin's formula 16*atan(1/5) - 4*atan(1/239); alternating-series
// partial sums give the bracket.
Interval pi(unsigned prec_bits);

// zeta(2) = pi^2/6, used for the renewal companion measure tails.
Interval zeta2(unsigned prec_bits);

// Natural log of a positive rational.
Interval ln(const Rational& x, unsigned prec_bits);

// log2 of a strictly positive interval (monotone hull of endpoint logs).
Interval log2(const Interval& x, unsigned prec_bits);

}  // namespace constants

// Fast non-certified log2 for entropy reports: exact integer part from the
// bit length, double-precision mantissa (absolute error a few ulp of the
// result, far below the 1e-12 budget). Safe for magnitudes like 2^-1300
// where a plain double conversion would underflow.
double log2_double(const Rational& x);

}  // namespace cantorlab
