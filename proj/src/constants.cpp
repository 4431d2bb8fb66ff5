#include "cantorlab/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "cantorlab/errors.hpp"

namespace cantorlab {
namespace constants {

namespace {

std::mutex cache_mutex;

// atanh(z) = sum_{j>=0} z^(2j+1)/(2j+1) for exact rational z in (0,1).
// Remainder after J terms is at most z^(2J+1) / ((2J+1)(1-z^2)).
Interval atanh_series(const Rational& z, unsigned terms, unsigned round_bits) {
    Interval zz = Interval(z * z).round_outward(round_bits);
    Interval power(z);
    Interval sum(Rational(0));
    for (unsigned j = 0; j < terms; ++j) {
        sum = (sum + power * Interval(Rational(1, 2 * j + 1))).round_outward(round_bits);
        power = (power * zz).round_outward(round_bits);
    }
    // power now brackets z^(2*terms+1).
    Rational denom = (Rational(1) - z * z) * Rational(2 * terms + 1);
    Rational rem = power.hi() / denom;
    if (rem.sign() < 0) throw Error("atanh remainder underflow");
    return Interval(sum.lo(), sum.hi() + rem);
}

// atan(1/x) for integer x >= 2 by the alternating series
// sum_j (-1)^j / ((2j+1) x^(2j+1)); consecutive partial sums bracket it.
Interval atan_inv(long x, unsigned terms) {
    Rational lower(0), upper(0);
    Rational sum(0);
    Rational rx(1, static_cast<unsigned long>(x));
    for (unsigned j = 0; j <= terms; ++j) {
        Rational term = rx.pow(2 * static_cast<long>(j) + 1) / Rational(2 * j + 1);
        if (j % 2 == 0) sum += term; else sum -= term;
        if (j == terms - 1 || j == terms) {
            if (j % 2 == 0) upper = sum; else lower = sum;
        }
    }
    return Interval(lower, upper);
}

unsigned terms_for(unsigned prec_bits, double bits_per_term) {
    return static_cast<unsigned>(prec_bits / bits_per_term) + 4;
}

}  // namespace

Interval ln2(unsigned prec_bits) {
    static std::map<unsigned, Interval> cache;
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find(prec_bits);
    if (it != cache.end()) return it->second;
    // ln 2 = 2 atanh(1/3); term decay ~ 9^-j.
    unsigned terms = terms_for(prec_bits + 16, 2 * 1.584);
    Interval v = Interval(Rational(2)) * atanh_series(Rational(1, 3), terms, prec_bits + 32);
    cache.emplace(prec_bits, v);
    return v;
}

Interval pi(unsigned prec_bits) {
    static std::map<unsigned, Interval> cache;
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find(prec_bits);
    if (it != cache.end()) return it->second;
    unsigned t5 = terms_for(prec_bits + 16, 2 * 2.321);
    unsigned t239 = terms_for(prec_bits + 16, 2 * 7.901);
    Interval v = Interval(Rational(16)) * atan_inv(5, t5) -
                 Interval(Rational(4)) * atan_inv(239, t239);
    cache.emplace(prec_bits, v);
    return v;
}

Interval zeta2(unsigned prec_bits) {
    static std::map<unsigned, Interval> cache;
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache.find(prec_bits);
        if (it != cache.end()) return it->second;
    }
    Interval p = pi(prec_bits + 8);
    Interval v = p * p / Interval(Rational(6));
    std::lock_guard<std::mutex> lk(cache_mutex);
    cache.emplace(prec_bits, v);
    return v;
}

Interval ln(const Rational& x, unsigned prec_bits) {
    if (x.sign() <= 0) throw Error("ln of non-positive rational");
    // Reduce to x = 2^e * m with m in [1, 2).
    long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
    Rational m = x * Rational::pow2(-e);
    if (m < Rational(1)) { m = m * Rational(2); e -= 1; }
    if (m >= Rational(2)) { m = m / Rational(2); e += 1; }
    // ln m = 2 atanh((m-1)/(m+1)); z in [0, 1/3).
    Rational z = (m - Rational(1)) / (m + Rational(1));
    Interval lnm(Rational(0));
    if (!z.is_zero()) {
        // Round z outward first so series arithmetic stays dyadic-sized.
        Interval zi = Interval(z).round_outward(prec_bits + 48);
        unsigned terms = terms_for(prec_bits + 16, 2 * 1.584);
        Interval lo_part = atanh_series(zi.lo(), terms, prec_bits + 32);
        Interval hi_part = atanh_series(zi.hi(), terms, prec_bits + 32);
        lnm = Interval(Rational(2)) * Interval(lo_part.lo(), hi_part.hi());
    }
    return Interval(Rational(static_cast<long>(e))) * ln2(prec_bits) + lnm;
}

Interval log2(const Interval& x, unsigned prec_bits) {
    if (!x.strictly_positive()) throw Error("log2 of interval touching zero");
    Interval l2 = ln2(prec_bits);
    Interval a = ln(x.lo(), prec_bits) / l2;
    Interval b = x.is_point() ? a : ln(x.hi(), prec_bits) / l2;
    return Interval(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

}  // namespace constants

double log2_double(const Rational& x) {
    if (x.sign() <= 0) throw Error("log2_double of non-positive rational");
    long exp_num = 0, exp_den = 0;
    double mant_num = mpz_get_d_2exp(&exp_num, x.num().get_mpz_t());
    double mant_den = mpz_get_d_2exp(&exp_den, x.den().get_mpz_t());
    return (std::log2(mant_num) - std::log2(mant_den)) +
           static_cast<double>(exp_num - exp_den);
}

}  // namespace cantorlab
