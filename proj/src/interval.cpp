#include "cantorlab/interval.hpp"

#include <algorithm>

#include "cantorlab/errors.hpp"

namespace cantorlab {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw Error("interval with lo > hi");
}

const Rational& Interval::exact() const {
    if (!is_point()) throw Error("exact() on a non-point interval " + str());
    return lo_;
}

Interval Interval::operator*(const Interval& o) const {
    // Fast path: both nonnegative (the common case for masses).
    if (lo_.sign() >= 0 && o.lo_.sign() >= 0)
        return Interval(lo_ * o.lo_, hi_ * o.hi_);
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    Rational lo = std::min(std::min(a, b), std::min(c, d));
    Rational hi = std::max(std::max(a, b), std::max(c, d));
    return Interval(lo, hi);
}

Interval Interval::operator/(const Interval& o) const {
    if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0)
        throw Error("interval division by interval containing zero");
    Interval inv(Rational(1) / o.hi_, Rational(1) / o.lo_);
    return *this * inv;
}

std::string Interval::str() const {
    if (is_point()) return lo_.str();
    return "[" + lo_.str() + ", " + hi_.str() + "]";
}

}  // namespace cantorlab
