#include "cantorlab/renewal.hpp"

#include "cantorlab/constants.hpp"
#include "cantorlab/errors.hpp"

namespace cantorlab {

namespace {

constexpr unsigned kPrecBits = 160;

long pow4(long k) { return k * k * k * k; }

// sum_{k=j..cut} 2^{-k^4}, plus certified tail [0, 2*2^{-(cut+1)^4}].
// Justified by (k+1)^4 - k^4 >= 15 for k >= 1, so the omitted terms are
// dominated by a geometric series with ratio 2^-15.
Interval tail_sum_pow4(int j, int cut) {
    Rational partial(0);
    for (int k = std::max(j, 1); k <= cut; ++k) partial += Rational::pow2(-pow4(k));
    Rational bound = Rational(2) * Rational::pow2(-pow4(cut + 1));
    return Interval(partial, partial + bound);
}

// sum_{k=max(j,1)..cut} w(k) * 2^{-k^4} with w(k) = k - j + 1 (so w(k) <= k+1),
// tail bounded by 2*(cut+2)*2^{-(cut+1)^4}.
Interval weighted_tail_sum_pow4(int j, int cut) {
    Rational partial(0);
    for (int k = std::max(j, 1); k <= cut; ++k)
        partial += Rational(k - j + 1) * Rational::pow2(-pow4(k));
    Rational bound = Rational(2) * Rational(cut + 2) * Rational::pow2(-pow4(cut + 1));
    return Interval(partial, partial + bound);
}

}  // namespace

RenewalLaw::RenewalLaw(int truncation) : trunc_(truncation), prec_(kPrecBits) {
    if (truncation < 2) throw MalformedSpec("renewal truncation must be >= 2");
    c_ = tail_sum_pow4(1, cut_for(1));
    // b = sum_k (k+1) p_k = (sum_k (k+1) 2^{-k^4}) / c.
    int cut = cut_for(3);
    Rational partial(0);
    for (int k = 1; k <= cut; ++k) partial += Rational(k + 1) * Rational::pow2(-pow4(k));
    Rational bound = Rational(2) * Rational(cut + 2) * Rational::pow2(-pow4(cut + 1));
    b_ = Interval(partial, partial + bound) / c_;
    zeta2_ = constants::zeta2(prec_);
}

int RenewalLaw::cut_for(int j) const { return std::max(trunc_, j + 2); }

Interval RenewalLaw::p(int k) const {
    if (k < 1) return Interval(Rational(0));
    return Interval(Rational::pow2(-pow4(k))) / c_;
}

Interval RenewalLaw::T(int j) const {
    if (j <= 1) return Interval(Rational(1));  // sum of the whole gap law
    return tail_sum_pow4(j, cut_for(j)) / c_;
}

Interval RenewalLaw::S(int n) const {
    if (n <= 0) return b_;  // T_0 + sum_{j>=1} T_j = 1 + (b-1)
    return weighted_tail_sum_pow4(n, cut_for(n)) / c_;
}

Interval RenewalLaw::mass(const BitString& sigma) const {
    size_t n = sigma.size();
    if (n == 0) return Interval(Rational(1));
    std::vector<size_t> ones;
    for (size_t i = 0; i < n; ++i)
        if (sigma.bit(i)) ones.push_back(i);
    if (ones.empty()) return S(static_cast<int>(n)) / b_;
    Interval result = T(static_cast<int>(ones[0])) / b_;
    for (size_t i = 0; i + 1 < ones.size(); ++i) {
        size_t gap = ones[i + 1] - ones[i] - 1;
        if (gap == 0) return Interval(Rational(0));  // "11" never occurs
        result = result * p(static_cast<int>(gap));
    }
    size_t trailing = n - 1 - ones.back();
    if (trailing >= 2) result = result * T(static_cast<int>(trailing));
    return result;
}

Interval RenewalLaw::companion_total() const { return zeta2_ / b_; }

Interval RenewalLaw::companion_mass(const BitString& sigma, bool normalized) const {
    Interval raw(Rational(0));
    size_t n = sigma.size();
    if (n == 0) {
        raw = companion_total();
    } else if (sigma.bit(0) == 0) {
        raw = Interval(Rational(0));
    } else {
        std::vector<size_t> ones;
        for (size_t i = 0; i < n; ++i)
            if (sigma.bit(i)) ones.push_back(i);
        if (ones.size() == 1) {
            // sigma = 1 0^{n-1}: prefix of every v_k with k >= n-1.
            int j = std::max<int>(static_cast<int>(n) - 1, 1);
            Rational head(0);
            for (int k = 1; k < j; ++k) head += Rational(1, static_cast<unsigned long>(k) * k);
            raw = (zeta2_ - Interval(head)) / b_;
        } else {
            size_t k = ones[1] - 1;  // sigma extends v_k = 1 0^k 1
            if (k == 0) return Interval(Rational(0));
            // mu[x] = (k^-2 / p_k) rho[x]; the p_k of the first gap cancels.
            Interval result = Interval(Rational(1, k * k)) / b_;
            for (size_t i = 1; i + 1 < ones.size(); ++i) {
                size_t gap = ones[i + 1] - ones[i] - 1;
                if (gap == 0) return Interval(Rational(0));
                result = result * p(static_cast<int>(gap));
            }
            size_t trailing = n - 1 - ones.back();
            if (trailing >= 2) result = result * T(static_cast<int>(trailing));
            raw = result;
        }
    }
    if (!normalized) return raw;
    return raw / companion_total();
}

std::vector<RenewalTerm> renewal_expectation_terms(int truncation, int n) {
    if (n < 3) throw MalformedSpec("renewal_expectation_terms needs n >= 3");
    if (truncation < 2) throw MalformedSpec("truncation must be >= 2");
    RenewalLaw law(truncation);
    // Support at length n: strings starting with 1 and containing no "11"
    // (every inner gap has positive probability), in lexicographic order.
    std::vector<BitString> support;
    std::string cur = "1";
    auto rec = [&](auto&& self, bool last_was_one) -> void {
        if (cur.size() == static_cast<size_t>(n)) {
            support.emplace_back(cur);
            return;
        }
        cur.push_back('0');
        self(self, false);
        cur.pop_back();
        if (!last_was_one) {
            cur.push_back('1');
            self(self, true);
            cur.pop_back();
        }
    };
    rec(rec, true);
    Rational width_limit = Rational::pow2(-64);
    std::vector<RenewalTerm> out;
    for (const BitString& x : support) {
        RenewalTerm t{x, law.companion_mass(x, false), law.mass(x)};
        if (t.mu.width() > width_limit || t.rho.width() > width_limit)
            throw TruncationTooSmall("interval width above 2^-64 at " + x.str());
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace cantorlab
