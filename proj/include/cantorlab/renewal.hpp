#pragma once

#include <vector>

#include "cantorlab/bitstring.hpp"
#include "cantorlab/interval.hpp"

namespace cantorlab {

// Stationary binary renewal process: after each 1 the process emits exactly
// k zeros before the next 1 with probability p_k = 2^{-k^4}/c (k >= 1),
// c = sum_k 2^{-k^4}. The mean return distance is b = sum_k (k+1) p_k, the
// stationary 1-frequency is 1/b, and the age law P(first 1 at position j) =
// T_j / b with T_j = sum_{k >= max(j,1)} p_k (T_0 = T_1 = 1 exactly).
//
// All irrational constants are certified intervals: series are cut at
// max(truncation, j+2) with first-omitted-term tail bounds, so every lower
// endpoint that must be positive is positive.
class RenewalLaw {
  public:
    explicit RenewalLaw(int truncation);

    int truncation() const { return trunc_; }
    const Interval& c() const { return c_; }
    const Interval& b() const { return b_; }
    Interval p(int k) const;                 // gap law
    Interval T(int j) const;                 // tail sum of the gap law
    Interval S(int n) const;                 // sum_{j>=n} T_j (all-zeros cylinders)

    // rho[sigma] for the stationary process.
    Interval mass(const BitString& sigma) const;

    // Companion measure of the divergence example: d mu = f d rho with
    // f(1 0^k 1 ...) = k^-2 / p_k. Total mass zeta(2)/b; `normalized`
    // divides it out.
    Interval companion_mass(const BitString& sigma, bool normalized) const;
    Interval companion_total() const;         // zeta(2)/b

  private:
    int cut_for(int j) const;
    int trunc_;
    unsigned prec_;
    Interval c_, b_, zeta2_;
};

// Length-n cylinders with positive companion mass, with certified
// mu[x] and rho[x]. Throws TruncationTooSmall if any width exceeds 2^-64.
struct RenewalTerm {
    BitString x;
    Interval mu;
    Interval rho;
};
std::vector<RenewalTerm> renewal_expectation_terms(int truncation, int n);

}  // namespace cantorlab
