#pragma once

#include <vector>

#include "cantorlab/measure.hpp"

namespace cantorlab {

// Block entropy H_n = -(1/n) sum_{|w|=n} rho[w] log2 rho[w], exact masses,
// base-2 logs with exact integer part (absolute error well under 1e-12).
// 0 log 0 = 0.
double block_entropy(const MeasureSpec& spec, int n);

struct EntropyReport {
    std::vector<std::pair<int, double>> block_entropies;
    double entropy_estimate = 0;  // min over computed n: an upper bound on H
};
EntropyReport entropy_report(const MeasureSpec& spec, int max_n);

// h_n(Z) = -(1/n) log2 rho[Z restricted to n].
double empirical_entropy(const MeasureSpec& spec, const BitString& prefix);

// E_mu[h_n^rho] and E_mu|h_n^rho - s| with certified interval logs.
// Requires mu[x] > 0 => rho[x] > 0 at length n (SupportViolation otherwise).
struct ExpectedEmpirical {
    Interval mean;
    Interval mean_abs_dev;
};
ExpectedEmpirical expected_empirical(const MeasureSpec& mu, const MeasureSpec& rho, int n,
                                     const Rational& s);

// The renewal divergence series: E_mu h_n^rho for the companion measure
// d mu = f d rho of the renewal process, computed from certified terms.
Interval renewal_expected_empirical(int truncation, int n, bool normalized);

// One sampled path of length n; bit i is 0 with probability
// spec[s0]/spec[s], via the keyed deterministic stream.
BitString sample_path(const MeasureSpec& spec, size_t n, uint64_t seed, uint64_t index = 0);

// Cesàro average (1/N) sum_{k<N} rho([u] cap T^-k [v]) against rho[u] rho[v].
// Exact closed forms for i.i.d. and Markov measures; generic measures use
// cylinder decomposition and require |u| + N + |v| within the depth ceiling.
struct ErgodicityProbe {
    Interval average;
    Interval target;
};
ErgodicityProbe ergodicity_probe(const MeasureSpec& spec, const BitString& u,
                                 const BitString& v, int N);

// Verifies rho[s] = rho[0s] + rho[1s] for all |s| <= depth - 1.
struct ShiftInvarianceReport {
    bool invariant = true;           // exact equality / interval overlap everywhere
    Rational max_residual;           // max |mid(lhs) - mid(rhs)|
    Rational max_width;              // max total interval width encountered
    size_t checked = 0;
};
ShiftInvarianceReport shift_invariance_check(const MeasureSpec& spec, int depth);

}  // namespace cantorlab
