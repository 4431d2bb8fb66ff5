#pragma once

#include <cstdint>

#include "cantorlab/dyadic.hpp"
#include "cantorlab/mltest.hpp"

namespace cantorlab {

// Sampling the uniform distribution on measure space by stick breaking:
// X_eps = 1 and X_{s0} is uniform on [0, X_s], independently across s.
// Draws are 53-bit dyadic rationals, so sampled measures are exact and
// additivity holds exactly; streams are keyed by (seed, index, s), so the
// sample stream is reproducible regardless of evaluation order or threads.
struct SamplerConfig {
    uint64_t seed = 0;
    size_t depth = 4;
    size_t sample_count = 1;
};

constexpr size_t kMaxSamplerDepth = 16;

DyadicMeasure sample_measure(const SamplerConfig& cfg, size_t index);

// All masses at depths <= cfg.depth for one sample, level by level
// (level d holds the 2^d cylinder masses in lexicographic order).
std::vector<std::vector<Rational>> sample_levels(const SamplerConfig& cfg, size_t index);

// v_n(x) = P(mu[s] <= x) for |s| = n under the stick-breaking law:
// v_1(x) = x, v_{n+1}(x) = x + int_x^1 v_n(x/t) dt = x (1 + int_x^1 v_n(u)/u^2 du).
// Composite Simpson on a fixed dyadic grid; `panels` is a power of two >= 4.
// Throws QuadratureNonConvergent if doubling the grid moves the value by
// more than 1e-6.
double v_recursion(int n, double x, size_t panels);

// Monte Carlo estimate of E mu(G) over the sample stream, with the exact
// rational sample mean and a double standard error.
struct McResult {
    Rational exact_mean;
    double estimate = 0;
    double std_error = 0;
};
McResult mc_expectation(const SamplerConfig& cfg, const std::vector<BitString>& G,
                        unsigned threads = 1);

// Empirical fraction of samples with mu(G_m truncated at cutoff) >= delta,
// against the Markov bound 2^-m / delta.
struct FractionResult {
    double fraction = 0;
    double bound = 0;
    double std_error = 0;
    size_t exceed_count = 0;
};
FractionResult failing_fraction(const SamplerConfig& cfg, const TestFamily& test, int m,
                                size_t cutoff, const Rational& delta, unsigned threads = 1);

}  // namespace cantorlab
