#pragma once

#include <functional>
#include <vector>

#include "cantorlab/complexity.hpp"
#include "cantorlab/measure.hpp"

namespace cantorlab {

// Level-indexed string enumerator for Martin-Löf or Solovay tests. The
// generator is a pure function of (level, cutoff): it lists the member
// strings of length <= cutoff in lexicographic order, and its output at a
// smaller cutoff is a prefix of the output at a larger one.
struct TestFamily {
    enum class Kind { ML, Solovay };
    Kind kind = Kind::ML;
    std::string name;
    int max_level = 0;  // levels beyond this are not enumerable at desk scale
    std::function<std::vector<BitString>(int level, size_t cutoff)> generator;
    std::function<Rational(int level)> declared_mass_bound;
};

// G_m = {0^m}: the simplest ML test (lambda-mass 2^-m exactly).
TestFamily zeros_family();

// Level m lists the strings of length 4m whose zero-count deviates from the
// midpoint by more than a quarter of the length. Exact binomial tails stay
// under 2^-m (verified in tests).
TestFamily lln_family();

// G_m = {Z restricted to m}: prefixes of a fixed sequence.
TestFamily dirac_prefix_family(SequenceSpec seq);

// Levin-Schnorr style family from a prefix table: level b lists the minimal
// covered strings x with K(x) < |x| - b. The 2^-b mass bound is certified by
// Kraft's inequality; a violation signals a machine bug (MassBoundViolated).
TestFamily levin_schnorr_family(const ComplexityTable& prefix_table, int max_level);

// mu-mass of the clopen set spanned by the level-m strings of length <= n,
// after removing strings covered by an enumerated prefix.
Interval truncated_mass(const MeasureSpec& spec, const TestFamily& test, int m, size_t n);

// Text form of the truncated family: one "level<TAB>string" line per member.
std::string serialize_truncations(const TestFamily& test, int max_level, size_t cutoff);

// Finite-resolution verdict; never a theorem-level passing claim.
struct Verdict {
    enum class Kind { FailsAtLevel, MassDecayedBelow, Inconclusive };
    Kind kind = Kind::Inconclusive;
    Rational delta;
    Interval final_mass;   // mass at the deepest computed level
    int max_level = 0;
    size_t cutoff = 0;
    std::vector<Interval> level_masses;
};
Verdict pass_diagnostic(const MeasureSpec& spec, const TestFamily& test, int max_level,
                        size_t cutoff, const Rational& delta);

// Strong Solovay test: finite clopen blocks X_r of equal-length strings with
// strictly increasing lengths and sum of lambda-masses <= 1/2.
class StrongSolovayTest {
  public:
    struct Block {
        size_t n;
        std::vector<BitString> strings;
    };
    explicit StrongSolovayTest(std::vector<Block> blocks);
    const std::vector<Block>& blocks() const { return blocks_; }

  private:
    std::vector<Block> blocks_;
};

// Complexity-dip report against a strong Solovay test failed at level delta.
// f comes from the dyadic bracket 2^-f(n_r) >= mu(X_r) > 2^-f(n_r)-1 on block
// lengths (f(m) = m elsewhere); the dip inequality is reported with the
// measured additive constant.
struct DipReport {
    struct Row {
        size_t r;
        size_t n;
        Interval block_mass;        // mu(X_r)
        long f;                     // dyadic bracket exponent
        Interval cond_complexity;   // C(mu | n_r given n_r)
        double bound_without_const; // n_r - delta f(n_r)
    };
    std::vector<Row> rows;
    double measured_constant = 0;  // max over rows of lhs - bound
    Rational sum_two_to_minus_f;   // over n <= max block length (f(m) = m off-blocks)
};
DipReport dip_report(const MeasureSpec& spec, const StrongSolovayTest& sst,
                     const MachineLab& lab, const Rational& delta);

// The standard dip fixture: single-cylinder blocks X_r = {0^{n_r}} at
// n_r = 3, 5, 7 (lambda mass 2^-3 + 2^-5 + 2^-7 <= 1/2), and a half/half
// mixture of the all-zeros and all-ones sequences, so mu(X_r) = 1/2 at
// every block and f(n_r) = 1.
StrongSolovayTest standard_dip_fixture();
MeasureSpec standard_dip_measure();

}  // namespace cantorlab
