#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cantorlab/constants.hpp"
#include "cantorlab/entropy.hpp"
#include "cantorlab/renewal.hpp"
#include "fixtures.hpp"

using namespace cantorlab;

namespace {
const double kH14 = 2.0 - 0.75 * std::log2(3.0);  // H(Bernoulli 1/4) = 0.811278...
}

TEST_CASE("block entropy of the basic measures") {
    for (int n = 1; n <= 10; ++n)
        CHECK(std::fabs(block_entropy(MeasureSpec::uniform(), n) - 1.0) < 1e-12);
    for (int n = 1; n <= 12; ++n)
        CHECK(std::fabs(block_entropy(MeasureSpec::bernoulli(Rational(1, 4)), n) - kH14) <
              1e-12);
    for (int n = 1; n <= 8; ++n)
        CHECK(block_entropy(fixtures::dirac_zeros(), n) == 0.0);
    EntropyReport report = entropy_report(MeasureSpec::bernoulli(Rational(1, 4)), 8);
    CHECK(std::fabs(report.entropy_estimate - kH14) < 1e-12);
}

TEST_CASE("markov block entropy falls toward the conditional entropy") {
    MeasureSpec m = fixtures::markov();  // stationary initial distribution
    double prev = block_entropy(m, 1);
    double cond =
        (3.0 / 7) * (-(2.0 / 3) * std::log2(2.0 / 3) - (1.0 / 3) * std::log2(1.0 / 3)) +
        (4.0 / 7) * (-(1.0 / 4) * std::log2(1.0 / 4) - (3.0 / 4) * std::log2(3.0 / 4));
    for (int n = 2; n <= 10; ++n) {
        double h = block_entropy(m, n);
        CHECK(h <= prev + 1e-12);
        CHECK(h >= cond - 1e-12);
        prev = h;
    }
}

TEST_CASE("empirical entropy values") {
    for (const std::string& s : {"0", "0110", "11111"})
        CHECK(std::fabs(empirical_entropy(MeasureSpec::uniform(), BitString(s)) - 1.0) <
              1e-12);
    // -(1/2) log2 (9/16) for the measure whose 0-probability is 3/4.
    CHECK(std::fabs(empirical_entropy(MeasureSpec::bernoulli(Rational(3, 4)), BitString("00")) -
                    0.5 * std::log2(16.0 / 9.0)) < 1e-12);
    // Renewal: -log2 rho[1] = log2 b.
    RenewalLaw law(3);
    CHECK(std::fabs(empirical_entropy(MeasureSpec::renewal(3), BitString("1")) -
                    std::log2(law.b().to_double())) < 1e-9);
    CHECK_THROWS_AS(empirical_entropy(fixtures::dirac_zeros(), BitString("1")), NullCylinder);
}

TEST_CASE("expected empirical entropy against itself") {
    // E_lambda[h_n^lambda] = 1 and deviation 0, exactly.
    for (int n = 1; n <= 8; ++n) {
        auto [mean, dev] = expected_empirical(MeasureSpec::uniform(), MeasureSpec::uniform(),
                                              n, Rational(1));
        CHECK(mean.contains(Rational(1)));
        CHECK(mean.width() < Rational(1, 1000000000));
        CHECK(dev.hi() < Rational(1, 1000000));
    }
    // E_rho[h_n^rho] = H_n(rho) for Bernoulli and Markov up to n = 10.
    MeasureSpec b = MeasureSpec::bernoulli(Rational(1, 4));
    for (int n : {1, 4, 8, 10}) {
        auto [mean, dev] = expected_empirical(b, b, n, Rational(0));
        CHECK(std::fabs(mean.to_double() - block_entropy(b, n)) < 1e-9);
    }
    MeasureSpec mk = fixtures::markov();
    for (int n : {1, 5, 10}) {
        auto [mean, dev] = expected_empirical(mk, mk, n, Rational(0));
        CHECK(std::fabs(mean.to_double() - block_entropy(mk, n)) < 1e-9);
    }
    // A Dirac reduces to the single-path empirical entropy.
    MeasureSpec d = fixtures::dirac_alternating();
    auto [mean, dev] = expected_empirical(d, MeasureSpec::uniform(), 6, Rational(1));
    CHECK(std::fabs(mean.to_double() -
                    empirical_entropy(MeasureSpec::uniform(), d.dirac_seq().prefix(6))) <
          1e-12);
    CHECK(dev.hi() < Rational(1, 1000000));
    // Support violations are detected.
    CHECK_THROWS_AS(expected_empirical(MeasureSpec::uniform(), fixtures::dirac_zeros(), 3,
                                       Rational(0)),
                    SupportViolation);
}

TEST_CASE("renewal divergence series") {
    RenewalLaw law(4);
    Interval prev(Rational(0));
    for (int n = 4; n <= 7; ++n) {
        Interval e = renewal_expected_empirical(4, n, false);
        CHECK(e.width() <= Rational::pow2(-64));
        CHECK(prev.strictly_less(e));  // strictly increasing, certified
        int k = n - 2;
        Interval bound = Interval(Rational(static_cast<long>(k) * k)) /
                         (Interval(Rational(n)) * law.b());
        CHECK(bound.hi() <= e.lo());  // E >= k^2/(n b) with C = 0
        prev = e;
    }
}

TEST_CASE("sample paths") {
    // Dirac paths ignore the seed.
    MeasureSpec d = fixtures::dirac_alternating();
    CHECK(sample_path(d, 12, 1) == d.dirac_seq().prefix(12));
    CHECK(sample_path(d, 12, 2) == d.dirac_seq().prefix(12));
    // Determinism contract.
    CHECK(sample_path(MeasureSpec::uniform(), 64, 9).str() ==
          sample_path(MeasureSpec::uniform(), 64, 9).str());
    CHECK(sample_path(MeasureSpec::uniform(), 64, 9) !=
          sample_path(MeasureSpec::uniform(), 64, 10));

    // Depth-3 cylinder frequencies over many paths within 4 SE of the mass.
    MeasureSpec b = MeasureSpec::bernoulli(Rational(1, 4));
    const size_t paths = 10000;
    std::map<std::string, size_t> counts;
    for (size_t i = 0; i < paths; ++i) counts[sample_path(b, 3, 77, i).str()]++;
    for (const BitString& s : BitString::all_of_length(3)) {
        double p = eval(b, s).exact().to_double();
        double freq = static_cast<double>(counts[s.str()]) / paths;
        double se = std::sqrt(p * (1 - p) / paths);
        CHECK(std::fabs(freq - p) <= 4 * se + 1e-9);
    }

    // SMB at a small scale: mean empirical entropy near H(Bernoulli 1/4).
    double sum = 0;
    const int quick_paths = 50;
    for (int i = 0; i < quick_paths; ++i)
        sum += empirical_entropy(b, sample_path(b, 512, 4096, i));
    CHECK(std::fabs(sum / quick_paths - kH14) < 0.05);
}

TEST_CASE("ergodicity probe closed forms and brute force agree") {
    // Uniform: every term with k >= 1 is 1/4; the average approaches 1/4.
    auto u = ergodicity_probe(MeasureSpec::uniform(), BitString("1"), BitString("1"), 64);
    CHECK(u.target.exact() == Rational(1, 4));
    CHECK((u.average.exact() - u.target.exact()).abs() <= Rational(1, 64));

    // Bernoulli with 0-probability 3/4: terms (3/4)(9/16) beyond the overlap.
    MeasureSpec b34 = MeasureSpec::bernoulli(Rational(3, 4));
    auto e = ergodicity_probe(b34, BitString("0"), BitString("00"), 64);
    CHECK(e.target.exact() == Rational(3, 4) * Rational(9, 16));
    CHECK((e.average.exact() - e.target.exact()).abs() <= Rational(1, 64));

    // Markov at N = 64 within 1/N of the product.
    auto m = ergodicity_probe(fixtures::markov(), BitString("0"), BitString("11"), 64);
    CHECK((m.average.exact() - m.target.exact()).abs() <= Rational(1, 64));

    // Null pattern: all terms vanish.
    auto z = ergodicity_probe(fixtures::dirac_zeros(), BitString("1"), BitString("1"), 16);
    CHECK(z.average.exact() == Rational(0));
    CHECK(z.target.exact() == Rational(0));

    // Cross-check the closed forms against generic cylinder decomposition.
    for (int N : {4, 8}) {
        for (const MeasureSpec& spec :
             {MeasureSpec::bernoulli(Rational(1, 3)), fixtures::markov()}) {
            Interval fast =
                ergodicity_probe(spec, BitString("01"), BitString("1"), N).average;
            // Generic route: force it by wrapping in a convex singleton
            // (kind changes, so the probe takes the cylinder path).
            MeasureSpec wrapped = MeasureSpec::convex({{Rational(1), spec}});
            Interval slow =
                ergodicity_probe(wrapped, BitString("01"), BitString("1"), N).average;
            CHECK(fast.exact() == slow.exact());
        }
    }
    // The generic path respects the depth ceiling.
    MeasureSpec wrapped = MeasureSpec::convex({{Rational(1), fixtures::markov()}});
    CHECK_THROWS_AS(ergodicity_probe(wrapped, BitString("0"), BitString("1"), 64),
                    DepthExceeded);
}

TEST_CASE("shift invariance") {
    for (const MeasureSpec& spec :
         {MeasureSpec::uniform(), MeasureSpec::bernoulli(Rational(1, 4)), fixtures::markov()}) {
        ShiftInvarianceReport r = shift_invariance_check(spec, 8);
        CHECK(r.invariant);
        CHECK(r.max_residual == Rational(0));  // exact for these measures
    }
    // The renewal law is stationary: residuals within certified widths.
    ShiftInvarianceReport r = shift_invariance_check(MeasureSpec::renewal(4), 8);
    CHECK(r.invariant);
    CHECK(r.max_residual <= r.max_width);
    CHECK(r.max_width <= Rational::pow2(-200));
    CHECK(r.checked == 255);

    // A non-stationary Markov chain is flagged.
    MeasureSpec skew = MeasureSpec::markov({Rational(1), Rational(0)},
                                           {{{Rational(1, 2), Rational(1, 2)},
                                             {Rational(1, 2), Rational(1, 2)}}});
    ShiftInvarianceReport bad = shift_invariance_check(skew, 3);
    CHECK_FALSE(bad.invariant);
}
