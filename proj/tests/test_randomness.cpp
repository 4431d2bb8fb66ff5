#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorlab/mltest.hpp"
#include "fixtures.hpp"

using namespace cantorlab;

TEST_CASE("zeros family truncated masses") {
    TestFamily zeros = zeros_family();
    for (int m = 1; m <= 6; ++m) {
        CHECK(truncated_mass(MeasureSpec::uniform(), zeros, m, 20).exact() ==
              Rational::pow2(-m));
        CHECK(truncated_mass(MeasureSpec::uniform(), zeros, m, m - 1).exact() ==
              Rational(0));
        CHECK(truncated_mass(fixtures::dirac_zeros(), zeros, m, m).exact() == Rational(1));
    }
}

TEST_CASE("truncated mass is convex and monotone in the cutoff") {
    TestFamily zeros = zeros_family();
    MeasureSpec a = MeasureSpec::uniform();
    MeasureSpec b = fixtures::dirac_zeros();
    MeasureSpec mix = MeasureSpec::convex({{Rational(1, 3), a}, {Rational(2, 3), b}});
    for (int m = 1; m <= 5; ++m) {
        Rational lhs = truncated_mass(mix, zeros, m, 12).exact();
        Rational rhs = Rational(1, 3) * truncated_mass(a, zeros, m, 12).exact() +
                       Rational(2, 3) * truncated_mass(b, zeros, m, 12).exact();
        CHECK(lhs == rhs);
        for (size_t n = 0; n + 1 <= 12; ++n) {
            CHECK(truncated_mass(mix, zeros, m, n).exact() <=
                  truncated_mass(mix, zeros, m, n + 1).exact());
            // The declared bound holds at every (level, cutoff) pair.
            CHECK(truncated_mass(a, zeros, m, n).exact() <= zeros.declared_mass_bound(m));
        }
    }
}

TEST_CASE("truncated mass equals the brute-force cylinder sum") {
    // Oracle: sum mu[x] over all |x| = n extending some enumerated string.
    auto oracle = [](const MeasureSpec& mu, const TestFamily& f, int m, size_t n) {
        auto members = f.generator(m, n);
        Rational total(0);
        for (const BitString& x : BitString::all_of_length(n)) {
            bool covered = false;
            for (const BitString& s : members)
                if (s.is_prefix_of(x)) { covered = true; break; }
            if (covered) total += eval(mu, x).exact();
        }
        return total;
    };
    for (const MeasureSpec& mu :
         {MeasureSpec::uniform(), MeasureSpec::bernoulli(Rational(1, 3)),
          fixtures::convex_halves(), MeasureSpec::sigma_mixture()}) {
        for (int m = 1; m <= 3; ++m) {
            CHECK(truncated_mass(mu, zeros_family(), m, 10).exact() ==
                  oracle(mu, zeros_family(), m, 10));
            CHECK(truncated_mass(mu, lln_family(), m, 10).exact() ==
                  oracle(mu, lln_family(), m, 10));
        }
    }
}

TEST_CASE("generator output is stable under the cutoff") {
    for (TestFamily f : {zeros_family(), lln_family()}) {
        for (int m = 1; m <= 3; ++m) {
            auto small = f.generator(m, 10);
            auto large = f.generator(m, 16);
            REQUIRE(small.size() <= large.size());
            for (size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
        }
    }
}

TEST_CASE("lln family is a valid ML test and catches Bernoulli(1/3)") {
    TestFamily lln = lln_family();
    MeasureSpec b13 = MeasureSpec::bernoulli(Rational(1, 3));
    for (int m = 1; m <= 4; ++m) {
        Rational lambda_mass = truncated_mass(MeasureSpec::uniform(), lln, m, 16).exact();
        CHECK(lambda_mass <= lln.declared_mass_bound(m));
        // Exact binomial oracle: 2 sum_{j < n/4} C(n,j) 2^-n (symmetric tails).
        unsigned long n = 4 * static_cast<unsigned long>(m);
        Rational oracle(0);
        for (unsigned long j = 0; 4 * j < n; ++j) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), n, j);
            oracle += Rational(binom, BigInt(1)) * Rational::pow2(-static_cast<long>(n));
        }
        oracle = Rational(2) * oracle;
        CHECK(lambda_mass == oracle);
        Rational mass13 = truncated_mass(b13, lln, m, 16).exact();
        CHECK(mass13 >= Rational(1, 8));
    }
    Verdict v = pass_diagnostic(b13, lln, 4, 16, Rational(1, 8));
    CHECK(v.kind == Verdict::Kind::FailsAtLevel);
    // The fair coin passes the same family at the computed resolution.
    Verdict u = pass_diagnostic(MeasureSpec::uniform(), lln, 3, 12, Rational(1, 2));
    CHECK(u.kind != Verdict::Kind::FailsAtLevel);
}

TEST_CASE("pass diagnostics on the zeros test") {
    Verdict fails = pass_diagnostic(fixtures::dirac_zeros(), zeros_family(), 8, 20,
                                    Rational(1, 2));
    CHECK(fails.kind == Verdict::Kind::FailsAtLevel);
    CHECK(fails.final_mass.exact() == Rational(1));

    Verdict decays = pass_diagnostic(MeasureSpec::uniform(), zeros_family(), 20, 24,
                                     Rational(1, 2));
    CHECK(decays.kind == Verdict::Kind::MassDecayedBelow);
    CHECK(decays.final_mass.exact() == Rational::pow2(-20));
    CHECK(decays.max_level == 20);
    CHECK_THROWS_AS(pass_diagnostic(MeasureSpec::uniform(), zeros_family(), 4, 8,
                                    Rational(0)),
                    MalformedSpec);
}

TEST_CASE("countable-support fixture settles to the covered weight") {
    // mu = sum c_k delta_{Z_k} with distinct periodic atoms; the test family
    // covers only Z_0's prefixes, so the mass settles exactly at c_0.
    SequenceSpec z0 = SequenceSpec::periodic(BitString(), BitString("1"));
    std::vector<std::pair<Rational, MeasureSpec>> terms;
    terms.emplace_back(Rational(1, 2), MeasureSpec::dirac(z0));
    for (int k = 1; k <= 4; ++k)
        terms.emplace_back(Rational::pow2(-k - 1),
                           MeasureSpec::dirac(SequenceSpec::periodic(
                               BitString(), BitString::zeros(k).append(1))));
    terms.emplace_back(Rational::pow2(-5), fixtures::dirac_zeros());
    MeasureSpec mu = MeasureSpec::convex(std::move(terms));
    TestFamily family = dirac_prefix_family(z0);
    for (int m = 1; m <= 8; ++m)
        CHECK(truncated_mass(mu, family, m, 12).exact() == Rational(1, 2));
}

TEST_CASE("levin-schnorr family respects the Kraft bound") {
    const MachineLab& lab = default_lab();
    TestFamily ls = levin_schnorr_family(lab.prefix, 6);
    for (int b = 0; b <= 6; ++b) {
        auto strings = ls.generator(b, 128);
        // Antichain minimality: no enumerated string extends another.
        for (size_t i = 0; i < strings.size(); ++i)
            for (size_t j = 0; j < strings.size(); ++j)
                if (i != j) CHECK_FALSE(strings[i].is_prefix_of(strings[j]));
        Rational mass = truncated_mass(MeasureSpec::uniform(), ls, b, 128).exact();
        CHECK(mass <= Rational::pow2(-b));
        // The zeros sequence is compressible: its Dirac fails every level.
        CHECK(truncated_mass(fixtures::dirac_zeros(), ls, b, 128).exact() == Rational(1));
    }
    CHECK_THROWS_AS(levin_schnorr_family(lab.plain, 4), Error);
}

TEST_CASE("fixture serialization lists one line per (level, string)") {
    std::string text = serialize_truncations(zeros_family(), 3, 8);
    CHECK(text == "1\t0\n2\t00\n3\t000\n");
    // Levels beyond the cutoff produce no lines.
    CHECK(serialize_truncations(zeros_family(), 3, 2) == "1\t0\n2\t00\n");
}

TEST_CASE("strong Solovay validation") {
    CHECK_THROWS_AS(StrongSolovayTest({{3, {BitString("000")}}, {3, {BitString("111")}}}),
                    MalformedSpec);
    CHECK_THROWS_AS(StrongSolovayTest({{2, {BitString("00"), BitString("1")}}}),
                    MalformedSpec);
    // lambda mass 4 * 2^-2 = 1 > 1/2.
    CHECK_THROWS_AS(StrongSolovayTest({{2,
                                        {BitString("00"), BitString("01"), BitString("10"),
                                         BitString("11")}}}),
                    MalformedSpec);
}

TEST_CASE("dip report on the standard fixture") {
    const MachineLab& lab = default_lab();
    DipReport report = dip_report(standard_dip_measure(), standard_dip_fixture(), lab,
                                  Rational(1, 2));
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
        CHECK(row.block_mass.exact() == Rational(1, 2));
        CHECK(row.f == 1);  // dyadic bracket of 1/2
    }
    // Regression value for the committed machine: the dips hold with 3.5.
    CHECK(report.measured_constant <= 3.5);
    CHECK(report.sum_two_to_minus_f == Rational(149, 64));

    // Uniform against the same blocks: masses are the lambda masses and the
    // brackets are correspondingly deep.
    DipReport flat = dip_report(MeasureSpec::uniform(), standard_dip_fixture(), lab,
                                Rational(1, 2));
    for (const auto& row : flat.rows) {
        CHECK(row.block_mass.exact() == Rational::pow2(-static_cast<long>(row.n)));
        CHECK(row.f == static_cast<long>(row.n));
    }
}
