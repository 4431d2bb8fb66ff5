#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorlab/inseg.hpp"
#include "fixtures.hpp"

using namespace cantorlab;

TEST_CASE("dirac averages are plain lookups") {
    const MachineLab& lab = default_lab();
    for (const SequenceSpec& z :
         {SequenceSpec::periodic(BitString(), BitString("0")),
          SequenceSpec::periodic(BitString("1"), BitString("01")),
          SequenceSpec::pseudo_random(BitString(), 99)}) {
        MeasureSpec d = MeasureSpec::dirac(z);
        for (int n = 1; n <= 8; ++n) {
            Interval avg = avg_complexity(d, n, lab, ComplexityKind::K);
            CHECK(avg.exact() ==
                  Rational(static_cast<long>(lab.prefix.value(z.prefix(n).str()))));
        }
    }
}

TEST_CASE("convex linearity of averages") {
    const MachineLab& lab = default_lab();
    MeasureSpec a = fixtures::dirac_zeros();
    MeasureSpec b = MeasureSpec::dirac(SequenceSpec::periodic(BitString(), BitString("1")));
    MeasureSpec mix = MeasureSpec::convex({{Rational(1, 2), a}, {Rational(1, 2), b}});
    for (int n = 1; n <= 8; ++n) {
        Interval lhs = avg_complexity(mix, n, lab, ComplexityKind::K);
        Interval rhs = Interval(Rational(1, 2)) * avg_complexity(a, n, lab, ComplexityKind::K) +
                       Interval(Rational(1, 2)) * avg_complexity(b, n, lab, ComplexityKind::K);
        CHECK(lhs.exact() == rhs.exact());
    }
}

TEST_CASE("uniform average equals the direct table sum") {
    const MachineLab& lab = default_lab();
    for (int n = 1; n <= 8; ++n) {
        Rational direct(0);
        for (const BitString& x : BitString::all_of_length(n))
            direct += Rational(static_cast<long>(lab.prefix.value(x.str())));
        direct = direct * Rational::pow2(-n);
        CHECK(avg_complexity(MeasureSpec::uniform(), n, lab, ComplexityKind::K).exact() ==
              direct);
    }
}

TEST_CASE("averages sit between the extreme values at each length") {
    const MachineLab& lab = default_lab();
    for (const MeasureSpec& spec : fixtures::suite()) {
        for (int n = 2; n <= 8; n += 3) {
            unsigned vmin = ~0u, vmax = 0;
            for (const BitString& x : BitString::all_of_length(n)) {
                unsigned v = lab.prefix.value(x.str());
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }
            Interval avg = avg_complexity(spec, n, lab, ComplexityKind::K);
            CHECK(avg.lo() >= Rational(static_cast<long>(vmin)));
            CHECK(avg.hi() <= Rational(static_cast<long>(vmax)));
        }
    }
}

TEST_CASE("coverage gaps are reported") {
    const MachineLab& lab = default_lab();
    CHECK_THROWS_AS(avg_complexity(MeasureSpec::uniform(), 13, lab, ComplexityKind::K),
                    CoverageGap);
}

TEST_CASE("interval measures get bracketed averages") {
    const MachineLab& lab = default_lab();
    // The renewal law's masses are certified intervals; the average comes
    // back as a narrow interval between the extreme table values.
    Interval avg = avg_complexity(MeasureSpec::renewal(3), 6, lab, ComplexityKind::K);
    CHECK(!avg.is_point());
    CHECK(avg.width() < Rational(1, 1000000));
    unsigned vmin = ~0u, vmax = 0;
    for (const BitString& x : BitString::all_of_length(6)) {
        unsigned v = lab.prefix.value(x.str());
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    // The true value obeys the extreme bounds; the certified endpoints may
    // poke out by at most the interval slack.
    Rational slack = avg.width();
    CHECK(avg.lo() >= Rational(static_cast<long>(vmin)) - slack);
    CHECK(avg.hi() <= Rational(static_cast<long>(vmax)) + slack);
}

TEST_CASE("deficiency profiles and trend flags") {
    const MachineLab& lab = default_lab();

    auto uniform = growth_and_triviality_profile(MeasureSpec::uniform(), 8, lab);
    CHECK(uniform.maximal_growth_trend);
    CHECK_FALSE(uniform.triviality_trend);

    auto zeros = growth_and_triviality_profile(fixtures::dirac_zeros(), 8, lab);
    CHECK(zeros.triviality_trend);
    CHECK_FALSE(zeros.maximal_growth_trend);
    // The all-zeros Dirac is trivial on the nose: K(mu|n) - K(n) = 0.
    for (const auto& row : zeros.rows)
        CHECK(row.k_trivial_deficit.exact() == Rational(0));

    auto tm = growth_and_triviality_profile(MeasureSpec::trivial_mixture(), 8, lab);
    CHECK(tm.triviality_trend);
    CHECK_FALSE(tm.maximal_growth_trend);

    auto sm = growth_and_triviality_profile(MeasureSpec::sigma_mixture(), 8, lab);
    CHECK(sm.maximal_growth_trend);
    CHECK_FALSE(sm.triviality_trend);

    // Columns are algebraically consistent:
    // (K(mu|n) - K(n)) + ((n + K(n)) - K(mu|n)) = n.
    for (const auto& row : uniform.rows) {
        Interval sum = row.k_trivial_deficit + row.k_growth_deficit;
        CHECK(sum.exact() == Rational(row.n));
    }
}

TEST_CASE("inequality suite constants are stable") {
    const MachineLab& lab = default_lab();
    auto report = inequality_suite(fixtures::suite(), 8, lab);
    // Regression values for the committed machine.
    CHECK(report.compare_constant == Rational(0));
    CHECK(report.upgrade_constant == 11);
    for (const auto& row : report.compare_rows)
        CHECK(row.lhs.hi() <= row.rhs.lo() + report.compare_constant);
}

TEST_CASE("dimension profile ratios") {
    const MachineLab& lab = default_lab();
    auto dim = dimension_profile(MeasureSpec::uniform(), 8, lab);
    for (const auto& row : dim.rows) {
        // C(lambda|n)/n within [1 - 3/n, 1 + 3/n] for the machine constant 3.
        Rational lo = Rational(1) - Rational(3) / Rational(row.n);
        Rational hi = Rational(1) + Rational(3) / Rational(row.n);
        CHECK(row.c_ratio.exact() >= lo);
        CHECK(row.c_ratio.exact() <= hi);
    }

    // Long zero runs have small normalized complexity (H = 0 support).
    MeasureSpec d0 = fixtures::dirac_zeros();
    Interval k64 = avg_complexity(d0, 64, lab, ComplexityKind::K);
    CHECK(k64.exact() / Rational(64) < Rational(3, 10));

    // Honesty case: a sampled-path Dirac at n = 8 is far from the 0.81
    // entropy target on the toy machine; only the machine bounds hold.
    MeasureSpec sampled = MeasureSpec::dirac(
        SequenceSpec::pseudo_random(BitString("10110100"), 7));
    auto dim8 = dimension_profile(sampled, 8, lab);
    Interval ratio = dim8.rows.back().k_ratio;
    CHECK(ratio.exact() >= Rational(static_cast<long>(lab.prefix.value_of_length(8))) /
                               Rational(8));
    CHECK(ratio.exact() <= Rational(8 + 2 * 3 + 4) / Rational(8));
}

TEST_CASE("slow growth is trivial below its first block") {
    const MachineLab& lab = default_lab();
    // All atoms agree with the zero sequence for n <= 16, so the average
    // complexity is exactly K(0^n) there.
    auto p = growth_and_triviality_profile(MeasureSpec::slow_growth(7), 8, lab);
    for (const auto& row : p.rows) CHECK(row.k_trivial_deficit.exact() == Rational(0));
    CHECK(p.triviality_trend);
}

TEST_CASE("conditional averages feed the dip machinery") {
    const MachineLab& lab = default_lab();
    // C(mu|n given n) for the zeros Dirac is the flat aux-copy cost.
    for (int n = 3; n <= 8; ++n) {
        Interval avg = avg_complexity(fixtures::dirac_zeros(), n, lab, ComplexityKind::CCondN);
        CHECK(avg.exact() == Rational(6));
    }
}
