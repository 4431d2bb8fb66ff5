#include "cantorlab/mltest.hpp"

#include <algorithm>

#include "cantorlab/inseg.hpp"

namespace cantorlab {

TestFamily zeros_family() {
    TestFamily f;
    f.kind = TestFamily::Kind::ML;
    f.name = "zeros";
    f.max_level = 24;
    f.generator = [](int m, size_t cutoff) {
        std::vector<BitString> out;
        if (static_cast<size_t>(m) <= cutoff) out.push_back(BitString::zeros(m));
        return out;
    };
    f.declared_mass_bound = [](int m) { return Rational::pow2(-m); };
    return f;
}

TestFamily lln_family() {
    TestFamily f;
    f.kind = TestFamily::Kind::ML;
    f.name = "lln";
    f.max_level = 5;  // level m enumerates 2^{4m} strings
    f.generator = [](int m, size_t cutoff) {
        std::vector<BitString> out;
        size_t n = 4 * static_cast<size_t>(m);
        if (n > cutoff || n > 24) return out;
        for (const BitString& x : BitString::all_of_length(n)) {
            long dev = 4 * static_cast<long>(x.count_zeros()) - 2 * static_cast<long>(n);
            if (dev > static_cast<long>(n) || dev < -static_cast<long>(n))
                out.push_back(x);  // |zeros - n/2| > n/4
        }
        return out;
    };
    f.declared_mass_bound = [](int m) { return Rational::pow2(-m); };
    return f;
}

TestFamily dirac_prefix_family(SequenceSpec seq) {
    TestFamily f;
    f.kind = TestFamily::Kind::ML;
    f.name = "dirac-prefix";
    f.max_level = 24;
    f.generator = [seq](int m, size_t cutoff) {
        std::vector<BitString> out;
        if (static_cast<size_t>(m) <= cutoff) out.push_back(seq.prefix(m));
        return out;
    };
    f.declared_mass_bound = [](int m) { return Rational::pow2(-m); };
    return f;
}

TestFamily levin_schnorr_family(const ComplexityTable& prefix_table, int max_level) {
    if (prefix_table.kind != MachineKind::PrefixFree)
        throw Error("levin_schnorr_family needs a prefix-free table");
    auto entries = prefix_table.sorted_entries();
    TestFamily f;
    f.kind = TestFamily::Kind::ML;
    f.name = "levin-schnorr";
    f.max_level = max_level;
    f.generator = [entries](int b, size_t cutoff) {
        std::vector<BitString> kept;
        Rational mass(0);
        for (const auto& [x, e] : entries) {  // sorted by length then lex
            if (x.size() > cutoff) continue;
            if (static_cast<long>(e.value) >= static_cast<long>(x.size()) - b) continue;
            BitString candidate(x);
            bool covered = false;
            for (const BitString& p : kept)
                if (p.is_prefix_of(candidate)) { covered = true; break; }
            if (covered) continue;
            kept.push_back(candidate);
            mass += Rational::pow2(-static_cast<long>(candidate.size()));
        }
        // Kraft: sum over minimal x with K(x) < |x|-b of 2^-|x| < 2^-b.
        if (mass > Rational::pow2(-b))
            throw MassBoundViolated("Levin-Schnorr level " + std::to_string(b));
        std::sort(kept.begin(), kept.end());
        return kept;
    };
    f.declared_mass_bound = [](int b) { return Rational::pow2(-b); };
    return f;
}

Interval truncated_mass(const MeasureSpec& spec, const TestFamily& test, int m, size_t n) {
    std::vector<BitString> strings = test.generator(m, n);
    std::sort(strings.begin(), strings.end());
    // In lexicographic order every extension follows its prefix immediately;
    // keep only the minimal cylinders.
    std::vector<BitString> minimal;
    for (const BitString& x : strings) {
        if (!minimal.empty() && minimal.back().is_prefix_of(x)) continue;
        minimal.push_back(x);
    }
    Interval total(Rational(0));
    for (const BitString& x : minimal) total += eval(spec, x);
    return total;
}

std::string serialize_truncations(const TestFamily& test, int max_level, size_t cutoff) {
    std::string out;
    int top = std::min(max_level, test.max_level > 0 ? test.max_level : max_level);
    for (int m = 1; m <= top; ++m)
        for (const BitString& x : test.generator(m, cutoff)) {
            out += std::to_string(m);
            out += '\t';
            out += x.empty() ? "-" : x.str();
            out += '\n';
        }
    return out;
}

Verdict pass_diagnostic(const MeasureSpec& spec, const TestFamily& test, int max_level,
                        size_t cutoff, const Rational& delta) {
    if (delta.sign() <= 0) throw MalformedSpec("delta must be positive");
    Verdict v;
    v.delta = delta;
    v.max_level = std::min(max_level, test.max_level > 0 ? test.max_level : max_level);
    v.cutoff = cutoff;
    bool all_at_least_delta = true;
    for (int m = 1; m <= v.max_level; ++m) {
        Interval mass = truncated_mass(spec, test, m, cutoff);
        if (!(mass.lo() >= delta)) all_at_least_delta = false;
        v.level_masses.push_back(mass);
    }
    v.final_mass = v.level_masses.empty() ? Interval(Rational(0)) : v.level_masses.back();
    if (all_at_least_delta && !v.level_masses.empty()) {
        v.kind = Verdict::Kind::FailsAtLevel;
    } else if (v.final_mass.hi() <= Rational::pow2(-v.max_level)) {
        v.kind = Verdict::Kind::MassDecayedBelow;
    } else {
        v.kind = Verdict::Kind::Inconclusive;
    }
    return v;
}

StrongSolovayTest::StrongSolovayTest(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    Rational lambda_total(0);
    size_t prev_n = 0;
    bool first = true;
    for (const Block& block : blocks_) {
        if (!first && block.n <= prev_n)
            throw MalformedSpec("strong Solovay block lengths must strictly increase");
        first = false;
        prev_n = block.n;
        for (const BitString& x : block.strings) {
            if (x.size() != block.n)
                throw MalformedSpec("strong Solovay block has mixed lengths");
            lambda_total += Rational::pow2(-static_cast<long>(block.n));
        }
    }
    if (lambda_total > Rational(1, 2))
        throw MalformedSpec("strong Solovay test with lambda mass above 1/2");
}

StrongSolovayTest standard_dip_fixture() {
    std::vector<StrongSolovayTest::Block> blocks;
    for (size_t n : {3u, 5u, 7u}) blocks.push_back({n, {BitString::zeros(n)}});
    return StrongSolovayTest(std::move(blocks));
}

MeasureSpec standard_dip_measure() {
    return MeasureSpec::convex(
        {{Rational(1, 2),
          MeasureSpec::dirac(SequenceSpec::periodic(BitString(), BitString("0")))},
         {Rational(1, 2),
          MeasureSpec::dirac(SequenceSpec::periodic(BitString(), BitString("1")))}});
}

DipReport dip_report(const MeasureSpec& spec, const StrongSolovayTest& sst,
                     const MachineLab& lab, const Rational& delta) {
    DipReport report;
    double worst = -1e300;
    Rational sum(0);
    size_t max_n = sst.blocks().empty() ? 0 : sst.blocks().back().n;
    size_t block_index = 0;
    for (size_t n = 1; n <= max_n; ++n) {
        if (block_index < sst.blocks().size() && sst.blocks()[block_index].n == n) {
            const auto& block = sst.blocks()[block_index++];
            Interval mass(Rational(0));
            for (const BitString& x : block.strings) mass += eval(spec, x);
            // Dyadic bracket: smallest f >= 0 with mass <= 2^-f (and then
            // mass > 2^-f-1 when the mass is a point).
            long f = 0;
            if (mass.hi().sign() > 0)
                while (mass.hi() <= Rational::pow2(-f - 1)) ++f;
            sum += Rational::pow2(-f);
            Interval cond = avg_complexity(spec, static_cast<int>(n), lab,
                                           ComplexityKind::CCondN);
            double bound = static_cast<double>(n) -
                           delta.to_double() * static_cast<double>(f);
            worst = std::max(worst, cond.hi().to_double() - bound);
            report.rows.push_back({block_index, n, mass, f, cond, bound});
        } else {
            sum += Rational::pow2(-static_cast<long>(n));  // f(m) = m off-blocks
        }
    }
    report.measured_constant = report.rows.empty() ? 0 : worst;
    report.sum_two_to_minus_f = sum;
    return report;
}

}  // namespace cantorlab
