#include "cantorlab/inseg.hpp"

#include <algorithm>
#include <limits>

namespace cantorlab {

namespace {

const ComplexityTable& table_for(const MachineLab& lab, ComplexityKind kind) {
    return kind == ComplexityKind::K ? lab.prefix : lab.plain;
}

unsigned lookup(const MachineLab& lab, ComplexityKind kind, int n, const std::string& x) {
    switch (kind) {
        case ComplexityKind::C: return lab.plain.value(x);
        case ComplexityKind::K: return lab.prefix.value(x);
        case ComplexityKind::CCondN: return lab.plain.cond_value("n", n, x);
    }
    throw Error("unreachable complexity kind");
}

// Least-squares slope of (n, y_n); 0 for fewer than two points.
double ls_slope(const std::vector<std::pair<int, double>>& pts) {
    if (pts.size() < 2) return 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sx += x; sy += y; sxx += double(x) * x; sxy += double(x) * y;
    }
    double d = pts.size() * sxx - sx * sx;
    return d == 0 ? 0 : (pts.size() * sxy - sx * sy) / d;
}

}  // namespace

SupportSlice support_slice(const MeasureSpec& spec, int n) {
    SupportSlice slice;
    // Walk the cylinder tree pruning branches with exact zero mass.
    std::vector<BitString> frontier{BitString()};
    for (int depth = 0; depth < n; ++depth) {
        std::vector<BitString> next;
        for (const BitString& sigma : frontier)
            for (int b : {0, 1}) {
                BitString child = sigma.append(b);
                Interval mass = eval(spec, child);
                if (mass.hi().sign() > 0) next.push_back(child);
            }
        frontier = std::move(next);
    }
    Interval total(Rational(0));
    for (const BitString& x : frontier) {
        Interval mass = eval(spec, x);
        total += mass;
        slice.atoms.emplace_back(x, mass);
    }
    // Uncaptured mass (interval slack only; exact variants give a point 0).
    Rational lo = Rational(1) - total.hi();
    Rational hi = Rational(1) - total.lo();
    if (lo.sign() < 0) lo = Rational(0);
    if (hi.sign() < 0) hi = Rational(0);
    slice.tail = Interval(lo, hi);
    return slice;
}

Interval avg_complexity(const MeasureSpec& spec, int n, const MachineLab& lab,
                        ComplexityKind kind) {
    SupportSlice slice = support_slice(spec, n);
    Interval sum(Rational(0));
    for (const auto& [x, mass] : slice.atoms) {
        unsigned v = lookup(lab, kind, n, x.str());
        sum += Interval(Rational(static_cast<long>(v))) * mass;
    }
    if (slice.tail.hi().sign() > 0) {
        // Bracket the tail by the extreme table values at this length;
        // needs full coverage there.
        const ComplexityTable& t = table_for(lab, kind);
        if (t.full_coverage() < static_cast<size_t>(n))
            throw TailUncertifiable("tail bracket needs full coverage at n=" +
                                    std::to_string(n));
        unsigned vmin = ~0u, vmax = 0;
        for (const auto& [x, e] : t.values) {
            if (x.size() != static_cast<size_t>(n)) continue;
            unsigned v = kind == ComplexityKind::CCondN ? lab.plain.cond_value("n", n, x)
                                                        : e.value;
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        sum += slice.tail * Interval(Rational(static_cast<long>(vmin)),
                                     Rational(static_cast<long>(vmax)));
    }
    return sum;
}

AvgComplexitySeries avg_complexity_series(const MeasureSpec& spec, int max_n,
                                          const MachineLab& lab, ComplexityKind kind) {
    AvgComplexitySeries series{kind, {}};
    for (int n = 1; n <= max_n; ++n)
        series.points.emplace_back(n, avg_complexity(spec, n, lab, kind));
    return series;
}

InequalityReport inequality_suite(const std::vector<MeasureSpec>& specs, int max_n,
                                  const MachineLab& lab) {
    InequalityReport report;
    Rational worst(0);
    for (size_t i = 0; i < specs.size(); ++i) {
        for (int n = 1; n <= max_n; ++n) {
            Interval k_avg = avg_complexity(specs[i], n, lab, ComplexityKind::K);
            Interval c_avg = avg_complexity(specs[i], n, lab, ComplexityKind::C);
            Rational kn(static_cast<long>(lab.prefix.value_of_length(n)));
            Interval lhs = Interval(Rational(n)) - c_avg;
            Interval rhs = Interval(Rational(2)) *
                           (Interval(Rational(n) + kn) - k_avg);
            report.compare_rows.push_back({i, n, lhs, rhs});
            Rational defect = lhs.hi() - rhs.lo();
            if (defect > worst) worst = defect;
        }
    }
    report.compare_constant = worst;

    long upgrade_worst = 0;
    for (int n = 1; n <= max_n; ++n) {
        long row_worst = std::numeric_limits<long>::min();
        unsigned cn = lab.plain.value_of_length(n);
        for (const BitString& x : BitString::all_of_length(n)) {
            long lhs = lab.prefix.cond_value("(n,C(n))", n, x.str());
            long rhs = 2 * (static_cast<long>(lab.plain.value(x.str())) -
                            static_cast<long>(cn));
            row_worst = std::max(row_worst, lhs - rhs);
        }
        report.upgrade_rows.push_back({n, row_worst});
        upgrade_worst = std::max(upgrade_worst, row_worst);
    }
    report.upgrade_constant = upgrade_worst;
    return report;
}

DeficiencyProfile growth_and_triviality_profile(const MeasureSpec& spec, int max_n,
                                                const MachineLab& lab) {
    DeficiencyProfile profile;
    std::vector<std::pair<int, double>> triv_pts, growth_pts;
    for (int n = 1; n <= max_n; ++n) {
        Interval k_avg = avg_complexity(spec, n, lab, ComplexityKind::K);
        Interval c_avg = avg_complexity(spec, n, lab, ComplexityKind::C);
        Rational kn(static_cast<long>(lab.prefix.value_of_length(n)));
        Rational cn(static_cast<long>(lab.plain.value_of_length(n)));
        DeficiencyProfile::Row row{
            n,
            k_avg - Interval(kn),
            c_avg - Interval(cn),
            Interval(Rational(n) + kn) - k_avg,
            Interval(Rational(n)) - c_avg,
        };
        triv_pts.emplace_back(n, row.k_trivial_deficit.to_double());
        growth_pts.emplace_back(n, row.k_growth_deficit.to_double());
        profile.rows.push_back(std::move(row));
    }
    profile.triviality_slope = ls_slope(triv_pts);
    profile.growth_slope = ls_slope(growth_pts);
    profile.triviality_trend = profile.triviality_slope < kTrivialitySlopeMax;
    profile.maximal_growth_trend = profile.growth_slope < kGrowthSlopeMax;
    return profile;
}

DimensionProfile dimension_profile(const MeasureSpec& spec, int max_n, const MachineLab& lab) {
    DimensionProfile profile;
    for (int n = 1; n <= max_n; ++n) {
        Interval c_avg = avg_complexity(spec, n, lab, ComplexityKind::C);
        Interval k_avg = avg_complexity(spec, n, lab, ComplexityKind::K);
        Interval nn{Rational(n)};
        profile.rows.push_back({n, c_avg / nn, k_avg / nn});
    }
    return profile;
}

}  // namespace cantorlab
