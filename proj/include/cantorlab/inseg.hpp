#pragma once

#include <vector>

#include "cantorlab/complexity.hpp"
#include "cantorlab/measure.hpp"

namespace cantorlab {

enum class ComplexityKind { C, K, CCondN };

struct AvgComplexitySeries {
    ComplexityKind kind;
    std::vector<std::pair<int, Interval>> points;
};

// mu-average of the complexity over strings of length n:
// sum_{|x|=n} value(x) mu[x]. Mass not captured by the enumerated support
// (possible only for interval-valued measures) contributes
// [tail * min value at n, tail * max value at n].
Interval avg_complexity(const MeasureSpec& spec, int n, const MachineLab& lab,
                        ComplexityKind kind);

AvgComplexitySeries avg_complexity_series(const MeasureSpec& spec, int max_n,
                                          const MachineLab& lab, ComplexityKind kind);

// Measured constants for the additive inequalities relating C and K.
struct InequalityReport {
    struct CompareRow {
        size_t spec_index;
        int n;
        Interval lhs;  // n - C(mu|n)
        Interval rhs;  // 2 (n + K(n) - K(mu|n))
    };
    std::vector<CompareRow> compare_rows;
    // Smallest c1 >= 0 with lhs <= rhs + c1 across the suite (hi endpoints).
    Rational compare_constant;

    struct UpgradeRow {
        int n;
        long max_deficit;  // max over |x| = n of K(x|n,C(n)) - 2 (C(x) - C(n))
    };
    std::vector<UpgradeRow> upgrade_rows;
    long upgrade_constant = 0;
};
InequalityReport inequality_suite(const std::vector<MeasureSpec>& specs, int max_n,
                                  const MachineLab& lab);

// Deficiency columns and desk-scale trend flags. "Bounded over the computed
// range" is operationalized as the least-squares slope of the deficit staying
// under a pinned threshold (asymmetric; see the constants below).
struct DeficiencyProfile {
    struct Row {
        int n;
        Interval k_trivial_deficit;   // K(mu|n) - K(n)
        Interval c_trivial_deficit;   // C(mu|n) - C(n)
        Interval k_growth_deficit;    // (n + K(n)) - K(mu|n)
        Interval c_growth_deficit;    // n - C(mu|n)
    };
    std::vector<Row> rows;
    double triviality_slope = 0;
    double growth_slope = 0;
    bool triviality_trend = false;
    bool maximal_growth_trend = false;
};

constexpr double kTrivialitySlopeMax = 0.7;
constexpr double kGrowthSlopeMax = 0.3;

DeficiencyProfile growth_and_triviality_profile(const MeasureSpec& spec, int max_n,
                                                const MachineLab& lab);

// Normalized series C(mu|n)/n and K(mu|n)/n (dimension diagnostics).
struct DimensionProfile {
    struct Row {
        int n;
        Interval c_ratio;
        Interval k_ratio;
    };
    std::vector<Row> rows;
};
DimensionProfile dimension_profile(const MeasureSpec& spec, int max_n, const MachineLab& lab);

// Support of the measure at length n: pairs (x, mass) with positive upper
// mass, plus the uncaptured tail (zero for exactly evaluable variants).
struct SupportSlice {
    std::vector<std::pair<BitString, Interval>> atoms;
    Interval tail;
};
SupportSlice support_slice(const MeasureSpec& spec, int n);

}  // namespace cantorlab
