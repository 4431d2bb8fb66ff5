#pragma once

#include <map>

#include "cantorlab/measure.hpp"

namespace cantorlab {

// Exact finite-depth cylinder table. Entries with zero mass are not stored;
// a missing key of length <= depth reads as exact zero. Immutable once built.
class DyadicMeasure {
  public:
    DyadicMeasure(size_t depth, std::map<BitString, Interval> table)
        : depth_(depth), table_(std::move(table)) {}

    size_t depth() const { return depth_; }
    const std::map<BitString, Interval>& table() const { return table_; }

    Interval at(const BitString& sigma) const {
        if (sigma.size() > depth_) throw DepthExceeded("query below table depth");
        auto it = table_.find(sigma);
        return it == table_.end() ? Interval(Rational(0)) : it->second;
    }

    // table[eps] = 1, additivity, nonnegativity; throws on violation.
    void check_invariants() const;

  private:
    size_t depth_;
    std::map<BitString, Interval> table_;
};

// Tabulates eval on every cylinder of length <= depth. Interval entries
// must have width <= tail_tolerance (TailToleranceUnreachable otherwise).
DyadicMeasure to_table(const MeasureSpec& spec, size_t depth,
                       const Rational& tail_tolerance);

constexpr size_t kMaxTableDepth = 24;

}  // namespace cantorlab
