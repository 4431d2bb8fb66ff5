#include "cantorlab/dyadic.hpp"

namespace cantorlab {

void DyadicMeasure::check_invariants() const {
    Interval one(Rational(1));
    if (!at(BitString()).overlaps(one)) throw Error("table[eps] != 1");
    for (const auto& [sigma, mass] : table_) {
        if (mass.lo().sign() < 0) throw Error("negative mass at " + sigma.str());
        if (sigma.size() < depth_) {
            Interval sum = at(sigma.append(0)) + at(sigma.append(1));
            if (mass.is_point() && sum.is_point()) {
                if (!(mass == sum)) throw Error("additivity fails at " + sigma.str());
            } else if (!mass.overlaps(sum)) {
                throw Error("additivity (interval) fails at " + sigma.str());
            }
        }
    }
}

DyadicMeasure to_table(const MeasureSpec& spec, size_t depth,
                       const Rational& tail_tolerance) {
    if (depth > kMaxTableDepth) throw DepthExceeded("table depth above maximum");
    if (tail_tolerance.sign() <= 0) throw MalformedSpec("tail tolerance must be positive");
    std::map<BitString, Interval> table;
    // Walk the cylinder tree, pruning exact-zero branches.
    std::vector<BitString> frontier{BitString()};
    while (!frontier.empty()) {
        std::vector<BitString> next;
        for (const BitString& sigma : frontier) {
            Interval mass = eval(spec, sigma);
            if (mass.is_point() && mass.lo().is_zero()) continue;
            if (mass.width() > tail_tolerance)
                throw TailToleranceUnreachable("width " + mass.width().str() + " at " +
                                               sigma.str());
            table.emplace(sigma, mass);
            if (sigma.size() < depth) {
                next.push_back(sigma.append(0));
                next.push_back(sigma.append(1));
            }
        }
        frontier = std::move(next);
    }
    return DyadicMeasure(depth, std::move(table));
}

}  // namespace cantorlab
