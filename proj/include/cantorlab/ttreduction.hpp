#pragma once

#include <functional>
#include <string>

#include "cantorlab/bitstring.hpp"

namespace cantorlab {

// Total truth-table reduction on Cantor space: a strictly increasing
// computable use bound f, and for each output length n a total map from
// strings of length f(n) to strings of length n. Prefix consistency
// (table_m(y restricted to f(m)) is a prefix of table_n(y) for m <= n) is
// required and verified at evaluation depth.
struct TTReduction {
    std::string name;
    std::function<size_t(size_t)> use;
    std::function<BitString(const BitString&, size_t)> map;

    BitString apply(const BitString& y, size_t n) const {
        BitString out = map(y, n);
        if (out.size() != n) throw InconsistentReduction(name + ": wrong output length");
        return out;
    }

    // Named built-ins usable from measure-spec files.
    static TTReduction identity();
    static TTReduction bit_flip();
    static TTReduction drop_first();
    static TTReduction by_name(const std::string& name);
};

}  // namespace cantorlab
