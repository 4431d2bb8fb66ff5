#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantorlab/errors.hpp"

namespace cantorlab {

// Finite bit string over {0,1}. Stored as '0'/'1' characters; the empty
// string is permitted everywhere. std::string's operator< gives the
// lexicographic-then-length order (a proper prefix sorts before its
// extensions), which is the canonical order for deterministic enumeration.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::string bits) : s_(std::move(bits)) {
        for (char c : s_)
            if (c != '0' && c != '1') throw ParseError("bit string with non-binary char");
    }

    static BitString zeros(size_t n) { return BitString(std::string(n, '0')); }
    static BitString ones(size_t n) { return BitString(std::string(n, '1')); }

    size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int bit(size_t i) const { return s_[i] == '1' ? 1 : 0; }

    BitString append(int b) const { return BitString(s_ + (b ? '1' : '0')); }
    BitString concat(const BitString& o) const { return BitString(s_ + o.s_); }
    BitString prefix(size_t n) const { return BitString(s_.substr(0, n)); }
    BitString suffix_from(size_t i) const { return BitString(s_.substr(i)); }

    bool is_prefix_of(const BitString& o) const {
        return s_.size() <= o.s_.size() && o.s_.compare(0, s_.size(), s_) == 0;
    }
    bool comparable(const BitString& o) const {
        return is_prefix_of(o) || o.is_prefix_of(*this);
    }

    size_t count_zeros() const;
    bool all_zeros() const { return s_.find('1') == std::string::npos; }

    // Bits at even positions (0-based) and at odd positions.
    BitString even_bits() const;
    BitString odd_bits() const;

    // Value of the string read as a binary numeral, MSB first; empty = 0.
    // Requires size() <= 63.
    uint64_t numeral() const;

    // Distinct keys for distinct strings of size() <= 62 (leading-1 marker).
    uint64_t path_key() const;

    // All strings of length n in lexicographic order.
    static std::vector<BitString> all_of_length(size_t n);

    // Interleave: even output positions from a, odd from b.
    // |a| == |b| or |a| == |b| + 1.
    static BitString interleave(const BitString& a, const BitString& b);

    bool operator==(const BitString& o) const = default;
    bool operator<(const BitString& o) const { return s_ < o.s_; }

    const std::string& str() const { return s_; }

  private:
    std::string s_;
};

}  // namespace cantorlab
