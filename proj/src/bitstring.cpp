#include "cantorlab/bitstring.hpp"

#include <algorithm>

namespace cantorlab {

size_t BitString::count_zeros() const {
    return static_cast<size_t>(std::count(s_.begin(), s_.end(), '0'));
}

BitString BitString::even_bits() const {
    std::string out;
    for (size_t i = 0; i < s_.size(); i += 2) out += s_[i];
    return BitString(out);
}

BitString BitString::odd_bits() const {
    std::string out;
    for (size_t i = 1; i < s_.size(); i += 2) out += s_[i];
    return BitString(out);
}

uint64_t BitString::numeral() const {
    if (s_.size() > 63) throw Error("numeral overflow");
    uint64_t v = 0;
    for (char c : s_) v = (v << 1) | (c == '1' ? 1u : 0u);
    return v;
}

uint64_t BitString::path_key() const {
    if (s_.size() > 62) throw Error("path key overflow");
    uint64_t v = 1;
    for (char c : s_) v = (v << 1) | (c == '1' ? 1u : 0u);
    return v;
}

std::vector<BitString> BitString::all_of_length(size_t n) {
    if (n > 24) throw DepthExceeded("all_of_length beyond depth ceiling");
    std::vector<BitString> out;
    out.reserve(size_t{1} << n);
    std::string s(n, '0');
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
        for (size_t i = 0; i < n; ++i) s[i] = (v >> (n - 1 - i)) & 1 ? '1' : '0';
        out.emplace_back(s);
    }
    return out;
}

BitString BitString::interleave(const BitString& a, const BitString& b) {
    if (a.size() != b.size() && a.size() != b.size() + 1)
        throw Error("interleave length mismatch");
    std::string out;
    out.reserve(a.size() + b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out += a.str()[i];
        if (i < b.size()) out += b.str()[i];
    }
    return BitString(out);
}

}  // namespace cantorlab
