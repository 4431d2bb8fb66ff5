#pragma once

#include <cstdint>
#include <string>

#include "cantorlab/bitstring.hpp"
#include "cantorlab/rng.hpp"

namespace cantorlab {

// A concrete infinite bit sequence: bit i is a pure function of (spec, i).
//
// The pseudo-random variant is a documented stand-in for a Martin-Löf random
// sequence; it is reproducible by construction and makes no randomness claim.
class SequenceSpec {
  public:
    enum class Kind { EventuallyPeriodic, PrefixThenPseudoRandom };

    static SequenceSpec periodic(BitString preamble, BitString period) {
        if (period.empty()) throw MalformedSpec("empty period");
        SequenceSpec s;
        s.kind_ = Kind::EventuallyPeriodic;
        s.preamble_ = std::move(preamble);
        s.period_ = std::move(period);
        return s;
    }

    static SequenceSpec pseudo_random(BitString prefix, uint64_t seed) {
        SequenceSpec s;
        s.kind_ = Kind::PrefixThenPseudoRandom;
        s.preamble_ = std::move(prefix);
        s.seed_ = seed;
        return s;
    }

    Kind kind() const { return kind_; }
    const BitString& preamble() const { return preamble_; }
    const BitString& period() const { return period_; }
    uint64_t seed() const { return seed_; }

    int bit(uint64_t i) const {
        if (i < preamble_.size()) return preamble_.bit(i);
        if (kind_ == Kind::EventuallyPeriodic)
            return period_.bit((i - preamble_.size()) % period_.size());
        return rng::bit(seed_, i);
    }

    BitString prefix(size_t n) const {
        std::string out;
        out.reserve(n);
        for (size_t i = 0; i < n; ++i) out += bit(i) ? '1' : '0';
        return BitString(out);
    }

    // Whether sigma is an initial segment of this sequence.
    bool extends(const BitString& sigma) const {
        for (size_t i = 0; i < sigma.size(); ++i)
            if (bit(i) != sigma.bit(i)) return false;
        return true;
    }

    bool operator==(const SequenceSpec& o) const = default;

  private:
    Kind kind_ = Kind::EventuallyPeriodic;
    BitString preamble_;
    BitString period_ = BitString("0");
    uint64_t seed_ = 0;
};

}  // namespace cantorlab
