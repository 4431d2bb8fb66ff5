#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "cantorlab/bitstring.hpp"
#include "cantorlab/interval.hpp"
#include "cantorlab/sequence.hpp"
#include "cantorlab/ttreduction.hpp"

namespace cantorlab {

// Symbolic computable probability measure on Cantor space. Immutable value
// type (shared immutable nodes); eval is a pure function of (spec, sigma).
//
// eval returns an Interval: a point interval is an exact rational mass;
// genuine intervals certify truncated infinite sums (the renewal process'
// irrational constants). Additivity mass[s] = mass[s0] + mass[s1] holds
// exactly for point masses and as interval overlap otherwise.
class MeasureSpec {
  public:
    enum class Kind {
        Uniform,
        Bernoulli,
        Markov,
        Dirac,
        Convex,
        Localize,
        Product,
        Pushforward,
        SigmaMixture,
        SlowGrowth,
        TrivialMixture,
        Renewal,
    };

    // p is the probability of bit 0.
    static MeasureSpec uniform();
    static MeasureSpec bernoulli(Rational p);
    static MeasureSpec markov(std::array<Rational, 2> initial,
                              std::array<std::array<Rational, 2>, 2> transition);
    static MeasureSpec dirac(SequenceSpec seq);
    static MeasureSpec convex(std::vector<std::pair<Rational, MeasureSpec>> terms);
    static MeasureSpec localize(MeasureSpec child, BitString at);
    static MeasureSpec product(MeasureSpec left, MeasureSpec right);
    static MeasureSpec pushforward(TTReduction red, MeasureSpec source);
    // mu = 2 sum_{r>0} 3^-r lambda_{sigma(r)} with sigma(r) = 0^{r-1} 1.
    static MeasureSpec sigma_mixture();
    // sum_k c_k delta_{Z_k}, c_k = 1/((k+1)(k+2)), 0^{n_k} prefix of Z_k,
    // n_k = 2^{k+4}; Z_k pseudo-random beyond the zero block (stand-in).
    static MeasureSpec slow_growth(uint64_t seed);
    // sum_i 2^{-i-1} delta_{(0^i 1)^inf}; exactly evaluable at any depth.
    static MeasureSpec trivial_mixture();
    // Stationary binary renewal process with gap law p_k = 2^{-k^4}/c.
    static MeasureSpec renewal(int truncation);

    Kind kind() const;
    // Accessors for the variant payloads (throw on kind mismatch).
    const Rational& bernoulli_p() const;
    const std::array<Rational, 2>& markov_initial() const;
    const std::array<std::array<Rational, 2>, 2>& markov_transition() const;
    const SequenceSpec& dirac_seq() const;
    const std::vector<std::pair<Rational, MeasureSpec>>& convex_terms() const;
    const MeasureSpec& localize_child() const;
    const BitString& localize_at() const;
    const MeasureSpec& product_left() const;
    const MeasureSpec& product_right() const;
    const TTReduction& pushforward_reduction() const;
    const MeasureSpec& pushforward_source() const;
    uint64_t slow_growth_seed() const;
    int renewal_truncation() const;

    bool operator==(const MeasureSpec& o) const;

    struct Node;

  private:
    explicit MeasureSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
    friend Interval eval(const MeasureSpec&, const BitString&);
};

// mu[sigma], exact where possible, certified interval otherwise.
Interval eval(const MeasureSpec& spec, const BitString& sigma);

// The SlowGrowth family parameters (Example-style instantiation).
Rational slow_growth_weight(int k);       // c_k = 1/((k+1)(k+2))
uint64_t slow_growth_block(int k);        // n_k = 2^{k+4}
SequenceSpec slow_growth_atom(uint64_t seed, int k);

}  // namespace cantorlab
