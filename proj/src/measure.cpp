#include "cantorlab/measure.hpp"

#include <array>
#include <map>
#include <mutex>

#include "cantorlab/renewal.hpp"

namespace cantorlab {

TTReduction TTReduction::identity() {
    return {"identity", [](size_t n) { return n; },
            [](const BitString& y, size_t) { return y; }};
}

TTReduction TTReduction::bit_flip() {
    return {"bit-flip", [](size_t n) { return n; },
            [](const BitString& y, size_t) {
                std::string s = y.str();
                for (char& c : s) c = (c == '0') ? '1' : '0';
                return BitString(s);
            }};
}

TTReduction TTReduction::drop_first() {
    return {"drop-first", [](size_t n) { return n + 1; },
            [](const BitString& y, size_t) { return y.suffix_from(1); }};
}

TTReduction TTReduction::by_name(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "bit-flip") return bit_flip();
    if (name == "drop-first") return drop_first();
    throw ParseError("unknown reduction: " + name);
}

struct MeasureSpec::Node {
    Kind kind;
    Rational p;
    std::array<Rational, 2> initial;
    std::array<std::array<Rational, 2>, 2> transition;
    SequenceSpec seq = SequenceSpec::periodic(BitString(), BitString("0"));
    std::vector<std::pair<Rational, MeasureSpec>> terms;
    std::vector<MeasureSpec> children;  // localize/product/pushforward
    BitString at;
    TTReduction red;
    uint64_t seed = 0;
    int truncation = 4;
};

namespace {

using Node = MeasureSpec::Node;

MeasureSpec wrap(std::shared_ptr<const Node> n);

}  // namespace

// The factory functions validate invariants once; eval trusts them.

MeasureSpec MeasureSpec::uniform() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Uniform;
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::bernoulli(Rational p) {
    if (p.sign() < 0 || p > Rational(1)) throw MalformedSpec("bernoulli p outside [0,1]");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bernoulli;
    n->p = std::move(p);
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::markov(std::array<Rational, 2> initial,
                                std::array<std::array<Rational, 2>, 2> transition) {
    if (initial[0] + initial[1] != Rational(1))
        throw MalformedSpec("markov initial distribution must sum to 1");
    for (int r = 0; r < 2; ++r) {
        if (transition[r][0] + transition[r][1] != Rational(1))
            throw MalformedSpec("markov transition row must sum to 1");
        for (int c = 0; c < 2; ++c)
            if (transition[r][c].sign() < 0) throw MalformedSpec("negative markov entry");
    }
    if (initial[0].sign() < 0 || initial[1].sign() < 0)
        throw MalformedSpec("negative markov initial entry");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Markov;
    n->initial = std::move(initial);
    n->transition = std::move(transition);
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::dirac(SequenceSpec seq) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Dirac;
    n->seq = std::move(seq);
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::convex(std::vector<std::pair<Rational, MeasureSpec>> terms) {
    if (terms.empty()) throw MalformedSpec("empty convex combination");
    Rational total(0);
    for (const auto& [w, m] : terms) {
        if (w.sign() <= 0) throw MalformedSpec("convex weight must be positive");
        total += w;
    }
    if (total != Rational(1)) throw MalformedSpec("convex weights must sum to 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Convex;
    n->terms = std::move(terms);
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::localize(MeasureSpec child, BitString at) {
    Interval denom = eval(child, at);
    if (!denom.strictly_positive())
        throw LocalizeOnNullCylinder("localize at " + at.str());
    auto n = std::make_shared<Node>();
    n->kind = Kind::Localize;
    n->children = {std::move(child)};
    n->at = std::move(at);
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::product(MeasureSpec left, MeasureSpec right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->children = {std::move(left), std::move(right)};
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::pushforward(TTReduction red, MeasureSpec source) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pushforward;
    n->red = std::move(red);
    n->children = {std::move(source)};
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::sigma_mixture() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::SigmaMixture;
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::slow_growth(uint64_t seed) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::SlowGrowth;
    n->seed = seed;
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::trivial_mixture() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::TrivialMixture;
    return MeasureSpec(n);
}

MeasureSpec MeasureSpec::renewal(int truncation) {
    if (truncation < 2) throw MalformedSpec("renewal truncation must be >= 2");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Renewal;
    n->truncation = truncation;
    return MeasureSpec(n);
}

MeasureSpec::Kind MeasureSpec::kind() const { return node_->kind; }

namespace {
void expect(bool cond, const char* what) {
    if (!cond) throw Error(std::string("measure accessor misuse: ") + what);
}
}  // namespace

const Rational& MeasureSpec::bernoulli_p() const {
    expect(kind() == Kind::Bernoulli, "bernoulli_p");
    return node_->p;
}
const std::array<Rational, 2>& MeasureSpec::markov_initial() const {
    expect(kind() == Kind::Markov, "markov_initial");
    return node_->initial;
}
const std::array<std::array<Rational, 2>, 2>& MeasureSpec::markov_transition() const {
    expect(kind() == Kind::Markov, "markov_transition");
    return node_->transition;
}
const SequenceSpec& MeasureSpec::dirac_seq() const {
    expect(kind() == Kind::Dirac, "dirac_seq");
    return node_->seq;
}
const std::vector<std::pair<Rational, MeasureSpec>>& MeasureSpec::convex_terms() const {
    expect(kind() == Kind::Convex, "convex_terms");
    return node_->terms;
}
const MeasureSpec& MeasureSpec::localize_child() const {
    expect(kind() == Kind::Localize, "localize_child");
    return node_->children[0];
}
const BitString& MeasureSpec::localize_at() const {
    expect(kind() == Kind::Localize, "localize_at");
    return node_->at;
}
const MeasureSpec& MeasureSpec::product_left() const {
    expect(kind() == Kind::Product, "product_left");
    return node_->children[0];
}
const MeasureSpec& MeasureSpec::product_right() const {
    expect(kind() == Kind::Product, "product_right");
    return node_->children[1];
}
const TTReduction& MeasureSpec::pushforward_reduction() const {
    expect(kind() == Kind::Pushforward, "pushforward_reduction");
    return node_->red;
}
const MeasureSpec& MeasureSpec::pushforward_source() const {
    expect(kind() == Kind::Pushforward, "pushforward_source");
    return node_->children[0];
}
uint64_t MeasureSpec::slow_growth_seed() const {
    expect(kind() == Kind::SlowGrowth, "slow_growth_seed");
    return node_->seed;
}
int MeasureSpec::renewal_truncation() const {
    expect(kind() == Kind::Renewal, "renewal_truncation");
    return node_->truncation;
}

bool MeasureSpec::operator==(const MeasureSpec& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case Kind::Uniform:
        case Kind::SigmaMixture:
        case Kind::TrivialMixture:
            return true;
        case Kind::Bernoulli:
            return node_->p == o.node_->p;
        case Kind::Markov:
            return node_->initial == o.node_->initial &&
                   node_->transition == o.node_->transition;
        case Kind::Dirac:
            return node_->seq == o.node_->seq;
        case Kind::Convex:
            return node_->terms == o.node_->terms;
        case Kind::Localize:
            return node_->at == o.node_->at && node_->children == o.node_->children;
        case Kind::Product:
            return node_->children == o.node_->children;
        case Kind::Pushforward:
            return node_->red.name == o.node_->red.name &&
                   node_->children == o.node_->children;
        case Kind::SlowGrowth:
            return node_->seed == o.node_->seed;
        case Kind::Renewal:
            return node_->truncation == o.node_->truncation;
    }
    return false;
}

Rational slow_growth_weight(int k) {
    return Rational(1, static_cast<unsigned long>(k + 1) * (k + 2));
}

uint64_t slow_growth_block(int k) { return uint64_t{1} << (k + 4); }

SequenceSpec slow_growth_atom(uint64_t seed, int k) {
    uint64_t block = slow_growth_block(k);
    return SequenceSpec::pseudo_random(BitString::zeros(block),
                                       rng::combine(seed, static_cast<uint64_t>(k)));
}

namespace {

Interval eval_bernoulli(const Rational& p, const BitString& sigma) {
    size_t zeros = sigma.count_zeros();
    Rational q = Rational(1) - p;
    return Interval(p.pow(static_cast<long>(zeros)) *
                    q.pow(static_cast<long>(sigma.size() - zeros)));
}

Interval eval_markov(const Node& n, const BitString& sigma) {
    if (sigma.empty()) return Interval(Rational(1));
    Rational m = n.initial[sigma.bit(0)];
    for (size_t i = 1; i < sigma.size(); ++i)
        m *= n.transition[sigma.bit(i - 1)][sigma.bit(i)];
    return Interval(m);
}

// Exact evaluation of mu = 2 sum_{r>0} 3^-r lambda_{sigma(r)}:
// the all-zeros string of length n collects the whole r > n tail
// (sum 3^-n / 2 after the factor 2); any other string has a unique
// leading block 0^{r-1} 1 and mass 2 * 3^-r * 2^{r-n}.
Interval eval_sigma_mixture(const BitString& sigma) {
    long n = static_cast<long>(sigma.size());
    if (sigma.all_zeros()) return Interval(Rational(1, 3).pow(n));
    long r = 0;
    while (!sigma.bit(r)) ++r;
    ++r;  // first 1 at index r-1
    return Interval(Rational(2) * Rational(1, 3).pow(r) * Rational::pow2(r - n));
}

// mu = sum_k c_k delta_{Z_k}. Every atom with n_k >= |sigma| agrees with
// 0^inf on the first |sigma| bits, so the tail collapses exactly onto the
// all-zeros cylinder with telescoping weight sum_{k>=k*} c_k = 1/(k*+1).
Interval eval_slow_growth(uint64_t seed, const BitString& sigma) {
    size_t n = sigma.size();
    int k_star = 0;
    while (slow_growth_block(k_star) < n) ++k_star;
    Rational mass(0);
    for (int k = 0; k < k_star; ++k)
        if (slow_growth_atom(seed, k).extends(sigma)) mass += slow_growth_weight(k);
    if (sigma.all_zeros())
        mass += Rational(1, static_cast<unsigned long>(k_star + 1));
    return Interval(mass);
}

// mu = sum_i 2^{-i-1} delta_{R_i}, R_i = (0^i 1)^inf. For i >= |sigma| the
// atom's prefix is all zeros, so the tail is exactly 2^{-|sigma|} on 0^n.
Interval eval_trivial_mixture(const BitString& sigma) {
    size_t n = sigma.size();
    Rational mass(0);
    for (size_t i = 0; i < n; ++i) {
        SequenceSpec r = SequenceSpec::periodic(
            BitString(), BitString::zeros(i).append(1));
        if (r.extends(sigma)) mass += Rational::pow2(-static_cast<long>(i) - 1);
    }
    if (sigma.all_zeros()) mass += Rational::pow2(-static_cast<long>(n));
    return Interval(mass);
}

Interval eval_pushforward(const Node& n, const BitString& sigma) {
    const TTReduction& red = n.red;
    size_t len = sigma.size();
    size_t use = red.use(len);
    if (len > 0 && red.use(len - 1) >= use)
        throw InconsistentReduction(red.name + ": use bound not strictly increasing");
    if (use > 24) throw DepthExceeded("pushforward preimage depth " + std::to_string(use));
    Interval total(Rational(0));
    for (const BitString& y : BitString::all_of_length(use)) {
        BitString image = red.apply(y, len);
        if (len > 0) {
            // Prefix consistency at evaluation depth.
            BitString shorter = red.apply(y.prefix(red.use(len - 1)), len - 1);
            if (!shorter.is_prefix_of(image))
                throw InconsistentReduction(red.name + ": prefix consistency fails at " +
                                            y.str());
        }
        if (image == sigma) total += eval(n.children[0], y);
    }
    return total;
}

}  // namespace

Interval eval(const MeasureSpec& spec, const BitString& sigma) {
    const Node& n = *spec.node_;
    switch (n.kind) {
        case MeasureSpec::Kind::Uniform:
            return Interval(Rational::pow2(-static_cast<long>(sigma.size())));
        case MeasureSpec::Kind::Bernoulli:
            return eval_bernoulli(n.p, sigma);
        case MeasureSpec::Kind::Markov:
            return eval_markov(n, sigma);
        case MeasureSpec::Kind::Dirac:
            return Interval(Rational(n.seq.extends(sigma) ? 1 : 0));
        case MeasureSpec::Kind::Convex: {
            Interval total(Rational(0));
            for (const auto& [w, child] : n.terms) total += Interval(w) * eval(child, sigma);
            return total;
        }
        case MeasureSpec::Kind::Localize: {
            // nu_a[sigma] = nu([sigma] cap [a]) / nu[a].
            const BitString& a = n.at;
            Interval denom = eval(n.children[0], a);
            if (!denom.strictly_positive())
                throw LocalizeOnNullCylinder("localize at " + a.str());
            if (a.is_prefix_of(sigma)) return eval(n.children[0], sigma) / denom;
            if (sigma.is_prefix_of(a)) return Interval(Rational(1));
            return Interval(Rational(0));
        }
        case MeasureSpec::Kind::Product:
            return eval(n.children[0], sigma.even_bits()) *
                   eval(n.children[1], sigma.odd_bits());
        case MeasureSpec::Kind::Pushforward:
            return eval_pushforward(n, sigma);
        case MeasureSpec::Kind::SigmaMixture:
            return eval_sigma_mixture(sigma);
        case MeasureSpec::Kind::SlowGrowth:
            return eval_slow_growth(n.seed, sigma);
        case MeasureSpec::Kind::TrivialMixture:
            return eval_trivial_mixture(sigma);
        case MeasureSpec::Kind::Renewal: {
            static std::mutex m;
            static std::map<int, RenewalLaw> cache;
            std::lock_guard<std::mutex> lk(m);
            auto it = cache.find(n.truncation);
            if (it == cache.end())
                it = cache.emplace(n.truncation, RenewalLaw(n.truncation)).first;
            return it->second.mass(sigma);
        }
    }
    throw Error("unreachable measure kind");
}

}  // namespace cantorlab
