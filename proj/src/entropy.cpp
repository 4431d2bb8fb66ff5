#include "cantorlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cantorlab/constants.hpp"
#include "cantorlab/dyadic.hpp"
#include "cantorlab/inseg.hpp"
#include "cantorlab/renewal.hpp"
#include "cantorlab/rng.hpp"

namespace cantorlab {

namespace {

constexpr unsigned kLogPrec = 96;

double mass_to_double(const Interval& m) { return m.to_double(); }

}  // namespace

double block_entropy(const MeasureSpec& spec, int n) {
    if (n < 1 || n > 20) throw MalformedSpec("block entropy needs 1 <= n <= 20");
    // Kahan-compensated sum over the support.
    double sum = 0, comp = 0;
    SupportSlice slice = support_slice(spec, n);
    for (const auto& [x, mass] : slice.atoms) {
        if (mass.hi().sign() == 0) continue;
        Rational p = mass.is_point() ? mass.exact() : mass.mid();
        if (p.sign() == 0) continue;
        double term = -p.to_double() * log2_double(p);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(n);
}

EntropyReport entropy_report(const MeasureSpec& spec, int max_n) {
    EntropyReport report;
    double best = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= max_n; ++n) {
        double h = block_entropy(spec, n);
        best = std::min(best, h);
        report.block_entropies.emplace_back(n, h);
    }
    report.entropy_estimate = best;
    return report;
}

double empirical_entropy(const MeasureSpec& spec, const BitString& prefix) {
    if (prefix.empty()) throw MalformedSpec("empirical entropy needs a nonempty prefix");
    Interval mass = eval(spec, prefix);
    if (mass.hi().sign() == 0) throw NullCylinder("measure vanishes on " + prefix.str());
    Rational p = mass.is_point() ? mass.exact() : mass.mid();
    return -log2_double(p) / static_cast<double>(prefix.size());
}

ExpectedEmpirical expected_empirical(const MeasureSpec& mu, const MeasureSpec& rho, int n,
                                     const Rational& s) {
    SupportSlice slice = support_slice(mu, n);
    Interval n_inv = Interval(Rational(1)) / Interval(Rational(n));
    Interval mean(Rational(0)), dev(Rational(0));
    for (const auto& [x, mu_mass] : slice.atoms) {
        if (mu_mass.hi().sign() == 0) continue;
        Interval rho_mass = eval(rho, x);
        if (!rho_mass.strictly_positive()) {
            if (mu_mass.lo().sign() > 0)
                throw SupportViolation("mu charges " + x.str() + " where rho vanishes");
            continue;  // mu mass is an interval touching 0; skip the null atom
        }
        Interval h = -constants::log2(rho_mass, kLogPrec) * n_inv;
        mean += mu_mass * h;
        Interval diff = h - Interval(s);
        Rational alo = diff.lo().abs(), ahi = diff.hi().abs();
        Interval absdiff = diff.lo().sign() <= 0 && diff.hi().sign() >= 0
                               ? Interval(Rational(0), std::max(alo, ahi))
                               : Interval(std::min(alo, ahi), std::max(alo, ahi));
        dev += mu_mass * absdiff;
    }
    return {mean, dev};
}

Interval renewal_expected_empirical(int truncation, int n, bool normalized) {
    auto terms = renewal_expectation_terms(truncation, n);
    Interval n_inv = Interval(Rational(1)) / Interval(Rational(n));
    Interval total(Rational(0));
    for (const RenewalTerm& t : terms) {
        Interval h = -constants::log2(t.rho, kLogPrec) * n_inv;
        total += t.mu * h;
    }
    if (normalized) total = total / RenewalLaw(truncation).companion_total();
    return total;
}

BitString sample_path(const MeasureSpec& spec, size_t n, uint64_t seed, uint64_t index) {
    using Kind = MeasureSpec::Kind;
    // Memoryless and chain measures admit O(1) conditional probabilities;
    // the draws are keyed by position, so fast and generic routes sample
    // identical paths.
    std::string path;
    path.reserve(n);
    auto draw_bit = [&](size_t i, const Rational& zero_prob) {
        return rng::uniform53(seed, index, i) < zero_prob ? '0' : '1';
    };
    if (spec.kind() == Kind::Uniform) {
        for (size_t i = 0; i < n; ++i) path += draw_bit(i, Rational(1, 2));
        return BitString(path);
    }
    if (spec.kind() == Kind::Bernoulli) {
        for (size_t i = 0; i < n; ++i) path += draw_bit(i, spec.bernoulli_p());
        return BitString(path);
    }
    if (spec.kind() == Kind::Markov) {
        for (size_t i = 0; i < n; ++i) {
            Rational zero_prob = i == 0 ? spec.markov_initial()[0]
                                        : spec.markov_transition()[path[i - 1] == '1'][0];
            path += draw_bit(i, zero_prob);
        }
        return BitString(path);
    }
    BitString prefix;
    Interval current(Rational(1));
    for (size_t i = 0; i < n; ++i) {
        if (!(current.hi().sign() > 0)) throw NullCylinder("path hit a null cylinder");
        Interval zero_branch = eval(spec, prefix.append(0));
        // Interval measures use the midpoint threshold (widths are far below
        // the 53-bit draw resolution).
        Rational threshold = current.is_point() && zero_branch.is_point()
                                 ? zero_branch.exact() / current.exact()
                                 : (zero_branch.mid() / current.mid());
        int bit = rng::uniform53(seed, index, i) < threshold ? 0 : 1;
        prefix = prefix.append(bit);
        current = eval(spec, prefix);
    }
    return prefix;
}

namespace {

bool is_iid(const MeasureSpec& spec) {
    return spec.kind() == MeasureSpec::Kind::Uniform ||
           spec.kind() == MeasureSpec::Kind::Bernoulli;
}

// rho([u] cap T^-k [v]) when v starts inside u (k < |u|): the patterns must
// agree on the overlap; the union is a single cylinder.
Interval overlap_term(const MeasureSpec& spec, const BitString& u, const BitString& v,
                      int k) {
    std::string merged = u.str();
    for (size_t i = 0; i < v.size(); ++i) {
        size_t pos = static_cast<size_t>(k) + i;
        if (pos < merged.size()) {
            if (merged[pos] != v.str()[i]) return Interval(Rational(0));
        } else {
            merged += v.str()[i];
        }
    }
    return eval(spec, BitString(merged));
}

Interval markov_power_term(const MeasureSpec& spec, const BitString& u, const BitString& v,
                           int k) {
    // rho[u] * (P^{gap+1})(u_last, v_0) * prod P(v_i, v_{i+1}).
    const auto& P = spec.markov_transition();
    int gap = k - static_cast<int>(u.size());
    std::array<std::array<Rational, 2>, 2> M{{{Rational(1), Rational(0)},
                                              {Rational(0), Rational(1)}}};
    auto mul = [](const auto& A, const auto& B) {
        std::array<std::array<Rational, 2>, 2> R;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                R[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
        return R;
    };
    auto base = P;
    int e = gap + 1;
    while (e > 0) {
        if (e & 1) M = mul(M, base);
        base = mul(base, base);
        e >>= 1;
    }
    Rational term = eval(spec, u).exact() * M[u.bit(u.size() - 1)][v.bit(0)];
    for (size_t i = 0; i + 1 < v.size(); ++i) term *= P[v.bit(i)][v.bit(i + 1)];
    return Interval(term);
}

Interval generic_term(const MeasureSpec& spec, const BitString& u, const BitString& v,
                      int k) {
    // Sum over the gap strings w: rho[u w v].
    size_t gap = static_cast<size_t>(k) - u.size();
    if (u.size() + gap + v.size() > kMaxTableDepth)
        throw DepthExceeded("ergodicity probe beyond the depth ceiling");
    Interval total(Rational(0));
    for (const BitString& w : BitString::all_of_length(gap))
        total += eval(spec, u.concat(w).concat(v));
    return total;
}

}  // namespace

ErgodicityProbe ergodicity_probe(const MeasureSpec& spec, const BitString& u,
                                 const BitString& v, int N) {
    if (u.empty() || v.empty()) throw MalformedSpec("ergodicity probe needs nonempty u, v");
    // Generic measures need the full correlation window inside the exact
    // evaluation ceiling; i.i.d. and Markov take closed-form routes.
    bool closed_form = is_iid(spec) || spec.kind() == MeasureSpec::Kind::Markov;
    if (!closed_form && u.size() + static_cast<size_t>(N) + v.size() > kMaxTableDepth)
        throw DepthExceeded("ergodicity probe beyond the depth ceiling");
    Interval sum(Rational(0));
    for (int k = 0; k < N; ++k) {
        Interval term;
        if (k < static_cast<int>(u.size())) {
            term = overlap_term(spec, u, v, k);
        } else if (is_iid(spec)) {
            term = eval(spec, u) * eval(spec, v);  // independence beyond the overlap
        } else if (spec.kind() == MeasureSpec::Kind::Markov) {
            term = markov_power_term(spec, u, v, k);
        } else {
            term = generic_term(spec, u, v, k);
        }
        sum += term;
    }
    ErgodicityProbe probe;
    probe.average = sum / Interval(Rational(N));
    probe.target = eval(spec, u) * eval(spec, v);
    return probe;
}

ShiftInvarianceReport shift_invariance_check(const MeasureSpec& spec, int depth) {
    ShiftInvarianceReport report;
    report.max_residual = Rational(0);
    report.max_width = Rational(0);
    for (int len = 0; len < depth; ++len) {
        for (const BitString& sigma : BitString::all_of_length(len)) {
            Interval lhs = eval(spec, sigma);
            BitString zero_ext = BitString("0").concat(sigma);
            BitString one_ext = BitString("1").concat(sigma);
            Interval rhs = eval(spec, zero_ext) + eval(spec, one_ext);
            ++report.checked;
            Rational residual = (lhs.mid() - rhs.mid()).abs();
            Rational width = lhs.width() + rhs.width();
            report.max_residual = std::max(report.max_residual, residual);
            report.max_width = std::max(report.max_width, width);
            bool ok = (lhs.is_point() && rhs.is_point()) ? lhs == rhs : lhs.overlaps(rhs);
            if (!ok) report.invariant = false;
        }
    }
    return report;
}

}  // namespace cantorlab
