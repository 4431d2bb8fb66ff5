#include "cantorlab/sampler.hpp"

#include <cmath>
#include <thread>

#include "cantorlab/rng.hpp"

namespace cantorlab {

namespace {

void check_config(const SamplerConfig& cfg) {
    if (cfg.depth > kMaxSamplerDepth) throw DepthExceeded("sampler depth above maximum");
    if (cfg.sample_count < 1) throw MalformedSpec("sample count must be >= 1");
}

// Runs fn(i) over sample indices with a fixed chunking; results land in
// per-index slots, so the aggregate is independent of the thread count.
template <typename Fn>
void parallel_over_samples(size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < count; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::vector<std::vector<Rational>> sample_levels(const SamplerConfig& cfg, size_t index) {
    check_config(cfg);
    std::vector<std::vector<Rational>> levels(cfg.depth + 1);
    levels[0] = {Rational(1)};
    for (size_t d = 0; d < cfg.depth; ++d) {
        levels[d + 1].resize(size_t{2} << d);
        for (size_t j = 0; j < levels[d].size(); ++j) {
            // Key the draw by the node's path (marker bit + path bits).
            uint64_t path_key = (uint64_t{1} << d) | j;
            Rational u = rng::uniform53(cfg.seed, index, path_key);
            Rational left = u * levels[d][j];
            levels[d + 1][2 * j] = left;
            levels[d + 1][2 * j + 1] = levels[d][j] - left;
        }
    }
    return levels;
}

DyadicMeasure sample_measure(const SamplerConfig& cfg, size_t index) {
    auto levels = sample_levels(cfg, index);
    std::map<BitString, Interval> table;
    for (size_t d = 0; d <= cfg.depth; ++d) {
        for (size_t j = 0; j < levels[d].size(); ++j) {
            std::string bits(d, '0');
            for (size_t i = 0; i < d; ++i)
                bits[i] = (j >> (d - 1 - i)) & 1 ? '1' : '0';
            table.emplace(BitString(bits), Interval(levels[d][j]));
        }
    }
    return DyadicMeasure(cfg.depth, std::move(table));
}

namespace {

// v_n tabulated on the grid j/M, j = 0..M, by the substitution
// v_{n+1}(x) = x (1 + int_x^1 v_n(u)/u^2 du): cumulative Simpson from the
// right on pairs of cells, with a quadratic end-correction when a single
// cell remains.
std::vector<double> v_table(int n, size_t panels) {
    size_t M = panels;
    double h = 1.0 / static_cast<double>(M);
    std::vector<double> v(M + 1), next(M + 1);
    for (size_t j = 0; j <= M; ++j) v[j] = static_cast<double>(j) * h;  // v_1(x) = x
    for (int level = 1; level < n; ++level) {
        std::vector<double> g(M + 1, 0.0);
        for (size_t j = 1; j <= M; ++j) {
            double u = static_cast<double>(j) * h;
            g[j] = v[j] / (u * u);
        }
        std::vector<double> F(M + 1, 0.0);  // F[j] = int_{x_j}^1 g
        for (size_t j = M; j-- > 0;) {
            if (M - j >= 2) {
                // Simpson over [x_j, x_{j+2}] plus the already-computed tail.
                F[j] = F[j + 2] + h / 3.0 * (g[j] + 4.0 * g[j + 1] + g[j + 2]);
            } else {
                // Final cell [x_{M-1}, x_M]: quadratic through the last three
                // nodes integrated over its second half; exact on quadratics.
                F[j] = h / 12.0 * (-g[M - 2] + 8.0 * g[M - 1] + 5.0 * g[M]);
            }
        }
        // g(0) is singular but never evaluated; v_{level+1}(0) = 0 directly.
        next[0] = 0.0;
        for (size_t j = 1; j <= M; ++j) {
            double x = static_cast<double>(j) * h;
            next[j] = x * (1.0 + F[j]);
        }
        v = next;
    }
    return v;
}

// Cubic Lagrange interpolation on the uniform grid.
double interpolate(const std::vector<double>& tab, double x) {
    size_t M = tab.size() - 1;
    if (x <= 0) return tab[0];
    if (x >= 1) return tab[M];
    double fj = x * static_cast<double>(M);
    size_t j = static_cast<size_t>(fj);
    size_t base = j == 0 ? 0 : (j >= M - 2 ? M - 3 : j - 1);
    double t = fj - static_cast<double>(base);
    double p = 0;
    for (int k = 0; k < 4; ++k) {
        double lk = 1;
        for (int l = 0; l < 4; ++l)
            if (l != k) lk *= (t - l) / static_cast<double>(k - l);
        p += tab[base + static_cast<size_t>(k)] * lk;
    }
    return p;
}

}  // namespace

double v_recursion(int n, double x, size_t panels) {
    if (n < 1) throw MalformedSpec("v_recursion needs n >= 1");
    if (panels < 4 || (panels & (panels - 1)) != 0)
        throw MalformedSpec("panels must be a power of two >= 4");
    if (x < 0 || x > 1) throw MalformedSpec("x outside [0,1]");
    if (n == 1) return x;
    double coarse = interpolate(v_table(n, panels), x);
    double fine = interpolate(v_table(n, panels * 2), x);
    if (std::fabs(coarse - fine) > 1e-6)
        throw QuadratureNonConvergent("refinement moved v_n by more than 1e-6");
    return fine;
}

McResult mc_expectation(const SamplerConfig& cfg, const std::vector<BitString>& G,
                        unsigned threads) {
    check_config(cfg);
    for (const BitString& s : G)
        if (s.size() > cfg.depth) throw DepthExceeded("set element below sampler depth");
    // De-duplicate covered cylinders.
    std::vector<BitString> sorted = G;
    std::sort(sorted.begin(), sorted.end());
    std::vector<BitString> minimal;
    for (const BitString& x : sorted) {
        if (!minimal.empty() && minimal.back().is_prefix_of(x)) continue;
        minimal.push_back(x);
    }
    std::vector<Rational> per_sample(cfg.sample_count);
    parallel_over_samples(cfg.sample_count, threads, [&](size_t i) {
        auto levels = sample_levels(cfg, i);
        Rational mass(0);
        for (const BitString& s : minimal)
            mass += levels[s.size()][s.empty() ? 0 : s.numeral()];
        per_sample[i] = mass;
    });
    Rational sum(0);
    for (const Rational& r : per_sample) sum += r;
    McResult res;
    res.exact_mean = sum / Rational(static_cast<long>(cfg.sample_count));
    res.estimate = res.exact_mean.to_double();
    double sq = 0;
    for (const Rational& r : per_sample) {
        double d = r.to_double() - res.estimate;
        sq += d * d;
    }
    double variance = cfg.sample_count > 1 ? sq / (cfg.sample_count - 1.0) : 0.0;
    res.std_error = std::sqrt(variance / static_cast<double>(cfg.sample_count));
    return res;
}

FractionResult failing_fraction(const SamplerConfig& cfg, const TestFamily& test, int m,
                                size_t cutoff, const Rational& delta, unsigned threads) {
    check_config(cfg);
    if (test.kind != TestFamily::Kind::ML)
        throw MalformedSpec("failing_fraction needs an ML test family");
    if (cutoff > cfg.depth) cutoff = cfg.depth;
    std::vector<BitString> strings = test.generator(m, cutoff);
    std::sort(strings.begin(), strings.end());
    std::vector<BitString> minimal;
    for (const BitString& x : strings) {
        if (!minimal.empty() && minimal.back().is_prefix_of(x)) continue;
        minimal.push_back(x);
    }
    std::vector<char> exceed(cfg.sample_count, 0);
    parallel_over_samples(cfg.sample_count, threads, [&](size_t i) {
        auto levels = sample_levels(cfg, i);
        Rational mass(0);
        for (const BitString& s : minimal)
            mass += levels[s.size()][s.empty() ? 0 : s.numeral()];
        exceed[i] = mass >= delta ? 1 : 0;
    });
    FractionResult res;
    for (char c : exceed) res.exceed_count += c;
    double count = static_cast<double>(cfg.sample_count);
    res.fraction = static_cast<double>(res.exceed_count) / count;
    res.bound = (Rational::pow2(-m) / delta).to_double();
    res.std_error = std::sqrt(std::max(res.fraction * (1 - res.fraction), 1e-12) / count);
    return res;
}

}  // namespace cantorlab
