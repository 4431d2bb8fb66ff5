// Command-line front door: runs named, reproducible experiments and a few
// direct conveniences. All stochastic experiments take explicit seeds.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cantorlab/entropy.hpp"
#include "cantorlab/experiments.hpp"
#include "cantorlab/measure_io.hpp"
#include "cantorlab/sampler.hpp"

using namespace cantorlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cantorlab: exact measures, toy Kolmogorov complexity, and "
                 "randomness-test experiments on Cantor space"};
    app.require_subcommand(1);

    // ---- run: the manifest-driven experiment runner ----
    auto* run = app.add_subcommand("run", "run a registered experiment");
    std::string experiment, manifest_path, out_dir = "out";
    uint64_t seed = 0;
    unsigned threads = 1;
    std::vector<std::string> params;
    run->add_option("--experiment", experiment, "experiment name");
    run->add_option("--manifest", manifest_path, "manifest JSON file");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--seed", seed, "seed for stochastic experiments");
    run->add_option("--threads", threads, "worker threads");
    run->add_option("--param,-p", params, "key=value parameter (repeatable)");

    // ---- eval: print a measure's cylinder masses ----
    auto* ev = app.add_subcommand("eval", "evaluate a measure on cylinders");
    std::string measure_arg = "uniform", sigma;
    int depth = 3;
    std::string spec_file;
    ev->add_option("--measure", measure_arg, "shorthand or spec document");
    ev->add_option("--spec-file", spec_file, "measure spec file");
    ev->add_option("--sigma", sigma, "single cylinder (bits; '-' for the root)");
    ev->add_option("--depth", depth, "tabulate all cylinders up to this depth");

    // ---- sampler: stick-breaking samples and set-mass estimates ----
    auto* sa = app.add_subcommand("sample", "sample the uniform measure distribution");
    uint64_t s_seed = 0;
    size_t s_depth = 4, s_count = 10;
    std::vector<std::string> s_set;
    std::string s_csv;
    unsigned s_threads = 1;
    sa->add_option("--seed", s_seed, "stream seed");
    sa->add_option("--depth", s_depth, "table depth");
    sa->add_option("--samples", s_count, "number of samples");
    sa->add_option("--set", s_set, "cylinder strings; estimates E mu(G)");
    sa->add_option("--csv", s_csv, "write per-sample masses of the set to this file");
    sa->add_option("--threads", s_threads, "worker threads");

    // ---- entropy: block entropy series ----
    auto* en = app.add_subcommand("entropy", "block entropy series of a measure");
    std::string e_measure = "uniform";
    int e_max_n = 10;
    en->add_option("--measure", e_measure, "shorthand or spec document");
    en->add_option("--max-n", e_max_n, "largest block length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            ExperimentManifest manifest;
            if (!manifest_path.empty()) manifest = parse_manifest(slurp(manifest_path));
            if (!experiment.empty()) manifest.name = experiment;
            if (run->count("--seed")) manifest.seed = seed;
            for (const std::string& kv : params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw InvalidManifest("parameter must be key=value: " + kv);
                manifest.parameters[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            if (manifest.name.empty()) {
                std::cerr << "available experiments:\n";
                for (const std::string& name : experiment_names())
                    std::cerr << "  " << name << "\n";
                return 2;
            }
            manifest.out_dir = out_dir;
            ExperimentOutputs outputs = run_experiment(manifest, threads);
            for (const auto& [file, content] : outputs)
                std::cout << out_dir << "/" << file << " (" << content.size()
                          << " bytes)\n";
            return 0;
        }
        if (*ev) {
            MeasureSpec spec = spec_file.empty() ? measure_from_arg(measure_arg)
                                                 : parse_measure(slurp(spec_file));
            if (!sigma.empty()) {
                BitString s(sigma == "-" ? "" : sigma);
                std::cout << eval(spec, s).str() << "\n";
                return 0;
            }
            for (int len = 0; len <= depth; ++len)
                for (const BitString& s : BitString::all_of_length(len))
                    std::cout << (s.empty() ? "-" : s.str()) << "\t"
                              << eval(spec, s).str() << "\n";
            return 0;
        }
        if (*sa) {
            SamplerConfig cfg{s_seed, s_depth, s_count};
            if (!s_set.empty()) {
                std::vector<BitString> set;
                for (const std::string& s : s_set) set.emplace_back(s == "-" ? "" : s);
                McResult res = mc_expectation(cfg, set, s_threads);
                std::cout.precision(12);
                std::cout << "estimate " << res.estimate << "\nstd_error "
                          << res.std_error << "\nexact_mean " << res.exact_mean.str()
                          << "\n";
                if (!s_csv.empty()) {
                    std::ofstream out(s_csv, std::ios::binary);
                    out << "# cantorlab-csv v1\nsample,mass\n";
                    out.precision(17);
                    for (size_t i = 0; i < s_count; ++i) {
                        auto levels = sample_levels(cfg, i);
                        Rational mass(0);
                        for (const BitString& s : set)
                            mass += levels[s.size()][s.empty() ? 0 : s.numeral()];
                        out << i << "," << mass.to_double() << "\n";
                    }
                    std::cout << "wrote " << s_csv << "\n";
                }
                return 0;
            }
            for (size_t i = 0; i < s_count; ++i) {
                auto levels = sample_levels(cfg, i);
                std::cout << "sample " << i << ": X[0]=" << levels[1][0].to_double()
                          << " X[00]=" << (s_depth >= 2 ? levels[2][0].to_double() : 0.0)
                          << "\n";
            }
            return 0;
        }
        if (*en) {
            MeasureSpec spec = measure_from_arg(e_measure);
            EntropyReport report = entropy_report(spec, e_max_n);
            std::cout.precision(12);
            for (auto& [n, h] : report.block_entropies)
                std::cout << n << "\t" << h << "\n";
            std::cout << "# entropy upper bound: " << report.entropy_estimate << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
