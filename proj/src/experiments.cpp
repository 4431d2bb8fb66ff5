#include "cantorlab/experiments.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cantorlab/entropy.hpp"
#include "cantorlab/inseg.hpp"
#include "cantorlab/measure_io.hpp"
#include "cantorlab/mltest.hpp"
#include "cantorlab/renewal.hpp"
#include "cantorlab/sampler.hpp"

namespace cantorlab {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCsvHeader = "# cantorlab-csv v1\n";

std::string param(const ExperimentManifest& m, const std::string& key,
                  const std::string& fallback = "") {
    auto it = m.parameters.find(key);
    if (it != m.parameters.end()) return it->second;
    if (fallback.empty()) throw InvalidManifest("missing parameter '" + key + "'");
    return fallback;
}

long param_long(const ExperimentManifest& m, const std::string& key,
                const std::string& fallback = "") {
    return std::stol(param(m, key, fallback));
}

std::string interval_fields(const Interval& v) {
    std::ostringstream os;
    os.precision(17);
    os << v.lo().str() << "," << v.hi().str() << "," << v.to_double();
    return os.str();
}

TestFamily family_from_arg(const std::string& name) {
    if (name == "zeros") return zeros_family();
    if (name == "lln") return lln_family();
    if (name == "dirac-zeros")
        return dirac_prefix_family(SequenceSpec::periodic(BitString(), BitString("0")));
    throw InvalidManifest("unknown test family: " + name);
}

// ---- individual experiments ------------------------------------------------

ExperimentOutputs exp_measure_eval(const ExperimentManifest& m, unsigned) {
    MeasureSpec spec = measure_from_arg(param(m, "measure"));
    int depth = static_cast<int>(param_long(m, "depth", "3"));
    std::ostringstream os;
    os << kCsvHeader << "sigma,mass_lo,mass_hi,mass\n";
    for (int len = 0; len <= depth; ++len)
        for (const BitString& sigma : BitString::all_of_length(len)) {
            Interval mass = eval(spec, sigma);
            os << (sigma.empty() ? "-" : sigma.str()) << "," << interval_fields(mass)
               << "\n";
        }
    return {{"eval.csv", os.str()}};
}

ExperimentOutputs exp_complexity_table(const ExperimentManifest& m, unsigned) {
    std::string kind_name = param(m, "kind", "prefix");
    MachineKind kind = kind_name == "plain" ? MachineKind::Plain : MachineKind::PrefixFree;
    Budget dflt = default_budget(kind);
    Budget budget{
        static_cast<unsigned>(param_long(m, "max_program_length",
                                         std::to_string(dflt.max_program_length))),
        static_cast<unsigned>(param_long(m, "max_steps", std::to_string(dflt.max_steps)))};
    bool is_default = budget.max_program_length == dflt.max_program_length &&
                      budget.max_steps == dflt.max_steps;
    if (is_default) {
        const MachineLab& lab = default_lab();
        return {{"table.tsv",
                 golden_serialize(kind == MachineKind::Plain ? lab.plain : lab.prefix)}};
    }
    ComplexityTable t = enumerate_machine(kind, budget);
    std::string cond = param(m, "cond", "none");
    if (cond == "n")
        attach_conditions(t, standard_conditions({"n"},
                                                 static_cast<int>(param_long(m, "cond_max_n", "8")),
                                                 nullptr, nullptr));
    return {{"table.tsv", golden_serialize(t)}};
}

ExperimentOutputs exp_inseg_profile(const ExperimentManifest& m, unsigned) {
    MeasureSpec spec = measure_from_arg(param(m, "measure"));
    int max_n = static_cast<int>(param_long(m, "max_n", "8"));
    const MachineLab& lab = default_lab();
    DeficiencyProfile profile = growth_and_triviality_profile(spec, max_n, lab);
    DimensionProfile dim = dimension_profile(spec, max_n, lab);
    std::ostringstream os;
    os << kCsvHeader
       << "n,k_trivial_deficit,c_trivial_deficit,k_growth_deficit,c_growth_deficit,"
          "c_ratio,k_ratio\n";
    os.precision(17);
    for (size_t i = 0; i < profile.rows.size(); ++i) {
        const auto& r = profile.rows[i];
        os << r.n << "," << r.k_trivial_deficit.to_double() << ","
           << r.c_trivial_deficit.to_double() << "," << r.k_growth_deficit.to_double()
           << "," << r.c_growth_deficit.to_double() << ","
           << dim.rows[i].c_ratio.to_double() << "," << dim.rows[i].k_ratio.to_double()
           << "\n";
    }
    json flags;
    flags["triviality_slope"] = profile.triviality_slope;
    flags["growth_slope"] = profile.growth_slope;
    flags["triviality_trend"] = profile.triviality_trend;
    flags["maximal_growth_trend"] = profile.maximal_growth_trend;
    flags["resolution"] = {{"max_n", max_n},
                           {"plain_budget", lab.plain.budget.max_program_length},
                           {"prefix_budget", lab.prefix.budget.max_program_length}};
    auto ineq = inequality_suite({spec}, max_n, lab);
    json constants;
    constants["compare_ck_constant"] = ineq.compare_constant.str();
    constants["upgrade_constant"] = ineq.upgrade_constant;
    return {{"profile.csv", os.str()},
            {"flags.json", flags.dump(2) + "\n"},
            {"constants.json", constants.dump(2) + "\n"}};
}

ExperimentOutputs exp_test_diagnostic(const ExperimentManifest& m, unsigned) {
    MeasureSpec spec = measure_from_arg(param(m, "measure"));
    TestFamily family = family_from_arg(param(m, "family", "zeros"));
    int max_level = static_cast<int>(param_long(m, "max_level", "8"));
    size_t cutoff = static_cast<size_t>(param_long(m, "cutoff", "20"));
    Rational delta = Rational::parse(param(m, "delta", "1/2"));
    Verdict v = pass_diagnostic(spec, family, max_level, cutoff, delta);
    json out;
    out["family"] = family.name;
    out["verdict"] = v.kind == Verdict::Kind::FailsAtLevel     ? "fails-at-level-delta"
                     : v.kind == Verdict::Kind::MassDecayedBelow ? "mass-decayed-below"
                                                                 : "inconclusive";
    out["delta"] = delta.str();
    out["final_mass"] = v.final_mass.to_double();
    json masses = json::array();
    for (const Interval& mass : v.level_masses) masses.push_back(mass.to_double());
    out["level_masses"] = masses;
    out["resolution"] = {{"max_level", v.max_level}, {"cutoff", v.cutoff}};
    return {{"verdict.json", out.dump(2) + "\n"},
            {"fixture.txt", serialize_truncations(family, v.max_level, cutoff)}};
}

ExperimentOutputs exp_sampler_mc(const ExperimentManifest& m, unsigned threads) {
    SamplerConfig cfg;
    cfg.seed = m.seed;
    cfg.depth = static_cast<size_t>(param_long(m, "depth", "4"));
    cfg.sample_count = static_cast<size_t>(param_long(m, "samples", "100000"));
    std::vector<BitString> set;
    std::string arg = param(m, "set", "0");
    std::istringstream is(arg);
    std::string tok;
    while (std::getline(is, tok, ' '))
        if (!tok.empty()) set.emplace_back(tok == "-" ? "" : tok);
    McResult res = mc_expectation(cfg, set, threads);
    json out;
    out["set"] = arg;
    out["samples"] = cfg.sample_count;
    out["seed"] = cfg.seed;
    out["exact_mean"] = res.exact_mean.str();
    out["estimate"] = res.estimate;
    out["std_error"] = res.std_error;
    return {{"mc.json", out.dump(2) + "\n"}};
}

ExperimentOutputs exp_entropy_series(const ExperimentManifest& m, unsigned) {
    MeasureSpec rho = measure_from_arg(param(m, "measure"));
    int max_n = static_cast<int>(param_long(m, "max_n", "10"));
    EntropyReport report = entropy_report(rho, max_n);
    // Expected-empirical columns for a companion measure (certified logs are
    // pricey, so they stop at length 8 unless asked otherwise).
    bool with_companion = m.parameters.count("companion") > 0;
    MeasureSpec mu = with_companion ? measure_from_arg(param(m, "companion")) : rho;
    int companion_max = static_cast<int>(param_long(m, "companion_max_n", "8"));
    Rational s = Rational::parse(param(m, "s", "0"));
    std::ostringstream os;
    os.precision(17);
    os << kCsvHeader << "n,block_entropy,expected_empirical,expected_abs_dev\n";
    for (auto& [n, h] : report.block_entropies) {
        os << n << "," << h;
        if (with_companion && n <= companion_max) {
            auto [mean, dev] = expected_empirical(mu, rho, n, s);
            os << "," << mean.to_double() << "," << dev.to_double();
        } else {
            os << ",,";
        }
        os << "\n";
    }
    os << "# entropy_upper_bound," << report.entropy_estimate << "\n";
    return {{"entropy.csv", os.str()}};
}

ExperimentOutputs exp_renewal_divergence(const ExperimentManifest& m, unsigned) {
    int truncation = static_cast<int>(param_long(m, "truncation", "4"));
    int n_min = static_cast<int>(param_long(m, "n_min", "4"));
    int n_max = static_cast<int>(param_long(m, "n_max", "7"));
    RenewalLaw law(truncation);
    std::ostringstream os;
    os.precision(17);
    os << kCsvHeader << "n,k,expected_lo,expected_hi,expected,divergence_lower_bound\n";
    for (int n = n_min; n <= n_max; ++n) {
        Interval e = renewal_expected_empirical(truncation, n, false);
        int k = n - 2;
        double bound =
            (Interval(Rational(static_cast<long>(k) * k)) /
             (Interval(Rational(n)) * law.b()))
                .to_double();
        os << n << "," << k << "," << e.lo().to_double() << "," << e.hi().to_double()
           << "," << e.to_double() << "," << bound << "\n";
    }
    return {{"divergence.csv", os.str()}};
}

ExperimentOutputs exp_dip_report(const ExperimentManifest& m, unsigned) {
    Rational delta = Rational::parse(param(m, "delta", "1/2"));
    DipReport report = dip_report(standard_dip_measure(), standard_dip_fixture(),
                                  default_lab(), delta);
    std::ostringstream os;
    os.precision(17);
    os << kCsvHeader << "r,n,block_mass,f,cond_complexity,bound_without_const\n";
    for (const auto& r : report.rows)
        os << r.r << "," << r.n << "," << r.block_mass.to_double() << "," << r.f << ","
           << r.cond_complexity.to_double() << "," << r.bound_without_const << "\n";
    os << "# measured_constant," << report.measured_constant << "\n";
    os << "# sum_two_to_minus_f," << report.sum_two_to_minus_f.str() << "\n";
    return {{"dip.csv", os.str()}};
}

ExperimentOutputs exp_triple_probe(const ExperimentManifest& m, unsigned) {
    int max_n = static_cast<int>(param_long(m, "max_n", "8"));
    auto rows = probe_triple_condition(default_lab(), max_n);
    std::ostringstream os;
    os << kCsvHeader << "n,K_of_C_given_n_K\n";
    for (auto& [n, v] : rows) os << n << "," << v << "\n";
    return {{"probe.csv", os.str()}};
}

using Runner = ExperimentOutputs (*)(const ExperimentManifest&, unsigned);

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> reg = {
        {"measure-eval", exp_measure_eval},
        {"complexity-table", exp_complexity_table},
        {"inseg-profile", exp_inseg_profile},
        {"test-diagnostic", exp_test_diagnostic},
        {"sampler-mc", exp_sampler_mc},
        {"entropy-series", exp_entropy_series},
        {"renewal-divergence", exp_renewal_divergence},
        {"dip-report", exp_dip_report},
        {"triple-probe", exp_triple_probe},
    };
    return reg;
}

}  // namespace

MeasureSpec measure_from_arg(const std::string& arg) {
    if (arg.rfind("measure", 0) == 0) return parse_measure(arg);
    std::istringstream is(arg);
    std::string head, rest;
    is >> head;
    std::getline(is, rest);
    if (!rest.empty() && rest[0] == ' ') rest = rest.substr(1);
    if (head == "uniform") return MeasureSpec::uniform();
    if (head == "bernoulli") return MeasureSpec::bernoulli(Rational::parse(rest));
    if (head == "sigma-mixture") return MeasureSpec::sigma_mixture();
    if (head == "trivial-mixture") return MeasureSpec::trivial_mixture();
    if (head == "slow-growth") return MeasureSpec::slow_growth(std::stoull(rest));
    if (head == "renewal") return MeasureSpec::renewal(std::stoi(rest));
    if (head == "dirac-zeros")
        return MeasureSpec::dirac(SequenceSpec::periodic(BitString(), BitString("0")));
    throw InvalidManifest("cannot interpret measure argument: " + arg);
}

ExperimentOutputs run_experiment(const ExperimentManifest& manifest, unsigned threads) {
    auto it = registry().find(manifest.name);
    if (it == registry().end()) throw UnknownExperiment(manifest.name);
    ExperimentOutputs outputs = it->second(manifest, threads == 0 ? 1 : threads);
    if (!manifest.out_dir.empty()) {
        std::filesystem::create_directories(manifest.out_dir);
        for (const auto& [file, content] : outputs) {
            std::ofstream out(std::filesystem::path(manifest.out_dir) / file,
                              std::ios::binary);
            if (!out) throw Error("cannot write output " + file);
            out << content;
        }
    }
    return outputs;
}

ExperimentManifest parse_manifest(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw InvalidManifest(e.what());
    }
    ExperimentManifest m;
    if (!doc.contains("name")) throw InvalidManifest("manifest lacks 'name'");
    m.name = doc["name"].get<std::string>();
    if (doc.contains("seed")) m.seed = doc["seed"].get<uint64_t>();
    if (doc.contains("parameters"))
        for (auto& [k, v] : doc["parameters"].items())
            m.parameters[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return m;
}

std::string print_manifest(const ExperimentManifest& manifest) {
    json doc;
    doc["name"] = manifest.name;
    doc["seed"] = manifest.seed;
    json params = json::object();
    for (const auto& [k, v] : manifest.parameters) params[k] = v;
    doc["parameters"] = params;
    return doc.dump(2) + "\n";
}

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

}  // namespace cantorlab
