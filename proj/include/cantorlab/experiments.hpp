#pragma once

#include <map>
#include <string>

#include "cantorlab/measure.hpp"

namespace cantorlab {

// A named, reproducible experiment. The manifest fully determines every
// output byte: seeds are explicit (no wall-clock entropy) and aggregation is
// order-independent, so the thread count cannot change results.
struct ExperimentManifest {
    std::string name;
    std::map<std::string, std::string> parameters;
    uint64_t seed = 0;
    std::string out_dir;  // optional; empty = do not write, just return
};

// filename -> file content.
using ExperimentOutputs = std::map<std::string, std::string>;

// Runs a registered experiment; writes outputs under out_dir when set.
// Throws UnknownExperiment / InvalidManifest / module errors.
ExperimentOutputs run_experiment(const ExperimentManifest& manifest, unsigned threads = 1);

// Manifest (de)serialization: JSON with keys name, parameters, seed.
ExperimentManifest parse_manifest(const std::string& json_text);
std::string print_manifest(const ExperimentManifest& manifest);

// Registered experiment names.
std::vector<std::string> experiment_names();

// "uniform", "bernoulli 1/3", ... shorthand, or a full measure document.
MeasureSpec measure_from_arg(const std::string& arg);

}  // namespace cantorlab
