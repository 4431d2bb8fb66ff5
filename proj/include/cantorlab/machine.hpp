#pragma once

#include <optional>
#include <string>

namespace cantorlab {

enum class MachineKind { Plain, PrefixFree };

// Resource bounds. max_program_length applies to normalized (wrapped)
// programs; the raw machine below it gets one bit less.
struct Budget {
    unsigned max_program_length;
    unsigned max_steps;
};

constexpr unsigned kMaxProgramLength = 24;
constexpr unsigned kMaxSteps = 1u << 16;

Budget default_budget(MachineKind kind);

// Outcome of running the raw (pre-normalization) machine. For the prefix
// machine `consumed` is the number of input bits demanded; the domain is the
// set of strings on which the machine halts having consumed exactly the
// whole string, which is an antichain by construction.
struct RunResult {
    enum class Status { Halted, NeedMore, Dead };
    Status status = Status::Dead;
    std::string output;    // '0'/'1'
    size_t consumed = 0;
};

// Raw machines V (plain) and W (prefix-free); full semantics are frozen in
// docs/machine.md. `aux` is the read-only condition tape (empty when
// unconditioned; the aux-copy opcode is then a no-op).
RunResult run_raw(MachineKind kind, const std::string& program,
                  const std::string& aux, const Budget& budget);

// Normalized machine U: U(1p) = M(p) and U(0p) = 0^{|M(p)|}, so that
// value(0^n) <= value(x) holds for every x of length n. Returns the output
// iff `program` is exactly in U's domain under the budget.
std::optional<std::string> run_normalized(MachineKind kind, const std::string& program,
                                          const std::string& aux, const Budget& budget);

// Elias gamma code of v >= 1 ('0'/'1' string), used by the prefix literal
// and run modes and by condition-tape encodings.
std::string elias_gamma(unsigned long v);

}  // namespace cantorlab
