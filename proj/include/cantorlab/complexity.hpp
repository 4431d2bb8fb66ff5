#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cantorlab/machine.hpp"

namespace cantorlab {

// A standard condition preloaded on the auxiliary tape.
//   "n"         -> 0^n
//   "(n,C(n))"  -> gamma(n+1) gamma(C(0^n)+1)
//   "(n,K(n))"  -> gamma(n+1) gamma(K(0^n)+1)
struct Condition {
    std::string tag;
    int n = 0;
    std::string aux;

    bool operator<(const Condition& o) const {
        return std::tie(tag, n) < std::tie(o.tag, o.n);
    }
};

// Exact resource-bounded complexities from exhaustively enumerating the
// normalized machine U. Values are bit-identical across platforms; witnesses
// are U-programs that reproduce their strings when re-executed.
class ComplexityTable {
  public:
    struct Entry {
        unsigned value = 0;
        std::string witness;  // normalized program, '0'/'1'
    };

    MachineKind kind;
    Budget budget;
    bool normalized = true;

    std::unordered_map<std::string, Entry> values;
    std::map<std::pair<std::string, int>, std::unordered_map<std::string, Entry>> cond_values;
    // Prefix kind only: the raw machine's halting domain (an antichain).
    std::vector<std::string> raw_domain;

    bool has(const std::string& x) const { return values.count(x) > 0; }
    unsigned value(const std::string& x) const;
    const Entry& entry(const std::string& x) const;
    // The paper's identification of n with 0^n.
    unsigned value_of_length(size_t n) const { return value(std::string(n, '0')); }

    bool has_cond(const std::string& tag, int n, const std::string& x) const;
    unsigned cond_value(const std::string& tag, int n, const std::string& x) const;

    // Largest n such that every string of length <= n has a value.
    size_t full_coverage() const;

    // All (x, entry) pairs sorted by length then lexicographically.
    std::vector<std::pair<std::string, Entry>> sorted_entries() const;
};

// Exhaustive enumeration of the normalized machine within the budget.
// Conditions are re-enumerations of the interpreter mode with the aux tape
// loaded; literal/run modes do not read it and are merged from the base run.
ComplexityTable enumerate_machine(MachineKind kind, const Budget& budget,
                                  const std::vector<Condition>& conditions = {});
void attach_conditions(ComplexityTable& table, const std::vector<Condition>& conditions);

// The standard conditions for n = 0..max_n; needs base tables for C(n)/K(n).
std::vector<Condition> standard_conditions(const std::vector<std::string>& tags, int max_n,
                                           const ComplexityTable* plain,
                                           const ComplexityTable* prefix);

// Both machines at the default budgets with the standard condition tags
// ("n" on the plain machine; "(n,C(n))" and "(n,K(n))" on the prefix one).
struct MachineLab {
    ComplexityTable plain;
    ComplexityTable prefix;
};
MachineLab build_lab(Budget plain_budget, Budget prefix_budget, int cond_max_n);

// Process-wide lab at the default budgets (built once, immutable).
const MachineLab& default_lab();
constexpr int kDefaultCondMaxN = 10;

// Serialization used for the golden regression files: entries with
// |x| <= 12 or x a uniform run, sorted, tab-separated.
std::string golden_serialize(const ComplexityTable& table);
void golden_write(const ComplexityTable& table, const std::string& path);
std::string golden_read_file(const std::string& path);

// ---- counting-bound verifiers ---------------------------------------------

struct CountingReport {
    // (r, #{x : C(x) < r}), bound 2^r - 1.
    std::vector<std::pair<int, size_t>> plain_counts;
    bool plain_ok = true;
    // (n, d, #{|x|=n : K(x) <= n + K(n) - d}).
    std::vector<std::tuple<int, int, size_t>> prefix_counts;
    // Smallest integer c >= 0 with count <= 2^{n+c-d} for every row.
    int uniform_c = 0;
};
CountingReport counting_check(const ComplexityTable& plain, const ComplexityTable& prefix,
                              int max_n, int max_deficit, int max_r = 12);

// K(C(n) | n, K(n)) per n: a diagnostic series (no pass/fail threshold).
std::vector<std::pair<int, unsigned>> probe_triple_condition(const MachineLab& lab, int max_n);

}  // namespace cantorlab
