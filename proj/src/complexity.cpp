#include "cantorlab/complexity.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "cantorlab/errors.hpp"

namespace cantorlab {

unsigned ComplexityTable::value(const std::string& x) const {
    auto it = values.find(x);
    if (it == values.end()) throw CoverageGap("no value for '" + x + "'");
    return it->second.value;
}

const ComplexityTable::Entry& ComplexityTable::entry(const std::string& x) const {
    auto it = values.find(x);
    if (it == values.end()) throw CoverageGap("no value for '" + x + "'");
    return it->second;
}

bool ComplexityTable::has_cond(const std::string& tag, int n, const std::string& x) const {
    auto it = cond_values.find({tag, n});
    return it != cond_values.end() && it->second.count(x) > 0;
}

unsigned ComplexityTable::cond_value(const std::string& tag, int n,
                                     const std::string& x) const {
    auto it = cond_values.find({tag, n});
    if (it == cond_values.end()) throw CoverageGap("no condition (" + tag + ", n=" +
                                                   std::to_string(n) + ")");
    auto jt = it->second.find(x);
    if (jt == it->second.end())
        throw CoverageGap("no conditional value for '" + x + "' given " + tag);
    return jt->second.value;
}

size_t ComplexityTable::full_coverage() const {
    for (size_t n = 0;; ++n) {
        size_t count = 0;
        for (const auto& [x, e] : values)
            if (x.size() == n) ++count;
        if (count != (size_t{1} << n)) return n == 0 ? 0 : n - 1;
        if (n > 30) return n;
    }
}

std::vector<std::pair<std::string, ComplexityTable::Entry>>
ComplexityTable::sorted_entries() const {
    std::vector<std::pair<std::string, Entry>> out(values.begin(), values.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

namespace {

// Witness preference: shorter program, then lexicographically smaller.
bool better(const std::string& candidate, unsigned cand_len, const ComplexityTable::Entry& e) {
    if (cand_len != e.value) return cand_len < e.value;
    return candidate < e.witness;
}

struct RawTables {
    // output -> best raw program
    std::unordered_map<std::string, std::string> outputs;
    // output length -> best raw program among all outputs of that length
    std::unordered_map<size_t, std::string> by_length;
    std::vector<std::string> domain;  // prefix kind: halting programs
};

void record(RawTables& t, const std::string& program, const std::string& output) {
    auto consider = [&](std::unordered_map<std::string, std::string>& m,
                        const std::string& key) {
        auto it = m.find(key);
        if (it == m.end() || program.size() < it->second.size() ||
            (program.size() == it->second.size() && program < it->second))
            m[key] = program;
    };
    consider(t.outputs, output);
    auto it = t.by_length.find(output.size());
    if (it == t.by_length.end() || program.size() < it->second.size() ||
        (program.size() == it->second.size() && program < it->second))
        t.by_length[output.size()] = program;
}

// mode_filter: empty = all modes; otherwise only programs starting with it
// (used to re-enumerate the aux-reading interpreter mode under a condition).
RawTables enumerate_raw(MachineKind kind, const Budget& raw_budget, const std::string& aux,
                        const std::string& mode_filter) {
    RawTables tables;
    if (kind == MachineKind::Plain) {
        std::string program;
        for (size_t len = mode_filter.size(); len <= raw_budget.max_program_length; ++len) {
            program.assign(len, '0');
            for (size_t i = 0; i < mode_filter.size(); ++i) program[i] = mode_filter[i];
            size_t free_bits = len - mode_filter.size();
            for (uint64_t v = 0;; ++v) {
                for (size_t i = 0; i < free_bits; ++i)
                    program[mode_filter.size() + i] =
                        (v >> (free_bits - 1 - i)) & 1 ? '1' : '0';
                RunResult r = run_raw(kind, program, aux, raw_budget);
                if (r.status == RunResult::Status::Halted) record(tables, program, r.output);
                if (free_bits == 0 || v + 1 == (uint64_t{1} << free_bits)) break;
            }
        }
        return tables;
    }
    // Prefix machine: depth-first search over the demand tree. A prefix that
    // halts is in the domain (and no extension of it is); NeedMore extends.
    std::string program = mode_filter;
    auto explore = [&](auto&& self) -> void {
        RunResult r = run_raw(kind, program, aux, raw_budget);
        if (r.status == RunResult::Status::Dead) return;
        if (r.status == RunResult::Status::Halted) {
            if (r.consumed == program.size()) {
                record(tables, program, r.output);
                tables.domain.push_back(program);
            }
            return;  // consumed < size means a shorter program already halts
        }
        if (program.size() >= raw_budget.max_program_length) return;
        program += '0';
        self(self);
        program.back() = '1';
        self(self);
        program.pop_back();
    };
    explore(explore);
    return tables;
}

void check_antichain(std::vector<std::string>& domain) {
    std::sort(domain.begin(), domain.end());
    for (size_t i = 0; i + 1 < domain.size(); ++i) {
        const std::string& a = domain[i];
        const std::string& b = domain[i + 1];
        if (b.size() >= a.size() && b.compare(0, a.size(), a) == 0)
            throw NonPrefixFreeDomain(a + " is a prefix of " + b);
    }
}

// Raw results -> normalized table: U(1p) = M(p), U(0p) = 0^{|M(p)|}.
std::unordered_map<std::string, ComplexityTable::Entry> normalize(const RawTables& raw) {
    std::unordered_map<std::string, ComplexityTable::Entry> out;
    auto consider = [&](const std::string& x, const std::string& uprog) {
        auto it = out.find(x);
        unsigned len = static_cast<unsigned>(uprog.size());
        if (it == out.end())
            out[x] = {len, uprog};
        else if (better(uprog, len, it->second))
            it->second = {len, uprog};
    };
    for (const auto& [x, p] : raw.outputs) consider(x, "1" + p);
    for (const auto& [n, p] : raw.by_length) consider(std::string(n, '0'), "0" + p);
    return out;
}

RawTables merge_raw(const RawTables& base_non01, RawTables mode01) {
    for (const auto& [x, p] : base_non01.outputs) record(mode01, p, x);
    // by_length entries were updated by record; domain union for prefix kind.
    mode01.domain.insert(mode01.domain.end(), base_non01.domain.begin(),
                         base_non01.domain.end());
    return mode01;
}

}  // namespace

ComplexityTable enumerate_machine(MachineKind kind, const Budget& budget,
                                  const std::vector<Condition>& conditions) {
    if (budget.max_program_length > kMaxProgramLength || budget.max_steps > kMaxSteps)
        throw BudgetExceeded("budget above configured ceiling");
    Budget raw_budget{budget.max_program_length - 1, budget.max_steps};

    ComplexityTable table;
    table.kind = kind;
    table.budget = budget;

    RawTables all = enumerate_raw(kind, raw_budget, "", "");
    if (kind == MachineKind::PrefixFree) {
        check_antichain(all.domain);
        table.raw_domain = all.domain;
    }
    table.values = normalize(all);
    if (!conditions.empty()) attach_conditions(table, conditions);
    return table;
}

void attach_conditions(ComplexityTable& table, const std::vector<Condition>& conditions) {
    Budget raw_budget{table.budget.max_program_length - 1, table.budget.max_steps};
    // Literal and run modes never read the aux tape; only the interpreter
    // mode is re-enumerated per condition.
    RawTables base_non01;
    for (const std::string& mode : {"00", "10"}) {
        RawTables part = enumerate_raw(table.kind, raw_budget, "", mode);
        for (const auto& [x, p] : part.outputs) record(base_non01, p, x);
        base_non01.domain.insert(base_non01.domain.end(), part.domain.begin(),
                                 part.domain.end());
    }
    for (const Condition& cond : conditions) {
        RawTables with_aux = enumerate_raw(table.kind, raw_budget, cond.aux, "01");
        RawTables merged = merge_raw(base_non01, std::move(with_aux));
        if (table.kind == MachineKind::PrefixFree) check_antichain(merged.domain);
        table.cond_values[{cond.tag, cond.n}] = normalize(merged);
    }
}

std::vector<Condition> standard_conditions(const std::vector<std::string>& tags, int max_n,
                                           const ComplexityTable* plain,
                                           const ComplexityTable* prefix) {
    std::vector<Condition> out;
    for (const std::string& tag : tags) {
        for (int n = 0; n <= max_n; ++n) {
            Condition c{tag, n, ""};
            if (tag == "n") {
                c.aux = std::string(static_cast<size_t>(n), '0');
            } else if (tag == "(n,C(n))") {
                if (!plain) throw CoverageGap("(n,C(n)) needs the plain table");
                c.aux = elias_gamma(static_cast<unsigned long>(n) + 1) +
                        elias_gamma(plain->value_of_length(n) + 1);
            } else if (tag == "(n,K(n))") {
                if (!prefix) throw CoverageGap("(n,K(n)) needs the prefix table");
                c.aux = elias_gamma(static_cast<unsigned long>(n) + 1) +
                        elias_gamma(prefix->value_of_length(n) + 1);
            } else {
                throw Error("unknown condition tag: " + tag);
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

MachineLab build_lab(Budget plain_budget, Budget prefix_budget, int cond_max_n) {
    MachineLab lab;
    lab.plain = enumerate_machine(MachineKind::Plain, plain_budget);
    lab.prefix = enumerate_machine(MachineKind::PrefixFree, prefix_budget);
    attach_conditions(lab.plain, standard_conditions({"n"}, cond_max_n, nullptr, nullptr));
    attach_conditions(lab.prefix, standard_conditions({"(n,C(n))", "(n,K(n))"}, cond_max_n,
                                                      &lab.plain, &lab.prefix));
    return lab;
}

const MachineLab& default_lab() {
    static std::once_flag flag;
    static MachineLab* lab = nullptr;
    std::call_once(flag, [] {
        lab = new MachineLab(build_lab(default_budget(MachineKind::Plain),
                                       default_budget(MachineKind::PrefixFree),
                                       kDefaultCondMaxN));
    });
    return *lab;
}

namespace {

bool golden_keep(const std::string& x) {
    if (x.size() <= 10) return true;
    if (x.size() > 128) return false;
    return x.find('1') == std::string::npos || x.find('0') == std::string::npos;
}

std::string display(const std::string& x) { return x.empty() ? "-" : x; }

void serialize_map(std::ostringstream& os, const std::string& prefix,
                   const std::unordered_map<std::string, ComplexityTable::Entry>& m) {
    std::vector<std::pair<std::string, ComplexityTable::Entry>> rows;
    for (const auto& kv : m)
        if (golden_keep(kv.first)) rows.push_back(kv);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    for (const auto& [x, e] : rows)
        os << prefix << display(x) << "\t" << e.value << "\t" << e.witness << "\n";
}

}  // namespace

std::string golden_serialize(const ComplexityTable& table) {
    std::ostringstream os;
    os << "# cantorlab complexity table v1\n";
    os << "# kind " << (table.kind == MachineKind::Plain ? "plain" : "prefix") << "\n";
    os << "# budget " << table.budget.max_program_length << " " << table.budget.max_steps
       << "\n";
    serialize_map(os, "", table.values);
    for (const auto& [key, m] : table.cond_values)
        serialize_map(os, "cond\t" + key.first + "\t" + std::to_string(key.second) + "\t", m);
    return os.str();
}

void golden_write(const ComplexityTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << golden_serialize(table);
}

std::string golden_read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CountingReport counting_check(const ComplexityTable& plain, const ComplexityTable& prefix,
                              int max_n, int max_deficit, int max_r) {
    CountingReport report;
    // Plain counting: #{x : C(x) < r} <= 2^r - 1, over the whole table.
    for (int r = 1; r <= max_r; ++r) {
        size_t count = 0;
        for (const auto& [x, e] : plain.values)
            if (e.value < static_cast<unsigned>(r)) ++count;
        report.plain_counts.emplace_back(r, count);
        if (count > (size_t{1} << r) - 1) report.plain_ok = false;
    }
    // Prefix deficiency counting per length.
    for (int n = 0; n <= max_n; ++n) {
        for (const std::string& x : [&] {
                 std::vector<std::string> v;
                 std::string s(static_cast<size_t>(n), '0');
                 for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
                     for (int i = 0; i < n; ++i)
                         s[static_cast<size_t>(i)] = (bits >> (n - 1 - i)) & 1 ? '1' : '0';
                     v.push_back(s);
                 }
                 return v;
             }()) {
            prefix.value(x);  // CoverageGap if missing
        }
        unsigned kn = prefix.value_of_length(static_cast<size_t>(n));
        for (int d = 0; d <= max_deficit; ++d) {
            long threshold = static_cast<long>(n) + static_cast<long>(kn) - d;
            size_t count = 0;
            for (const auto& [x, e] : prefix.values)
                if (x.size() == static_cast<size_t>(n) &&
                    static_cast<long>(e.value) <= threshold)
                    ++count;
            report.prefix_counts.emplace_back(n, d, count);
        }
    }
    int c = 0;
    for (const auto& [n, d, count] : report.prefix_counts) {
        while (count > 0 && (static_cast<long>(n) + c - d < 0 ||
                             count > (size_t{1} << std::min(60l, static_cast<long>(n) + c - d))))
            ++c;
    }
    report.uniform_c = c;
    return report;
}

std::vector<std::pair<int, unsigned>> probe_triple_condition(const MachineLab& lab, int max_n) {
    std::vector<std::pair<int, unsigned>> rows;
    for (int n = 0; n <= max_n; ++n) {
        unsigned cn = lab.plain.value_of_length(static_cast<size_t>(n));
        std::string target(cn, '0');  // C(n) as the string 0^{C(n)}
        rows.emplace_back(n, lab.prefix.cond_value("(n,K(n))", n, target));
    }
    return rows;
}

}  // namespace cantorlab
