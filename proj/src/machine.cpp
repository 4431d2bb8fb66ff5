#include "cantorlab/machine.hpp"

#include <vector>

#include "cantorlab/errors.hpp"

namespace cantorlab {

Budget default_budget(MachineKind kind) {
    return kind == MachineKind::Plain ? Budget{20, 512} : Budget{22, 512};
}

std::string elias_gamma(unsigned long v) {
    if (v == 0) throw Error("elias_gamma of 0");
    std::string bin;
    for (unsigned long t = v; t > 0; t >>= 1) bin += (t & 1) ? '1' : '0';
    std::string out(bin.size() - 1, '0');
    for (auto it = bin.rbegin(); it != bin.rend(); ++it) out += *it;
    return out;
}

namespace {

constexpr size_t kStackCap = 8;

// Simulator shared by both machine kinds. For the plain machine the program
// is the complete input and running off its end is an implicit halt; for the
// prefix machine bits are demanded on the fly and running out of supplied
// bits yields NeedMore.
struct Sim {
    const std::string& program;
    const std::string& aux;
    const Budget& budget;
    bool prefix_mode;

    size_t frontier = 0;  // bits consumed from the stream (prefix machine)
    std::string out;
    size_t steps = 0;

    bool budget_dead = false;
    bool need_more = false;

    // Demands the next stream bit. Returns -1 when unavailable.
    int demand() {
        if (frontier >= program.size()) {
            need_more = true;
            return -1;
        }
        if (frontier + 1 > budget.max_program_length) {
            budget_dead = true;
            return -1;
        }
        return program[frontier++] == '1' ? 1 : 0;
    }

    bool step_budget(size_t cost) {
        steps += cost;
        return steps <= budget.max_steps;
    }

    bool emit(char c) {
        if (!step_budget(1)) return false;
        out += c;
        return true;
    }

    RunResult result(RunResult::Status s) {
        // Running out of supplied bits is NeedMore only for the demand-driven
        // prefix machine; the plain machine's program is complete by definition.
        if (need_more && !budget_dead && prefix_mode)
            return {RunResult::Status::NeedMore, "", frontier};
        if (need_more || budget_dead) return {RunResult::Status::Dead, "", frontier};
        if (s == RunResult::Status::Halted) return {s, out, frontier};
        return {RunResult::Status::Dead, "", frontier};
    }
};

// Gamma decode on the stream; 0 on failure (sets flags in sim).
unsigned long gamma_decode(Sim& sim) {
    size_t zeros = 0;
    for (;;) {
        int b = sim.demand();
        if (b < 0) return 0;
        if (b == 1) break;
        if (++zeros > 24) {  // runaway header
            sim.budget_dead = true;
            return 0;
        }
    }
    unsigned long v = 1;
    for (size_t i = 0; i < zeros; ++i) {
        int b = sim.demand();
        if (b < 0) return 0;
        v = (v << 1) | static_cast<unsigned long>(b);
    }
    return v;
}

RunResult run_literal_plain(Sim& sim) {
    // mode 00: remaining bits are the output.
    while (sim.frontier < sim.program.size()) {
        int b = sim.demand();
        if (b < 0) return sim.result(RunResult::Status::Dead);
        if (!sim.emit(b ? '1' : '0')) return sim.result(RunResult::Status::Dead);
    }
    return sim.result(RunResult::Status::Halted);
}

RunResult run_literal_prefix(Sim& sim) {
    // mode 00: gamma header (length + 1), then that many literal bits.
    unsigned long v = gamma_decode(sim);
    if (v == 0) return sim.result(RunResult::Status::Dead);
    unsigned long n = v - 1;
    for (unsigned long i = 0; i < n; ++i) {
        int b = sim.demand();
        if (b < 0) return sim.result(RunResult::Status::Dead);
        if (!sim.emit(b ? '1' : '0')) return sim.result(RunResult::Status::Dead);
    }
    return sim.result(RunResult::Status::Halted);
}

RunResult run_run_mode(Sim& sim) {
    // mode 10: one symbol bit, then a count.
    int sym = sim.demand();
    if (sym < 0) return sim.result(RunResult::Status::Dead);
    unsigned long count;
    if (sim.prefix_mode) {
        unsigned long v = gamma_decode(sim);
        if (v == 0) return sim.result(RunResult::Status::Dead);
        count = v;  // emits sym^v, v >= 1
    } else {
        // Remaining bits as a binary numeral (leading zeros allowed,
        // empty = 0); emits sym^(m+1).
        unsigned long m = 0;
        while (sim.frontier < sim.program.size()) {
            int b = sim.demand();
            if (b < 0) return sim.result(RunResult::Status::Dead);
            if (m > kMaxSteps) {
                sim.budget_dead = true;
                return sim.result(RunResult::Status::Dead);
            }
            m = (m << 1) | static_cast<unsigned long>(b);
        }
        count = m + 1;
    }
    for (unsigned long i = 0; i < count; ++i)
        if (!sim.emit(sym ? '1' : '0')) return sim.result(RunResult::Status::Dead);
    return sim.result(RunResult::Status::Halted);
}

RunResult run_interpreter(Sim& sim) {
    // mode 01. The consumed bits after the mode field form the code buffer;
    // PC walks it in 3-bit units and may jump backwards. The prefix machine
    // demands code bits lazily and its READ opcode pulls one stream bit to
    // the output (landing in the buffer at the frontier, like any other bit).
    std::string buf;  // code consumed so far
    size_t pc = 0;
    std::vector<unsigned> stack;

    auto fetch = [&](size_t at, int width) -> int {
        // Value of buf[at .. at+width), demanding bits as needed; -1 on
        // failure.
        while (buf.size() < at + static_cast<size_t>(width)) {
            if (!sim.prefix_mode && sim.frontier >= sim.program.size()) return -2;
            int b = sim.demand();
            if (b < 0) return -1;
            buf += b ? '1' : '0';
        }
        int v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | (buf[at + i] == '1' ? 1 : 0);
        return v;
    };

    for (;;) {
        int op = fetch(pc, 3);
        if (op == -2) return sim.result(RunResult::Status::Halted);  // implicit halt (plain)
        if (op == -1) return sim.result(RunResult::Status::Dead);
        if (!sim.step_budget(1)) return sim.result(RunResult::Status::Dead);
        switch (op) {
            case 0:  // emit-0
                if (!sim.emit('0')) return sim.result(RunResult::Status::Dead);
                pc += 3;
                break;
            case 1:  // emit-1
                if (!sim.emit('1')) return sim.result(RunResult::Status::Dead);
                pc += 3;
                break;
            case 2: {  // push-counter, 3-bit immediate, pushes imm+2
                int imm = fetch(pc + 3, 3);
                if (imm == -2) return sim.result(RunResult::Status::Halted);
                if (imm == -1) return sim.result(RunResult::Status::Dead);
                if (stack.size() >= kStackCap) return sim.result(RunResult::Status::Dead);
                stack.push_back(static_cast<unsigned>(imm) + 2);
                pc += 6;
                break;
            }
            case 3: {  // decrement-jump, 3-bit immediate, back imm+1 slots
                int imm = fetch(pc + 3, 3);
                if (imm == -2) return sim.result(RunResult::Status::Halted);
                if (imm == -1) return sim.result(RunResult::Status::Dead);
                if (stack.empty()) return sim.result(RunResult::Status::Dead);
                if (--stack.back() == 0) {
                    stack.pop_back();
                    pc += 6;
                } else {
                    size_t back = 3 * (static_cast<size_t>(imm) + 1);
                    if (back > pc) return sim.result(RunResult::Status::Dead);
                    pc -= back;
                }
                break;
            }
            case 4: {  // duplicate-output-suffix, 3-bit immediate, last imm+1 bits
                int imm = fetch(pc + 3, 3);
                if (imm == -2) return sim.result(RunResult::Status::Halted);
                if (imm == -1) return sim.result(RunResult::Status::Dead);
                size_t j = static_cast<size_t>(imm) + 1;
                if (sim.out.size() < j) return sim.result(RunResult::Status::Dead);
                std::string tail = sim.out.substr(sim.out.size() - j);
                for (char c : tail)
                    if (!sim.emit(c)) return sim.result(RunResult::Status::Dead);
                pc += 6;
                break;
            }
            case 5:  // halt
                return sim.result(RunResult::Status::Halted);
            case 6:
                if (sim.prefix_mode) {
                    // read: demand one bit at the stream frontier and append
                    // it to the output. PC advances by 4: in straight-line
                    // execution the data bit occupies the slot right after
                    // the opcode.
                    int b = sim.demand();
                    if (b < 0) return sim.result(RunResult::Status::Dead);
                    buf += b ? '1' : '0';
                    if (!sim.emit(b ? '1' : '0')) return sim.result(RunResult::Status::Dead);
                    pc += 4;
                } else {  // aux-copy (no-op without a condition)
                    for (char c : sim.aux)
                        if (!sim.emit(c)) return sim.result(RunResult::Status::Dead);
                    pc += 3;
                }
                break;
            case 7:
                if (sim.prefix_mode) {  // aux-copy
                    for (char c : sim.aux)
                        if (!sim.emit(c)) return sim.result(RunResult::Status::Dead);
                }  // plain: reserved no-op
                pc += 3;
                break;
            default:
                return sim.result(RunResult::Status::Dead);
        }
    }
}

}  // namespace

RunResult run_raw(MachineKind kind, const std::string& program, const std::string& aux,
                  const Budget& budget) {
    if (budget.max_program_length > kMaxProgramLength || budget.max_steps > kMaxSteps)
        throw BudgetExceeded("budget above configured ceiling");
    Sim sim{program, aux, budget, kind == MachineKind::PrefixFree};
    int m0 = sim.demand();
    if (m0 < 0) return sim.result(RunResult::Status::Dead);
    int m1 = sim.demand();
    if (m1 < 0) return sim.result(RunResult::Status::Dead);
    int mode = (m0 << 1) | m1;
    RunResult r;
    switch (mode) {
        case 0:
            r = sim.prefix_mode ? run_literal_prefix(sim) : run_literal_plain(sim);
            break;
        case 1:
            r = run_interpreter(sim);
            break;
        case 2:
            r = run_run_mode(sim);
            break;
        default:
            r = sim.result(RunResult::Status::Dead);
    }
    // The plain machine's program is the complete input by definition.
    if (!sim.prefix_mode && r.status == RunResult::Status::Halted)
        r.consumed = program.size();
    return r;
}

std::optional<std::string> run_normalized(MachineKind kind, const std::string& program,
                                          const std::string& aux, const Budget& budget) {
    if (program.empty() || program.size() > budget.max_program_length) return std::nullopt;
    Budget raw_budget{budget.max_program_length - 1, budget.max_steps};
    RunResult r = run_raw(kind, program.substr(1), aux, raw_budget);
    if (r.status != RunResult::Status::Halted) return std::nullopt;
    if (kind == MachineKind::PrefixFree && r.consumed != program.size() - 1)
        return std::nullopt;  // proper extensions are outside the domain
    if (program[0] == '1') return r.output;
    return std::string(r.output.size(), '0');
}

}  // namespace cantorlab
