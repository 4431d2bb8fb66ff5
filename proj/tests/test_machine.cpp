#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cantorlab/complexity.hpp"
#include "cantorlab/rational.hpp"
#include "cantorlab/sequence.hpp"

using namespace cantorlab;

namespace {

size_t floor_log2(size_t v) {
    size_t e = 0;
    while (v >>= 1) ++e;
    return e;
}

}  // namespace

TEST_CASE("raw machine semantics: literal, run, interpreter") {
    Budget b{20, 512};
    // Plain literal: mode 00 + payload.
    RunResult r = run_raw(MachineKind::Plain, "00101", "", b);
    CHECK(r.status == RunResult::Status::Halted);
    CHECK(r.output == "101");
    // Plain run mode: 10 + sym + numeral (emits sym^(m+1)).
    r = run_raw(MachineKind::Plain, "100111", "", b);
    CHECK(r.output == std::string(8, '0'));
    r = run_raw(MachineKind::Plain, "101", "", b);
    CHECK(r.output == "1");
    // Mode 11 is undefined.
    CHECK(run_raw(MachineKind::Plain, "1101", "", b).status == RunResult::Status::Dead);
    // Plain interpreter: emit-0 emit-1, implicit halt at the leftover bit.
    r = run_raw(MachineKind::Plain, std::string("01") + "000" + "001" + "1", "", b);
    CHECK(r.status == RunResult::Status::Halted);
    CHECK(r.output == "01");
    // duplicate-output-suffix: emit 0, emit 1, dup last 2.
    r = run_raw(MachineKind::Plain, std::string("01") + "000" + "001" + "100" + "001", "", b);
    CHECK(r.output == "0101");
    // push-counter 2 / decrement-jump one slot back over emit-1: two 1s.
    r = run_raw(MachineKind::Plain,
                std::string("01") + "010" + "000" + "001" + "011" + "000", "", b);
    CHECK(r.output == "11");
    // Jumping back two slots re-executes the push immediate as emit-0.
    r = run_raw(MachineKind::Plain,
                std::string("01") + "010" + "000" + "001" + "011" + "001", "", b);
    CHECK(r.output == "101");
    // decrement-jump with an empty stack dies.
    CHECK(run_raw(MachineKind::Plain, std::string("01") + "011" + "000", "", b).status ==
          RunResult::Status::Dead);
    // duplicate beyond the output dies.
    CHECK(run_raw(MachineKind::Plain, std::string("01") + "100" + "111", "", b).status ==
          RunResult::Status::Dead);
}

TEST_CASE("prefix machine demands bits and halts exactly") {
    Budget b{22, 512};
    // Literal: gamma(n+1) then n bits. gamma(3) = 011 -> two payload bits.
    RunResult r = run_raw(MachineKind::PrefixFree, "0001110", "", b);
    CHECK(r.status == RunResult::Status::Halted);
    CHECK(r.consumed == 7);
    CHECK(r.output == "10");
    // Asking for a longer string leaves the tail unread (proper extensions
    // are outside the domain).
    r = run_raw(MachineKind::PrefixFree, "000111011", "", b);
    CHECK(r.status == RunResult::Status::Halted);
    CHECK(r.consumed == 7);
    // Too short: demands more.
    r = run_raw(MachineKind::PrefixFree, "00011", "", b);
    CHECK(r.status == RunResult::Status::NeedMore);
    // Run mode: 10 + sym + gamma(v): emits sym^v.
    r = run_raw(MachineKind::PrefixFree, std::string("10") + "0" + "0001000", "", b);
    CHECK(r.output == std::string(8, '0'));
    CHECK(r.consumed == 10);
    // Interpreter: read-opcode echoes an input bit; halt consumes exactly.
    r = run_raw(MachineKind::PrefixFree, std::string("01") + "110" + "1" + "101", "", b);
    CHECK(r.status == RunResult::Status::Halted);
    CHECK(r.output == "1");
    CHECK(r.consumed == 9);
}

TEST_CASE("normalized machine wraps raw programs") {
    Budget b{20, 512};
    // U(1p) = V(p): raw "00101" is literal mode with payload "101".
    auto out = run_normalized(MachineKind::Plain, "100101", "", b);
    REQUIRE(out.has_value());
    CHECK(*out == "101");
    // U(0p) = 0^{|V(p)|}.
    out = run_normalized(MachineKind::Plain, "000101", "", b);
    REQUIRE(out.has_value());
    CHECK(*out == "000");
    CHECK_FALSE(run_normalized(MachineKind::Plain, "", "", b).has_value());
}

TEST_CASE("default tables: coverage, normalization, bounds, witnesses") {
    const MachineLab& lab = default_lab();

    // Literal coverage: every string of length <= 8 has a value.
    for (size_t n = 0; n <= 8; ++n)
        for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
            std::string x(n, '0');
            for (size_t i = 0; i < n; ++i) x[i] = (v >> (n - 1 - i)) & 1 ? '1' : '0';
            CHECK(lab.plain.has(x));
            CHECK(lab.prefix.has(x));
        }
    CHECK(lab.plain.full_coverage() >= 8);
    CHECK(lab.prefix.full_coverage() >= 8);

    // Normalization: value(0^n) <= value(x), both kinds, all covered n.
    for (const ComplexityTable* t : {&lab.plain, &lab.prefix}) {
        size_t cover = t->full_coverage();
        for (size_t n = 0; n <= std::min<size_t>(cover, 10); ++n) {
            unsigned zn = t->value_of_length(n);
            for (const auto& [x, e] : t->values)
                if (x.size() == n) CHECK(zn <= e.value);
        }
    }

    // Literal-mode upper bounds with machine constants <= 4.
    for (const auto& [x, e] : lab.plain.values)
        CHECK(e.value <= x.size() + 4);
    for (const auto& [x, e] : lab.prefix.values)
        CHECK(e.value <= x.size() + 2 * floor_log2(x.size() + 1) + 4);

    // Every witness reproduces its string when re-executed.
    for (const ComplexityTable* t : {&lab.plain, &lab.prefix})
        for (const auto& [x, e] : t->values) {
            auto out = run_normalized(t->kind, e.witness, "", t->budget);
            REQUIRE(out.has_value());
            CHECK(*out == x);
            CHECK(e.witness.size() == e.value);
        }
}

TEST_CASE("prefix domain is an antichain satisfying Kraft") {
    const ComplexityTable& t = default_lab().prefix;
    REQUIRE(!t.raw_domain.empty());
    std::vector<std::string> domain = t.raw_domain;  // already sorted at build
    for (size_t i = 0; i + 1 < domain.size(); ++i)
        CHECK_FALSE(domain[i + 1].compare(0, domain[i].size(), domain[i]) == 0);
    Rational kraft(0);
    for (const std::string& p : domain) kraft += Rational::pow2(-static_cast<long>(p.size()));
    CHECK(kraft <= Rational(1));
}

TEST_CASE("budget monotonicity in steps and length") {
    Budget small{16, 256}, bigger_steps{16, 512}, longer{18, 256};
    auto t_small = enumerate_machine(MachineKind::Plain, small);
    auto t_steps = enumerate_machine(MachineKind::Plain, bigger_steps);
    auto t_longer = enumerate_machine(MachineKind::Plain, longer);
    for (const auto& [x, e] : t_small.values) {
        CHECK(t_steps.value(x) <= e.value);
        CHECK(t_longer.value(x) <= e.value);
    }
    auto p_small = enumerate_machine(MachineKind::PrefixFree, small);
    auto p_steps = enumerate_machine(MachineKind::PrefixFree, bigger_steps);
    for (const auto& [x, e] : p_small.values) CHECK(p_steps.value(x) <= e.value);
}

TEST_CASE("compressible versus pseudo-random strings") {
    const MachineLab& lab = default_lab();
    std::string random8 = SequenceSpec::pseudo_random(BitString(), 0xC0FFEE).prefix(8).str();
    REQUIRE(random8 != std::string(8, '0'));
    CHECK(lab.plain.value(std::string(8, '0')) < lab.plain.value(random8));
    CHECK(lab.prefix.value(std::string(8, '0')) < lab.prefix.value(random8));
    // Long runs stay cheap (run mode), far below their length.
    CHECK(lab.prefix.value(std::string(64, '0')) < 24);
    CHECK(lab.prefix.value(std::string(100, '1')) < 24);
}

TEST_CASE("counting bounds and the frozen uniform constant") {
    const MachineLab& lab = default_lab();
    CountingReport report = counting_check(lab.plain, lab.prefix, 8, 6);
    CHECK(report.plain_ok);
    for (const auto& [r, count] : report.plain_counts)
        CHECK(count <= (size_t{1} << r) - 1);
    CHECK(report.uniform_c >= 0);
    // The uniform constant is a regression value for the committed machine.
    CHECK(report.uniform_c <= 2);
    CHECK_THROWS_AS(counting_check(lab.plain, lab.prefix, 20, 6), CoverageGap);
}

TEST_CASE("conditional tables and the triple probe") {
    const MachineLab& lab = default_lab();
    // The aux-copy opcode reproduces the condition string: C(0^n | n) is flat.
    for (int n = 3; n <= kDefaultCondMaxN; ++n) {
        std::string zn(static_cast<size_t>(n), '0');
        CHECK(lab.plain.cond_value("n", n, zn) == 6);
        // Conditioning never hurts on the plain machine (opcode 111 is a
        // true no-op, so every unconditioned program has a same-length twin).
        for (const auto& [x, e] : lab.plain.cond_values.at({"n", n}))
            if (lab.plain.has(x)) CHECK(e.value <= lab.plain.value(x));
    }
    auto probe = probe_triple_condition(lab, 8);
    CHECK(probe.size() == 9);
    for (auto& [n, v] : probe) CHECK(v >= 3);
    CHECK_THROWS_AS(lab.prefix.cond_value("(n,K(n))", 99, "0"), CoverageGap);
}

TEST_CASE("golden tables regenerate bit-exactly") {
    const MachineLab& lab = default_lab();
    std::string dir = CANTORLAB_GOLDEN_DIR;
    CHECK(golden_serialize(lab.plain) == golden_read_file(dir + "/plain.tsv"));
    CHECK(golden_serialize(lab.prefix) == golden_read_file(dir + "/prefix.tsv"));
}

TEST_CASE("budget ceilings are enforced") {
    CHECK_THROWS_AS(enumerate_machine(MachineKind::Plain, Budget{30, 512}), BudgetExceeded);
    CHECK_THROWS_AS(run_raw(MachineKind::Plain, "00", "", Budget{20, 1u << 20}),
                    BudgetExceeded);
}
