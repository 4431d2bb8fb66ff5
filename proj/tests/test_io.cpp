#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cantorlab/experiments.hpp"
#include "cantorlab/measure_io.hpp"
#include "cantorlab/rng.hpp"

using namespace cantorlab;

namespace {

// Random spec generator for the round-trip property (depth-bounded).
MeasureSpec random_spec(uint64_t key, int depth) {
    auto pick = [&](uint64_t salt, uint64_t mod) { return rng::draw(1234, key, salt) % mod; };
    int kind = static_cast<int>(pick(depth, depth <= 0 ? 7 : 11));
    switch (kind) {
        case 0: return MeasureSpec::uniform();
        case 1:
            return MeasureSpec::bernoulli(
                Rational(static_cast<long>(pick(1, 5)), 5 + static_cast<unsigned long>(pick(2, 4))));
        case 2: {
            Rational a(static_cast<long>(pick(3, 3) + 1), 7);
            return MeasureSpec::markov({a, Rational(1) - a},
                                       {{{Rational(1, 3), Rational(2, 3)},
                                         {Rational(3, 5), Rational(2, 5)}}});
        }
        case 3: {
            if (pick(4, 2))
                return MeasureSpec::dirac(SequenceSpec::periodic(
                    BitString(pick(5, 2) ? "10" : ""), BitString(pick(6, 2) ? "01" : "1")));
            return MeasureSpec::dirac(
                SequenceSpec::pseudo_random(BitString("00"), rng::draw(9, key, 7)));
        }
        case 4: return MeasureSpec::sigma_mixture();
        case 5: return MeasureSpec::trivial_mixture();
        case 6: return MeasureSpec::slow_growth(rng::draw(8, key, 8));
        case 7:
            return MeasureSpec::convex(
                {{Rational(1, 4), random_spec(rng::combine(key, 100), depth - 1)},
                 {Rational(3, 4), random_spec(rng::combine(key, 101), depth - 1)}});
        case 8:
            return MeasureSpec::product(random_spec(rng::combine(key, 102), depth - 1),
                                        random_spec(rng::combine(key, 103), depth - 1));
        case 9:
            return MeasureSpec::pushforward(
                pick(10, 2) ? TTReduction::bit_flip() : TTReduction::drop_first(),
                random_spec(rng::combine(key, 104), depth - 1));
        default:
            return MeasureSpec::localize(MeasureSpec::uniform(),
                                         BitString(pick(11, 2) ? "01" : "1"));
    }
}

}  // namespace

TEST_CASE("measure documents round-trip losslessly") {
    for (uint64_t i = 0; i < 200; ++i) {
        MeasureSpec spec = random_spec(i, 2);
        std::string text = print_measure(spec);
        MeasureSpec back = parse_measure(text);
        CHECK(back == spec);
        CHECK(print_measure(back) == text);
    }
}

TEST_CASE("explicit document examples parse") {
    MeasureSpec m = parse_measure(R"(
measure {
  kind convex
  term {
    weight 1/2
    measure { kind dirac sequence { kind periodic preamble "" period "0" } }
  }
  term {
    weight 1/2
    measure { kind bernoulli p 1/3 }
  }
}
)");
    CHECK(m.kind() == MeasureSpec::Kind::Convex);
    CHECK(eval(m, BitString("0")).exact() == Rational(1, 2) + Rational(1, 6));

    MeasureSpec r = parse_measure("measure { kind renewal truncation 4 }");
    CHECK(r.renewal_truncation() == 4);

    // Comments are allowed.
    MeasureSpec u = parse_measure("# fair coin\nmeasure { kind uniform }\n");
    CHECK(u.kind() == MeasureSpec::Kind::Uniform);
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_measure("measure { kind nonsense }"), ParseError);
    CHECK_THROWS_AS(parse_measure("measure { kind bernoulli }"), ParseError);
    CHECK_THROWS_AS(parse_measure("measure { kind uniform"), ParseError);
    CHECK_THROWS_AS(parse_measure("nonsense { }"), ParseError);
    CHECK_THROWS_AS(parse_measure("measure { kind uniform } trailing"), ParseError);
    // Weight violations surface as MalformedSpec from the validating factory.
    CHECK_THROWS_AS(parse_measure(R"(measure {
      kind convex
      term { weight 1/2 measure { kind uniform } }
      term { weight 1/3 measure { kind uniform } }
    })"),
                    MalformedSpec);
}

TEST_CASE("manifest json round-trip") {
    ExperimentManifest m;
    m.name = "sampler-mc";
    m.seed = 42;
    m.parameters = {{"depth", "4"}, {"samples", "1000"}, {"set", "0"}};
    ExperimentManifest back = parse_manifest(print_manifest(m));
    CHECK(back.name == m.name);
    CHECK(back.seed == m.seed);
    CHECK(back.parameters == m.parameters);
    CHECK_THROWS_AS(parse_manifest("{}"), InvalidManifest);
    CHECK_THROWS_AS(parse_manifest("not json"), InvalidManifest);
}

TEST_CASE("experiment outputs have the documented shapes") {
    ExperimentManifest m{"measure-eval", {{"measure", "uniform"}, {"depth", "3"}}, 0, ""};
    ExperimentOutputs out = run_experiment(m);
    REQUIRE(out.count("eval.csv"));
    // Header + column row + 15 cylinder rows for depth 3.
    size_t lines = std::count(out["eval.csv"].begin(), out["eval.csv"].end(), '\n');
    CHECK(lines == 2 + 15);
    // Masses sum to 1 per level: spot-check by reading back the level-3 rows.
    ExperimentManifest bad{"no-such-experiment", {}, 0, ""};
    CHECK_THROWS_AS(run_experiment(bad), UnknownExperiment);
    ExperimentManifest missing{"measure-eval", {}, 0, ""};
    CHECK_THROWS_AS(run_experiment(missing), InvalidManifest);
}

TEST_CASE("measure_from_arg shorthands agree with documents") {
    CHECK(measure_from_arg("uniform") == MeasureSpec::uniform());
    CHECK(measure_from_arg("bernoulli 1/3") == MeasureSpec::bernoulli(Rational(1, 3)));
    CHECK(measure_from_arg("renewal 4") == MeasureSpec::renewal(4));
    CHECK(measure_from_arg(print_measure(MeasureSpec::sigma_mixture())) ==
          MeasureSpec::sigma_mixture());
    CHECK_THROWS_AS(measure_from_arg("what"), InvalidManifest);
}
