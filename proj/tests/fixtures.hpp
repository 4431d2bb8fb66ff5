#pragma once

// Shared measure fixtures for the test and acceptance suites.

#include "cantorlab/measure.hpp"

namespace cantorlab::fixtures {

inline MeasureSpec markov() {
    return MeasureSpec::markov({Rational(3, 7), Rational(4, 7)},
                               {{{Rational(2, 3), Rational(1, 3)},
                                 {Rational(1, 4), Rational(3, 4)}}});
}

inline MeasureSpec dirac_zeros() {
    return MeasureSpec::dirac(SequenceSpec::periodic(BitString(), BitString("0")));
}

inline MeasureSpec dirac_alternating() {
    return MeasureSpec::dirac(SequenceSpec::periodic(BitString("1"), BitString("01")));
}

inline MeasureSpec convex_halves() {
    return MeasureSpec::convex(
        {{Rational(1, 2), dirac_zeros()},
         {Rational(1, 2),
          MeasureSpec::dirac(SequenceSpec::periodic(BitString(), BitString("1")))}});
}

// The ten-measure suite exercised by the exact-arithmetic oracle checks.
inline std::vector<MeasureSpec> suite() {
    return {
        MeasureSpec::uniform(),
        MeasureSpec::bernoulli(Rational(1, 3)),
        MeasureSpec::bernoulli(Rational(3, 4)),
        markov(),
        dirac_zeros(),
        dirac_alternating(),
        convex_halves(),
        MeasureSpec::localize(MeasureSpec::uniform(), BitString("01")),
        MeasureSpec::sigma_mixture(),
        MeasureSpec::trivial_mixture(),
    };
}

}  // namespace cantorlab::fixtures
