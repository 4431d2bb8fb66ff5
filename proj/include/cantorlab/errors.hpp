#pragma once

#include <stdexcept>
#include <string>

namespace cantorlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CANTORLAB_ERROR(Name)                                        \
    struct Name : Error {                                            \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

CANTORLAB_ERROR(MalformedSpec);
CANTORLAB_ERROR(LocalizeOnNullCylinder);
CANTORLAB_ERROR(TailToleranceUnreachable);
CANTORLAB_ERROR(InconsistentReduction);
CANTORLAB_ERROR(TruncationTooSmall);
CANTORLAB_ERROR(BudgetExceeded);
CANTORLAB_ERROR(NonPrefixFreeDomain);
CANTORLAB_ERROR(CoverageGap);
CANTORLAB_ERROR(TailUncertifiable);
CANTORLAB_ERROR(MassBoundViolated);
CANTORLAB_ERROR(QuadratureNonConvergent);
CANTORLAB_ERROR(NullCylinder);
CANTORLAB_ERROR(SupportViolation);
CANTORLAB_ERROR(DepthExceeded);
CANTORLAB_ERROR(UnknownExperiment);
CANTORLAB_ERROR(InvalidManifest);
CANTORLAB_ERROR(ParseError);

#undef CANTORLAB_ERROR

}  // namespace cantorlab
