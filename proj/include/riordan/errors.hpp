#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RIORDAN_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

RIORDAN_DEFINE_ERROR(DivisionByNonUnit);
RIORDAN_DEFINE_ERROR(CompositionRequiresZeroConstantTerm);
RIORDAN_DEFINE_ERROR(NotRevertible);
RIORDAN_DEFINE_ERROR(NonSquareConstantTerm);
RIORDAN_DEFINE_ERROR(InsufficientOrder);
RIORDAN_DEFINE_ERROR(InsufficientTerms);
RIORDAN_DEFINE_ERROR(NotRiordanBand);
RIORDAN_DEFINE_ERROR(InvalidSpec);
RIORDAN_DEFINE_ERROR(InvalidPair);
RIORDAN_DEFINE_ERROR(NonConvergence);
// Two independent computations of the same quantity disagreed.
RIORDAN_DEFINE_ERROR(Inconsistency);
RIORDAN_DEFINE_ERROR(FixtureNotFound);
RIORDAN_DEFINE_ERROR(MalformedFixture);
RIORDAN_DEFINE_ERROR(MalformedLine);
RIORDAN_DEFINE_ERROR(NonConsecutiveIndices);
RIORDAN_DEFINE_ERROR(MalformedRange);
RIORDAN_DEFINE_ERROR(IoError);

#undef RIORDAN_DEFINE_ERROR

}  // namespace riordan
