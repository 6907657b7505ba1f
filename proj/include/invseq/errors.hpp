#pragma once

#include <stdexcept>
#include <string>

namespace invseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INVSEQ_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

INVSEQ_DEFINE_ERROR(InvalidSequence);
INVSEQ_DEFINE_ERROR(NotAPattern);
INVSEQ_DEFINE_ERROR(PreconditionViolated);
INVSEQ_DEFINE_ERROR(InvalidZeroSubset);
INVSEQ_DEFINE_ERROR(EmptySequence);
INVSEQ_DEFINE_ERROR(NotClosedUnderTree);
INVSEQ_DEFINE_ERROR(UnknownLabel);
INVSEQ_DEFINE_ERROR(UnreachableParams);
INVSEQ_DEFINE_ERROR(DivisionByNonUnit);
INVSEQ_DEFINE_ERROR(ConstantTermNotOne);
INVSEQ_DEFINE_ERROR(SeriesExpansionError);
INVSEQ_DEFINE_ERROR(BranchAmbiguity);
INVSEQ_DEFINE_ERROR(Inconsistent);
INVSEQ_DEFINE_ERROR(UnsupportedCombination);
INVSEQ_DEFINE_ERROR(LimitExceeded);
INVSEQ_DEFINE_ERROR(NetworkDisabled);
INVSEQ_DEFINE_ERROR(HttpFailure);
INVSEQ_DEFINE_ERROR(ParseError);

#undef INVSEQ_DEFINE_ERROR

}  // namespace invseq
