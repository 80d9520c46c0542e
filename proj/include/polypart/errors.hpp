#pragma once

#include <stdexcept>

namespace polypart {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLYPART_ERROR(Name)          \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

POLYPART_ERROR(SingularMatrix);
POLYPART_ERROR(NegativeArgument);
POLYPART_ERROR(ZeroVector);
POLYPART_ERROR(DimensionMismatch);
POLYPART_ERROR(NonExpandableDenominator);
POLYPART_ERROR(NegativeExponent);
POLYPART_ERROR(PoleCreated);
POLYPART_ERROR(PoleAtPoint);
POLYPART_ERROR(NotUnimodular);
POLYPART_ERROR(BadParams);
POLYPART_ERROR(UnboundedBelow);
POLYPART_ERROR(UnboundedAbove);
POLYPART_ERROR(NotAVertex);
POLYPART_ERROR(NotUnimodularTangentCone);
POLYPART_ERROR(NonIntegerNormalizedVolume);

#undef POLYPART_ERROR

}  // namespace polypart
