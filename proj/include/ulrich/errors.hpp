#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ULRICH_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

ULRICH_DEFINE_ERROR(NonSquare)
ULRICH_DEFINE_ERROR(DimensionMismatch)
ULRICH_DEFINE_ERROR(AmbientMismatch)
ULRICH_DEFINE_ERROR(GradeMismatch)
ULRICH_DEFINE_ERROR(SamplerExhausted)
ULRICH_DEFINE_ERROR(DegenerateSample)
ULRICH_DEFINE_ERROR(NotAPerfectCube)
ULRICH_DEFINE_ERROR(PreconditionFailed)
ULRICH_DEFINE_ERROR(UnknownModule)
ULRICH_DEFINE_ERROR(UnknownCase)
ULRICH_DEFINE_ERROR(CalibrationFailed)
ULRICH_DEFINE_ERROR(InvariantViolation)
ULRICH_DEFINE_ERROR(IdentityViolation)
ULRICH_DEFINE_ERROR(CorankMismatch)
ULRICH_DEFINE_ERROR(DegenerateSection)

#undef ULRICH_DEFINE_ERROR

}  // namespace ulrich
