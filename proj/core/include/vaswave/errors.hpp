#pragma once

#include <stdexcept>
#include <string>

namespace vaswave {

// Error categories map onto the CLI exit codes:
//   Validation -> 2, Numerical -> 3, Io -> 4.
enum class ErrorCategory { Validation, Numerical, Io };

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}
    ErrorCategory category() const { return category_; }

  private:
    ErrorCategory category_;
};

#define VASWAVE_DEFINE_ERROR(Name, Cat)                                       \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& msg)                                 \
            : Error(ErrorCategory::Cat, std::string(#Name ": ") + msg) {}     \
    }

VASWAVE_DEFINE_ERROR(InvalidParams, Validation);
VASWAVE_DEFINE_ERROR(AdmissibilityViolation, Validation);
VASWAVE_DEFINE_ERROR(NonpositiveDensity, Numerical);
VASWAVE_DEFINE_ERROR(ShootingFailed, Numerical);
VASWAVE_DEFINE_ERROR(ToleranceNotMet, Numerical);
VASWAVE_DEFINE_ERROR(InsufficientTail, Numerical);
VASWAVE_DEFINE_ERROR(OrderUnsupported, Validation);
VASWAVE_DEFINE_ERROR(DegenerateFit, Numerical);
VASWAVE_DEFINE_ERROR(VacuumInducingPerturbation, Validation);
VASWAVE_DEFINE_ERROR(CflViolation, Numerical);
VASWAVE_DEFINE_ERROR(VacuumDetected, Numerical);
VASWAVE_DEFINE_ERROR(DegenerateWave, Validation);
VASWAVE_DEFINE_ERROR(ResidualMassTooLarge, Numerical);
VASWAVE_DEFINE_ERROR(WeightTooSmall, Validation);
VASWAVE_DEFINE_ERROR(NonpositiveValues, Validation);
VASWAVE_DEFINE_ERROR(WindowTooNarrow, Validation);
VASWAVE_DEFINE_ERROR(MissingSeries, Validation);
VASWAVE_DEFINE_ERROR(ParseError, Validation);
VASWAVE_DEFINE_ERROR(ValidationError, Validation);
VASWAVE_DEFINE_ERROR(IoError, Io);

#undef VASWAVE_DEFINE_ERROR

}  // namespace vaswave
