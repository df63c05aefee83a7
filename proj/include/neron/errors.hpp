#pragma once

#include <stdexcept>
#include <string>

namespace neron {

// Error taxonomy.  The CLI maps these onto its exit-code contract:
// usage/parse errors exit 2, data errors exit 3, verification failures exit 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction / input-domain errors
struct SingularCurveError : Error { using Error::Error; };
struct NonSemistableError : Error { using Error::Error; };
struct NonMinimalModelError : Error { using Error::Error; };
struct NotIntegralError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Data errors
struct PointNotOnCurveError : Error { using Error::Error; };
struct DuplicatePointsError : Error { using Error::Error; };

// Analytic evaluation errors
struct SingularAtOriginError : Error { using Error::Error; };
struct PrecisionExhaustedError : Error { using Error::Error; };
struct TruncationBudgetError : Error { using Error::Error; };
struct TauNotRealError : Error { using Error::Error; };
struct CoordinateOverflowError : Error { using Error::Error; };

}  // namespace neron
