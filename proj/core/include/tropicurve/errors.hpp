#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropicurve {

enum class ErrorCode {
  kDegenerateHull,
  kZeroVector,
  kNotASmoothCorner,
  kPolygonTooSmall,
  kDegenerateNewtonPolygon,
  kNotSimple,
  kNotIrreducible,
  kTooManyCycles,
  kNotLiftable,
  kWrongNodeCount,
  kNodeNotHyperbolic,
  kNotHarnack,
  kMalformedParallelogram,
  kNoGenericTranslationFound,
  kNonIntegerResult,
  kGenerationFailed,
  kParseError,
  kInvalidArgument,
};

std::string_view error_name(ErrorCode code);

// Mathematical negatives (the input is well formed but answers "no") as
// opposed to precondition violations. The CLI maps these to distinct exit
// codes.
bool is_mathematical_negative(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropicurve
