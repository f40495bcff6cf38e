#include "tropicurve/errors.hpp"

namespace tropicurve {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateHull: return "DegenerateHull";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotASmoothCorner: return "NotASmoothCorner";
    case ErrorCode::kPolygonTooSmall: return "PolygonTooSmall";
    case ErrorCode::kDegenerateNewtonPolygon: return "DegenerateNewtonPolygon";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kTooManyCycles: return "TooManyCycles";
    case ErrorCode::kNotLiftable: return "NotLiftable";
    case ErrorCode::kWrongNodeCount: return "WrongNodeCount";
    case ErrorCode::kNodeNotHyperbolic: return "NodeNotHyperbolic";
    case ErrorCode::kNotHarnack: return "NotHarnack";
    case ErrorCode::kMalformedParallelogram: return "MalformedParallelogram";
    case ErrorCode::kNoGenericTranslationFound: return "NoGenericTranslationFound";
    case ErrorCode::kNonIntegerResult: return "NonIntegerResult";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

bool is_mathematical_negative(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotLiftable:
    case ErrorCode::kNotHarnack:
    case ErrorCode::kWrongNodeCount:
    case ErrorCode::kNodeNotHyperbolic:
    case ErrorCode::kMalformedParallelogram:
      return true;
    default:
      return false;
  }
}

}  // namespace tropicurve
