#ifndef CAUCHY_ERRORS_HPP
#define CAUCHY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cauchy {

enum class Err {
  kMalformedToken,
  kLabelUsedThrice,
  kArcLengthMismatch,
  kUnknownTriangle,
  kClassificationMismatch,
  kPointOnSkeleton,
  kPointInBoundaryTriangle,
  kMultiplePointOnLevel,
  kCurveNotInPolygon,
  kCurveNotTransversal,
  kCurveSelfIntersects,
  kCutDisconnects,
  kCurveNotSubcomplex,
  kResolutionTooSmall,
  kDegenerateFace,
  kCenterInsidePolyhedron,
  kProjectionDegenerate,
  kParse,
  kIo,
  kInternal,
};

const char* err_name(Err code);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cauchy

#endif
