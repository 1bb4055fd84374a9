#pragma once

#include <stdexcept>
#include <string>

namespace knotmap {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateVertexError : Error {
  explicit DegenerateVertexError(const std::string& w) : Error(w) {}
};
struct VerticalSegmentError : Error {
  explicit VerticalSegmentError(const std::string& w) : Error(w) {}
};
struct NotSimpleError : Error {
  NotSimpleError(const std::string& w, int a, int b) : Error(w), seg_a(a), seg_b(b) {}
  int seg_a, seg_b;  // witness pair of segment indices
};
struct NonGenericError : Error {
  explicit NonGenericError(const std::string& w) : Error(w) {}
};
struct UnknownCrossingError : Error {
  explicit UnknownCrossingError(const std::string& w) : Error(w) {}
};
struct EmptySetError : Error {
  explicit EmptySetError(const std::string& w) : Error(w) {}
};
struct UnknownKnotNameError : Error {
  explicit UnknownKnotNameError(const std::string& w) : Error(w) {}
};
struct TooManyCrossingsError : Error {
  explicit TooManyCrossingsError(const std::string& w) : Error(w) {}
};
struct NonPositiveSlopeError : Error {
  explicit NonPositiveSlopeError(const std::string& w) : Error(w) {}
};
struct HitsHalfError : Error {
  explicit HitsHalfError(const std::string& w) : Error(w) {}
};
struct EscapesUnitIntervalError : Error {
  explicit EscapesUnitIntervalError(const std::string& w) : Error(w) {}
};
struct NotInjectiveError : Error {
  NotInjectiveError(const std::string& w, int step) : Error(w), step(step) {}
  int step;  // orbit step at which injectivity failed (0 for single apply)
};
struct IrrationalEvaluationError : Error {
  explicit IrrationalEvaluationError(const std::string& w) : Error(w) {}
};
struct AxisIntersectionError : Error {
  explicit AxisIntersectionError(const std::string& w) : Error(w) {}
};
struct RefinementFailedError : Error {
  explicit RefinementFailedError(const std::string& w) : Error(w) {}
};
struct HeightCollisionError : Error {
  explicit HeightCollisionError(const std::string& w) : Error(w) {}
};
struct DuplicateFingerprintsError : Error {
  explicit DuplicateFingerprintsError(const std::string& w) : Error(w) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(w) {}
};

}  // namespace knotmap
