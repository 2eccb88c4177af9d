#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitcyc {

enum class ErrorCode {
  // map construction and parsing
  AsymmetricAdjacency,
  RepeatedNeighbor,
  EmptyRotation,
  SelfLoop,
  VertexOutOfRange,
  Disconnected,
  DegenerateSphere,
  ParseError,
  // genus and surgery
  OddChi,
  NotACycle,
  EdgeMissing,
  NotAFace,
  ResultNotSimple,
  NotContractible,
  IsK4Sphere,
  // voltage
  NotAPermutation,
  NonTriangularFace,
  NonzeroFaceSum,
  DerivedNotTriangular,
  DerivedNotSimple,
  InvalidParameter,
  // search
  NotAdjacent,
  AlreadyOnPath,
  PathTooShort,
  NotClosable,
  NonIntegralGenus,
  NotTriangulation,
  NotTransitive,
  // families
  SOutOfRange,
  ParamOutOfRange,
  // io
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable code; `what()` holds the
/// human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splitcyc
