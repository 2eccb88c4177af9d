#include "splitcyc/error.hpp"

namespace splitcyc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::RepeatedNeighbor: return "RepeatedNeighbor";
    case ErrorCode::EmptyRotation: return "EmptyRotation";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegenerateSphere: return "DegenerateSphere";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OddChi: return "OddChi";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::EdgeMissing: return "EdgeMissing";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::ResultNotSimple: return "ResultNotSimple";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::IsK4Sphere: return "IsK4Sphere";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NonTriangularFace: return "NonTriangularFace";
    case ErrorCode::NonzeroFaceSum: return "NonzeroFaceSum";
    case ErrorCode::DerivedNotTriangular: return "DerivedNotTriangular";
    case ErrorCode::DerivedNotSimple: return "DerivedNotSimple";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::AlreadyOnPath: return "AlreadyOnPath";
    case ErrorCode::PathTooShort: return "PathTooShort";
    case ErrorCode::NotClosable: return "NotClosable";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::SOutOfRange: return "SOutOfRange";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace splitcyc
