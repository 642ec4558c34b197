#include "octodfm/errors.hpp"

namespace octodfm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyMesh: return "EmptyMesh";
    case ErrorCode::NotWatertight: return "NotWatertight";
    case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorCode::MeshMismatch: return "MeshMismatch";
    case ErrorCode::UnknownMaterial: return "UnknownMaterial";
    case ErrorCode::NonPositiveRoughness: return "NonPositiveRoughness";
    case ErrorCode::EmptyField: return "EmptyField";
    case ErrorCode::ZeroTotalVolume: return "ZeroTotalVolume";
    case ErrorCode::NonPositiveVolume: return "NonPositiveVolume";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NoSharedIndexes: return "NoSharedIndexes";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace octodfm
