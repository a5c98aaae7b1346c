#include <matterwave/error.hpp>

namespace mw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConstant: return "InvalidConstant";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SuperluminalElectron: return "SuperluminalElectron";
    case ErrorCode::ZeroVelocity: return "ZeroVelocity";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::UnknownChannel: return "UnknownChannel";
    case ErrorCode::QuadratureTooCoarse: return "QuadratureTooCoarse";
    case ErrorCode::InvalidWavelength: return "InvalidWavelength";
    case ErrorCode::InvalidFrequency: return "InvalidFrequency";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::SuperluminalBoost: return "SuperluminalBoost";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace mw
