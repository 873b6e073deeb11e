#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace layerlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

enum class ErrorCode {
  RankDeficient,
  NormalUndefined,
  UnsupportedDimension,
  TruncationExceeded,
  InsufficientRadii,
  NonMonotoneVolumes,
  OutOfLayer,
  Degenerate,
  ResolutionTooCoarse,
  DomainExceeded,
  AssemblyNaN,
  EmptyInterior,
  NoConvergence,
  FactorizationFailure,
  ZeroVector,
  NonConvergentTail,
  HypothesisUnmet,
  MonotonicityViolation,
  MissingTable,
  UnknownSurface,
  BadParameters,
  BadConfig,
};

constexpr const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NormalUndefined: return "NormalUndefined";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::InsufficientRadii: return "InsufficientRadii";
    case ErrorCode::NonMonotoneVolumes: return "NonMonotoneVolumes";
    case ErrorCode::OutOfLayer: return "OutOfLayer";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorCode::DomainExceeded: return "DomainExceeded";
    case ErrorCode::AssemblyNaN: return "AssemblyNaN";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonConvergentTail: return "NonConvergentTail";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::MissingTable: return "MissingTable";
    case ErrorCode::UnknownSurface: return "UnknownSurface";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace layerlab
