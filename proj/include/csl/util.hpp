#ifndef CSL_UTIL_HPP
#define CSL_UTIL_HPP

// Shared error type and small helpers used across the toolkit.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace csl {

enum class ErrorCode {
  // structural preconditions
  NotPlanar,
  NotConnected,
  InvalidRotation,
  LoopEdge,
  ParallelEdge,
  NotCubic,
  NotSubcubic,
  Not2Connected,
  Not3Connected,
  // spectrum / search
  TooLarge,
  Forest,
  CircumferenceTooSmall,
  BudgetExceeded,
  // reduction
  NoAdjacentShortPair,
  NoLongFace,
  FaceNotShort,
  NonContiguousBlocks,
  DegreeTooSmall,
  AllDegreeTwo,
  OverlappingTriangles,
  // constructions
  InvalidProfile,
  MatchingNotPerfect,
  IncompatibleK,
  StubMismatch,
  MissingAssignment,
  NoneFound,
  Unsupported,
  // io
  BadHeader,
  TruncatedRecord,
  RotationInconsistent,
  IoFailure,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSubcubic: return "NotSubcubic";
    case ErrorCode::Not2Connected: return "Not2Connected";
    case ErrorCode::Not3Connected: return "Not3Connected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Forest: return "Forest";
    case ErrorCode::CircumferenceTooSmall: return "CircumferenceTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoAdjacentShortPair: return "NoAdjacentShortPair";
    case ErrorCode::NoLongFace: return "NoLongFace";
    case ErrorCode::FaceNotShort: return "FaceNotShort";
    case ErrorCode::NonContiguousBlocks: return "NonContiguousBlocks";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::AllDegreeTwo: return "AllDegreeTwo";
    case ErrorCode::OverlappingTriangles: return "OverlappingTriangles";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::MatchingNotPerfect: return "MatchingNotPerfect";
    case ErrorCode::IncompatibleK: return "IncompatibleK";
    case ErrorCode::StubMismatch: return "StubMismatch";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::NoneFound: return "NoneFound";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::TruncatedRecord: return "TruncatedRecord";
    case ErrorCode::RotationInconsistent: return "RotationInconsistent";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Deterministic RNG wrapper.  The mt19937_64 engine is specified exactly by
// the standard, so raw draws are portable; the distribution adapters in
// <random> are not, which is why all draws go through next_below() instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, n); n > 0.  Simple modulo draw: bias is negligible for the
  // small n used here and the sequence is fully reproducible.
  std::uint64_t next_below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace csl

#endif  // CSL_UTIL_HPP
