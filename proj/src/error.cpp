#include "cuntz/error.hpp"

namespace cuntz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::NonZeroGaugeDegree: return "NonZeroGaugeDegree";
    case ErrorKind::LevelTooSmall: return "LevelTooSmall";
    case ErrorKind::BadLevels: return "BadLevels";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cuntz
