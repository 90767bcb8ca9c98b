#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuntz {

enum class ErrorKind {
  InvalidWord,
  NonZeroGaugeDegree,
  LevelTooSmall,
  BadLevels,
  NotUnitary,
  InvalidPermutation,
  RankUnsupported,
  NoStabilization,
  IndexOutOfRange,
  Inconclusive,
  ConsistencyViolation,
  NotDiagonal,
  DepthTooLarge,
  UnknownFormat,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cuntz
