#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latnorm {

enum class ErrorCode {
  CycleDetected,
  NotALattice,
  DuplicateLabel,
  UnknownLabel,
  InvalidLabel,
  EmptyLattice,
  IntervalEmpty,
  NotACoveringSquare,
  LatticeMismatch,
  SubsetSweepTooLarge,
  NotAnOrdinalCut,
  PreconditionFailed,
  PostVerificationFailed,
  TooLarge,
  SyntaxError,
  ShapeMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// Parse errors additionally carry the 1-based line number (0 when not
/// applicable).
class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, std::size_t line) {
    std::string out(to_string(code));
    if (line != 0) out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::size_t line_;
};

}  // namespace latnorm
