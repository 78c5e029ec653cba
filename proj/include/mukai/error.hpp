#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

enum class Errc {
  IsotropyViolation,
  PositivityViolation,
  NonIntegralImage,
  NotAnIsometry,
  WrongSquareNorm,
  DegenerateGram,
  NotSymmetric,
  BadDimension,
  NotOrthogonal,
  NormMismatch,
  NotPositive,
  Precondition,
  Parse,
  Internal,
};

const char* errc_name(Errc c);

/// Domain error with a stable machine-readable kind, surfaced by the CLI as
/// a structured diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }
  const char* kind() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace mukai
