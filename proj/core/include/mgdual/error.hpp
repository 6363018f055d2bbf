#pragma once

#include <stdexcept>
#include <string>

namespace mgdual {

enum class Errc {
  DimensionMismatch,
  NotPointed,
  InvalidB,
  NotInSemigroup,
  AmbientMismatch,
  IndexOutOfRange,
  NotHomogeneous,
  ZeroPolynomial,
  MissingPrerequisite,
  GradingMismatch,
  WindowEmpty,
  ParseError,
  NonHomogeneousGenerator,
  UnknownVariable,
  UnitGenerator,
};

const char* errc_name(Errc code) noexcept;

/// All library failures are reported through this exception; code() says which.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace mgdual
