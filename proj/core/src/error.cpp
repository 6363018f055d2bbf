#include "mgdual/error.hpp"

namespace mgdual {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotPointed: return "NotPointed";
    case Errc::InvalidB: return "InvalidB";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::MissingPrerequisite: return "MissingPrerequisite";
    case Errc::GradingMismatch: return "GradingMismatch";
    case Errc::WindowEmpty: return "WindowEmpty";
    case Errc::ParseError: return "ParseError";
    case Errc::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::UnitGenerator: return "UnitGenerator";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace mgdual
