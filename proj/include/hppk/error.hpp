#pragma once

#include <stdexcept>
#include <string>

namespace hppk {

enum class Errc {
  NotInvertible,
  SeedLength,
  InvalidParams,
  DecapsulationFailure,
  MalformedSignature,
  LengthMismatch,
  RangeViolation,
  ParseError,
  NotFound,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SeedLength: return "SeedLength";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::DecapsulationFailure: return "DecapsulationFailure";
    case Errc::MalformedSignature: return "MalformedSignature";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace hppk
