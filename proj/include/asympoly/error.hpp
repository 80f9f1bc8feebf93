#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asympoly {

enum class errc {
  invalid_argument,
  parse_error,
  invalid_code,
  ambient_mismatch,
  degree_mismatch,
  species_mismatch,
  n_too_small,
  inexact_division,
  not_in_span,
  triangularity_violation,
  unsupported_pair,
  bump_nonunique,
  internal_error,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::parse_error: return "parse-error";
    case errc::invalid_code: return "invalid-code";
    case errc::ambient_mismatch: return "ambient-mismatch";
    case errc::degree_mismatch: return "degree-mismatch";
    case errc::species_mismatch: return "species-mismatch";
    case errc::n_too_small: return "n-too-small";
    case errc::inexact_division: return "inexact-division";
    case errc::not_in_span: return "not-in-span";
    case errc::triangularity_violation: return "triangularity-violation";
    case errc::unsupported_pair: return "unsupported-pair";
    case errc::bump_nonunique: return "bump-nonunique";
    case errc::internal_error: return "internal-error";
  }
  return "unknown";
}

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace asympoly
