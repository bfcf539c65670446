#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nullgb {

/// Failure categories raised by the library. Each maps to a named error in
/// the public contract; `internal` marks a broken invariant (a bug).
enum class Errc {
  ring_mismatch,
  arity_mismatch,
  parse_error,
  invalid_argument,
  infinite_complement,
  gamma_exceeds_alpha,
  not_monic,
  not_axis_poly,
  non_positive_multiplicity,
  zero_polynomial,
  uncertified_basis,
  not_in_q,
  not_certified,
  nonzero_remainder,
  not_member,
  divisibility_failure,
  empty_puncture,
  inapplicable,
  unsupported_field,
  scale_exceeded,
  support_exceeds_beta,
  internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nullgb
