#pragma once

#include <stdexcept>
#include <string>

namespace twoadic {

enum class errc {
  unsupported_degree,
  invalid_polynomial,
  not_primitive,
  degenerate_state,
  not_prime,
  wrong_residue_class,
  not_twin_prime,
  not_ideal,
  shift_range,
  degenerate_modulus,
  format,
  io,
  bound_exceeded,
  internal,
};

/// Library error carrying a machine-checkable reason code.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace twoadic
