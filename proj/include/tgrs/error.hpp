#pragma once
// Error taxonomy shared by the whole library. Every failure carries a
// machine-checkable code plus a human-readable message.

#include <stdexcept>
#include <string>

namespace tgrs {

enum class Errc {
  not_prime,
  reducible_modulus,
  unsupported_size,
  spec_mismatch,
  division_by_zero,
  not_primitive,
  index_out_of_range,
  dimension_mismatch,
  invalid_dimension,
  invalid_params,
  internal_inconsistency,
  wrong_characteristic,
  odd_length,
  too_large,
  invalid_target,
  parse_error,
  oracle_mismatch,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tgrs
