#pragma once

#include <stdexcept>
#include <string>

namespace gyrorep {

/// Failure codes shared across the library. Cayley-table validation codes
/// identify which gyrogroup axiom (or bookkeeping check) a table violates.
enum class errc {
  // Cayley table validation
  not_closed,
  row_not_permutation,
  column_not_permutation,
  no_left_identity,
  missing_inverse,
  gyr_not_automorphism,
  left_gyroassociativity_fails,
  left_loop_fails,
  unknown_builtin,
  // linear algebra preconditions
  ambient_mismatch,
  field_mismatch,
  invalid_field,
  // representation operations
  characteristic_divides_order,
  not_invariant,
  search_space_too_large,
  gyrogroup_mismatch,
  prime_does_not_divide_order,
  // numeric demo
  invalid_tolerance,
  point_outside_disk,
  // input files and specifiers
  parse_error,
  io_error,
  // conditions a theorem rules out; seeing one means a bug, not bad input
  internal_inconsistency,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace gyrorep
