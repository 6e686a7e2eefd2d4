#pragma once

#include <stdexcept>
#include <string>

namespace concord {

// Failure codes for every operation that can reject its input.
enum class errc {
  odd_dimension,
  not_unimodular,
  not_symmetric,
  dimension_mismatch,
  index_out_of_range,
  not_a_band_move,
  missing_matrix,
  unknown_axiom,
  non_unit_value,
  undefined_at_zero,
  empty_interval,
  malformed_header,
  row_length_mismatch,
  non_integer_token,
  io_failure,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::odd_dimension: return "odd_dimension";
    case errc::not_unimodular: return "not_unimodular";
    case errc::not_symmetric: return "not_symmetric";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::not_a_band_move: return "not_a_band_move";
    case errc::missing_matrix: return "missing_matrix";
    case errc::unknown_axiom: return "unknown_axiom";
    case errc::non_unit_value: return "non_unit_value";
    case errc::undefined_at_zero: return "undefined_at_zero";
    case errc::empty_interval: return "empty_interval";
    case errc::malformed_header: return "malformed_header";
    case errc::row_length_mismatch: return "row_length_mismatch";
    case errc::non_integer_token: return "non_integer_token";
    case errc::io_failure: return "io_failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace concord
