#pragma once

#include <stdexcept>
#include <string>

namespace kwclass {

enum class errc {
  parse_error = 1,
  invalid_parameter,
  index_out_of_range,
  capacity_exceeded,
  length_mismatch,
  invalid_delta,
  component_too_large,
  verification_failure,
};

// Single exception type carrying a machine-readable code; the C layer maps
// codes to kw_status values.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace kwclass
