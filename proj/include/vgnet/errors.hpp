#pragma once

#include <stdexcept>
#include <string>

namespace vgnet {

// Failure categories surfaced by the toolkit. Degenerate-moment and
// degenerate-variance conditions are usually reported as flags on the
// result object instead of thrown; they appear here so reason strings
// are spelled consistently everywhere.
enum class errc {
  malformed_csv,
  unparseable_timestamp,
  non_finite_price,
  duplicate_timestamp,
  too_short,
  empty_window,
  degenerate_moments,
  index_out_of_range,
  budget_exceeds_n,
  precondition_failed,
  domain_error,
  tail_too_small,
  no_maximum_in_range,
  degenerate_variance,
};

const char* errc_name(errc code) noexcept;

class VgError : public std::runtime_error {
 public:
  VgError(errc code, const std::string& detail);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& detail);

}  // namespace vgnet
