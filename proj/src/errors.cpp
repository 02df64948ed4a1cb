#include "vgnet/errors.hpp"

namespace vgnet {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::malformed_csv: return "MalformedCsv";
    case errc::unparseable_timestamp: return "UnparseableTimestamp";
    case errc::non_finite_price: return "NonFinitePrice";
    case errc::duplicate_timestamp: return "DuplicateTimestamp";
    case errc::too_short: return "TooShort";
    case errc::empty_window: return "EmptyWindow";
    case errc::degenerate_moments: return "DegenerateMoments";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::budget_exceeds_n: return "BudgetExceedsN";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::domain_error: return "DomainError";
    case errc::tail_too_small: return "TailTooSmall";
    case errc::no_maximum_in_range: return "NoMaximumInRange";
    case errc::degenerate_variance: return "DegenerateVariance";
  }
  return "UnknownError";
}

VgError::VgError(errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void raise(errc code, const std::string& detail) { throw VgError(code, detail); }

}  // namespace vgnet
