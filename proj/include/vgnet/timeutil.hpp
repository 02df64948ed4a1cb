#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace vgnet {

// Timestamps are timezone-naive UTC epoch seconds throughout the toolkit.

/// Parses `YYYY-MM-DD` or `YYYY-MM-DD HH:MM[:SS]` (a 'T' separator is also
/// accepted). Throws UnparseableTimestamp on anything else.
std::int64_t parse_timestamp(std::string_view text);

/// Formats as `YYYY-MM-DD HH:MM:SS`.
std::string format_timestamp(std::int64_t ts);

/// Formats the calendar date part only, `YYYY-MM-DD`.
std::string format_date(std::int64_t ts);

/// Label `YYYY-MM` of the calendar month containing ts.
std::string month_label(std::int64_t ts);

/// Epoch seconds of the first instant of the calendar month containing ts.
std::int64_t month_floor(std::int64_t ts);

/// Epoch seconds of the first instant of the following calendar month.
std::int64_t next_month(std::int64_t month_start);

}  // namespace vgnet
