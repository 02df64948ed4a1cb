#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vgnet {

struct Observation {
  std::int64_t timestamp;  // epoch seconds, timezone-naive UTC
  double price;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Ordered price observations at one sampling frequency. Timestamps are
/// strictly increasing and every price is finite; negative prices are legal.
/// Instances are immutable after construction and safe for concurrent reads.
struct PriceSeries {
  std::vector<Observation> observations;
  std::string frequency_label = "other";  // daily | 5min | 15min | 30min | other
  std::string instrument_label;

  std::size_t size() const { return observations.size(); }

  friend bool operator==(const PriceSeries&, const PriceSeries&) = default;
};

/// Half-open calendar window [start, end).
struct WindowSpec {
  std::string name;
  std::int64_t start;  // inclusive
  std::int64_t end;    // exclusive

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

struct DescriptiveStats {
  std::int64_t n_obs = 0;
  double mean = 0, max = 0, min = 0, std_dev = 0;
  double skewness = 0;   // m3 / m2^{3/2}
  double kurtosis = 0;   // m4 / m2^2, non-excess (normal ~ 3)
  double jb_statistic = 0;
  double jb_p_value = 0;
  // Zero variance: skewness/kurtosis/JB are undefined and reported NaN.
  bool degenerate_moments = false;
};

struct CsvSchema {
  std::string time_col = "time";
  std::string price_col = "price";
};

/// Parses a UTF-8 CSV with a header row. Rows are sorted by timestamp,
/// duplicate timestamps and non-finite prices are rejected, and errors name
/// the offending physical line (header = line 1).
PriceSeries parse_csv(std::istream& in, const CsvSchema& schema,
                      std::string instrument_label = "",
                      std::string frequency_label = "");

/// Writes the series back as CSV. Prices use shortest round-trip formatting,
/// so parse_csv(serialize_csv(s)) == s bit-exact.
void serialize_csv(const PriceSeries& series, std::ostream& out,
                   const CsvSchema& schema = {});

/// Frequency label from the median timestamp spacing.
std::string infer_frequency(const PriceSeries& series);

/// Maximal contiguous sub-series with start <= timestamp < end. Metadata is
/// carried over. Throws EmptyWindow if fewer than 2 observations fall inside.
PriceSeries slice(const PriceSeries& series, const WindowSpec& window);

struct MonthlySlice {
  WindowSpec window;   // calendar month bounds, name "YYYY-MM"
  PriceSeries series;  // may hold a single observation for near-empty months
  bool sparse = false; // fewer than 30 observations
};

/// Partition by calendar month (UTC). Months with no data are absent; the
/// concatenation of the slices reproduces the input exactly.
std::vector<MonthlySlice> monthly_partition(const PriceSeries& series);

/// Sample statistics: std_dev uses the n-1 divisor, skewness/kurtosis the
/// central-moment ratios, JB = (n/6)(S^2 + (K-3)^2/4) with its chi-square(2)
/// asymptotic p-value exp(-JB/2). Requires n >= 4.
DescriptiveStats describe(const PriceSeries& series);

}  // namespace vgnet
