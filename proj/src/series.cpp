#include "vgnet/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "vgnet/errors.hpp"
#include "vgnet/numformat.hpp"
#include "vgnet/timeutil.hpp"

namespace vgnet {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    std::string cell = line.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    // Trim surrounding whitespace and a stray CR from CRLF files.
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ' || cell.back() == '\t'))
      cell.pop_back();
    std::size_t lead = cell.find_first_not_of(" \t");
    cells.push_back(lead == std::string::npos ? std::string() : cell.substr(lead));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return cells;
}

}  // namespace

PriceSeries parse_csv(std::istream& in, const CsvSchema& schema,
                      std::string instrument_label, std::string frequency_label) {
  std::string line;
  if (!std::getline(in, line)) raise(errc::too_short, "empty input, no header row");
  const auto header = split_row(line);

  std::ptrdiff_t time_idx = -1, price_idx = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == schema.time_col) time_idx = static_cast<std::ptrdiff_t>(c);
    if (header[c] == schema.price_col) price_idx = static_cast<std::ptrdiff_t>(c);
  }
  if (time_idx < 0)
    raise(errc::malformed_csv, "header has no column '" + schema.time_col + "'");
  if (price_idx < 0)
    raise(errc::malformed_csv, "header has no column '" + schema.price_col + "'");

  PriceSeries series;
  series.instrument_label = std::move(instrument_label);
  std::int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_row(line);
    const std::string where = "line " + std::to_string(line_no);
    if (cells.size() != header.size())
      raise(errc::malformed_csv, where + ": expected " +
                                     std::to_string(header.size()) + " columns, got " +
                                     std::to_string(cells.size()));
    std::int64_t ts;
    try {
      ts = parse_timestamp(cells[static_cast<std::size_t>(time_idx)]);
    } catch (const VgError&) {
      raise(errc::unparseable_timestamp,
            where + ": '" + cells[static_cast<std::size_t>(time_idx)] + "'");
    }
    const std::string& cell = cells[static_cast<std::size_t>(price_idx)];
    double price;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), price);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(price))
      raise(errc::non_finite_price, where + ": '" + cell + "'");
    series.observations.push_back({ts, price});
  }

  if (series.size() < 2)
    raise(errc::too_short,
          "need at least 2 data rows, got " + std::to_string(series.size()));

  std::stable_sort(series.observations.begin(), series.observations.end(),
                   [](const Observation& a, const Observation& b) {
                     return a.timestamp < b.timestamp;
                   });
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series.observations[i].timestamp == series.observations[i - 1].timestamp)
      raise(errc::duplicate_timestamp,
            format_timestamp(series.observations[i].timestamp));

  series.frequency_label =
      frequency_label.empty() ? infer_frequency(series) : std::move(frequency_label);
  return series;
}

void serialize_csv(const PriceSeries& series, std::ostream& out,
                   const CsvSchema& schema) {
  out << schema.time_col << ',' << schema.price_col << '\n';
  for (const Observation& obs : series.observations)
    out << format_timestamp(obs.timestamp) << ',' << double_to_string(obs.price) << '\n';
}

std::string infer_frequency(const PriceSeries& series) {
  if (series.size() < 2) return "other";
  std::vector<std::int64_t> gaps;
  gaps.reserve(series.size() - 1);
  for (std::size_t i = 1; i < series.size(); ++i)
    gaps.push_back(series.observations[i].timestamp -
                   series.observations[i - 1].timestamp);
  std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
  const std::int64_t median = gaps[gaps.size() / 2];
  if (median == 300) return "5min";
  if (median == 900) return "15min";
  if (median == 1800) return "30min";
  if (median >= 86400 && median <= 4 * 86400) return "daily";
  return "other";
}

PriceSeries slice(const PriceSeries& series, const WindowSpec& window) {
  const auto& obs = series.observations;
  auto lo = std::lower_bound(obs.begin(), obs.end(), window.start,
                             [](const Observation& o, std::int64_t t) {
                               return o.timestamp < t;
                             });
  auto hi = std::lower_bound(lo, obs.end(), window.end,
                             [](const Observation& o, std::int64_t t) {
                               return o.timestamp < t;
                             });
  if (hi - lo < 2)
    raise(errc::empty_window, "window '" + window.name + "' holds " +
                                  std::to_string(hi - lo) + " observations");
  PriceSeries out;
  out.observations.assign(lo, hi);
  out.frequency_label = series.frequency_label;
  out.instrument_label = series.instrument_label;
  return out;
}

std::vector<MonthlySlice> monthly_partition(const PriceSeries& series) {
  std::vector<MonthlySlice> out;
  const auto& obs = series.observations;
  std::size_t i = 0;
  while (i < obs.size()) {
    const std::int64_t start = month_floor(obs[i].timestamp);
    const std::int64_t end = next_month(start);
    std::size_t j = i;
    while (j < obs.size() && obs[j].timestamp < end) ++j;
    MonthlySlice ms;
    ms.window = WindowSpec{month_label(start), start, end};
    ms.series.observations.assign(obs.begin() + static_cast<std::ptrdiff_t>(i),
                                  obs.begin() + static_cast<std::ptrdiff_t>(j));
    ms.series.frequency_label = series.frequency_label;
    ms.series.instrument_label = series.instrument_label;
    ms.sparse = (j - i) < 30;
    out.push_back(std::move(ms));
    i = j;
  }
  return out;
}

DescriptiveStats describe(const PriceSeries& series) {
  const auto& obs = series.observations;
  const std::size_t n = obs.size();
  if (n < 4)
    raise(errc::too_short, "describe needs n >= 4, got " + std::to_string(n));

  DescriptiveStats st;
  st.n_obs = static_cast<std::int64_t>(n);
  double sum = 0, lo = obs[0].price, hi = obs[0].price;
  for (const Observation& o : obs) {
    sum += o.price;
    lo = std::min(lo, o.price);
    hi = std::max(hi, o.price);
  }
  st.mean = sum / static_cast<double>(n);
  st.min = lo;
  st.max = hi;

  double m2 = 0, m3 = 0, m4 = 0;
  for (const Observation& o : obs) {
    const double d = o.price - st.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  st.std_dev = std::sqrt(m2 / static_cast<double>(n - 1));
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);

  if (m2 <= 0) {
    st.degenerate_moments = true;
    st.skewness = st.kurtosis = st.jb_statistic = st.jb_p_value =
        std::numeric_limits<double>::quiet_NaN();
    return st;
  }
  st.skewness = m3 / std::pow(m2, 1.5);
  st.kurtosis = m4 / (m2 * m2);
  st.jb_statistic = (static_cast<double>(n) / 6.0) *
                    (st.skewness * st.skewness +
                     0.25 * (st.kurtosis - 3.0) * (st.kurtosis - 3.0));
  st.jb_p_value = std::exp(-0.5 * st.jb_statistic);
  return st;
}

}  // namespace vgnet
