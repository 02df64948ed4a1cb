#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vgnet/graph.hpp"
#include "vgnet/powerlaw.hpp"
#include "vgnet/series.hpp"
#include "vgnet/vg.hpp"

namespace vgnet {

struct AnalyzeOptions {
  TimeMode time_mode = TimeMode::ordinal;
  /// Unset selects by sampling frequency: fitting on for minute-scale data,
  /// off for daily (monthly daily windows rarely clear the tail-size floor).
  std::optional<bool> fit_powerlaw;
  std::int64_t bootstrap_resamples = 0;  // 0 disables the goodness-of-fit p-value
  std::uint64_t seed = 0;
  /// Worker threads for multi-window runs. Per-window randomness is keyed by
  /// window name, so every thread count produces identical reports.
  int threads = 1;
};

/// All per-window diagnostics, one visibility graph per window.
struct WindowReport {
  WindowSpec window;
  std::int64_t n_obs = 0;
  NodeId k_min = 0;
  double k_mean = 0;
  NodeId k_max = 0;
  double c_min = 0;   // over nodes with defined clustering (degree >= 2)
  double c_mean = 0;  // NaN when no node has defined clustering
  double c_max = 0;
  std::optional<double> assortativity_r;  // empty when degenerate
  std::optional<PowerLawFit> powerlaw;
  std::string powerlaw_skip_reason;  // error name when a requested fit failed
  bool sparse = false;               // fewer than 30 observations
  std::string error;  // nonempty when the whole window failed (e.g. EmptyWindow)
};

/// Slice the window out of the series, build its visibility graph, and
/// compute every summary. Raises EmptyWindow when fewer than 2 observations
/// fall inside.
WindowReport analyze_window(const PriceSeries& series, const WindowSpec& window,
                            const AnalyzeOptions& options = {});

/// analyze_window over the calendar-month partition, in calendar order.
/// Per-window failures are recorded in the report's `error` field; the run
/// never aborts.
std::vector<WindowReport> analyze_series(const PriceSeries& series,
                                         const AnalyzeOptions& options = {});

/// analyze_window over an explicit window list (presets, --window-days
/// spans, user files), input order preserved, failures recorded in-place.
std::vector<WindowReport> analyze_windows(const PriceSeries& series,
                                          std::span<const WindowSpec> windows,
                                          const AnalyzeOptions& options = {});

}  // namespace vgnet
