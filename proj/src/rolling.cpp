#include "vgnet/rolling.hpp"

#include <algorithm>
#include <cmath>

#include "vgnet/errors.hpp"
#include "vgnet/metrics.hpp"
#include "vgnet/parallel.hpp"
#include "vgnet/rng.hpp"

namespace vgnet {

namespace {

bool fit_default_for(const std::string& frequency_label) {
  return frequency_label == "5min" || frequency_label == "15min" ||
         frequency_label == "30min";
}

WindowReport analyze_slice(const PriceSeries& slice_series, const WindowSpec& window,
                           const AnalyzeOptions& options) {
  WindowReport rep;
  rep.window = window;
  rep.n_obs = static_cast<std::int64_t>(slice_series.observations.size());
  rep.sparse = rep.n_obs < 30;

  const Graph g = build_fast(slice_series, options.time_mode);

  const DegreeDistribution dd = degree_distribution(g);
  rep.k_min = dd.k_min_obs;
  rep.k_mean = dd.k_mean;
  rep.k_max = dd.k_max;

  const ClusteringProfile cp = clustering(g);
  rep.c_mean = cp.global_mean;
  double c_lo = std::nan(""), c_hi = std::nan("");
  for (double c : cp.per_node) {
    if (std::isnan(c)) continue;
    if (std::isnan(c_lo) || c < c_lo) c_lo = c;
    if (std::isnan(c_hi) || c > c_hi) c_hi = c;
  }
  rep.c_min = c_lo;
  rep.c_max = c_hi;

  rep.assortativity_r = mixing_profile(g).assortativity_r;

  const bool want_fit =
      options.fit_powerlaw.value_or(fit_default_for(slice_series.frequency_label));
  if (want_fit) {
    try {
      PowerLawFit fit = select_kmin(dd.degrees);
      if (options.bootstrap_resamples > 0) {
        // Seed keyed by window name: reports are independent of which other
        // windows run, and of worker scheduling.
        const std::uint64_t ws = derive_seed(options.seed, fnv1a64(window.name));
        fit.gof_p_value =
            bootstrap_gof(fit, dd.degrees, options.bootstrap_resamples, ws);
      }
      rep.powerlaw = std::move(fit);
    } catch (const VgError& e) {
      rep.powerlaw_skip_reason = errc_name(e.code());
    }
  }
  return rep;
}

}  // namespace

WindowReport analyze_window(const PriceSeries& series, const WindowSpec& window,
                            const AnalyzeOptions& options) {
  return analyze_slice(slice(series, window), window, options);
}

std::vector<WindowReport> analyze_series(const PriceSeries& series,
                                         const AnalyzeOptions& options) {
  const std::vector<MonthlySlice> months = monthly_partition(series);
  std::vector<WindowReport> out(months.size());
  parallel_for_tasks(months.size(), options.threads, [&](std::size_t i) {
    const MonthlySlice& ms = months[i];
    try {
      out[i] = analyze_slice(ms.series, ms.window, options);
    } catch (const VgError& e) {
      out[i].window = ms.window;
      out[i].n_obs = static_cast<std::int64_t>(ms.series.observations.size());
      out[i].error = e.what();
    }
    out[i].sparse = ms.sparse;
  });
  return out;
}

std::vector<WindowReport> analyze_windows(const PriceSeries& series,
                                          std::span<const WindowSpec> windows,
                                          const AnalyzeOptions& options) {
  std::vector<WindowReport> out(windows.size());
  parallel_for_tasks(windows.size(), options.threads, [&](std::size_t i) {
    try {
      out[i] = analyze_window(series, windows[i], options);
    } catch (const VgError& e) {
      out[i].window = windows[i];
      out[i].error = e.what();
    }
  });
  return out;
}

}  // namespace vgnet
