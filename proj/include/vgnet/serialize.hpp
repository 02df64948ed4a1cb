#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "vgnet/metrics.hpp"
#include "vgnet/powerlaw.hpp"
#include "vgnet/rolling.hpp"
#include "vgnet/series.hpp"

namespace vgnet {

using ordered_json = nlohmann::ordered_json;

/// Reproducibility stamp embedded in every artifact: CSV files carry it as
/// leading `# key: value` comments, JSON files as top-level fields.
struct ArtifactMeta {
  std::string version;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

std::string csv_preamble(const ArtifactMeta& meta);
void stamp(ordered_json& j, const ArtifactMeta& meta);

/// RFC-4180 quoting, applied only when the cell needs it.
std::string csv_escape(const std::string& cell);

ordered_json to_json(const DescriptiveStats& stats);
ordered_json to_json(const PowerLawFit& fit);
ordered_json to_json(const WindowReport& report);

/// Columns: k, pdf, ccdf_empirical, ccdf_fitted (fitted cells empty below
/// the fitted k_min or when no fit is supplied).
std::string degree_distribution_csv(const DegreeDistribution& dd, const PowerLawFit* fit,
                                    const ArtifactMeta& meta);

/// Columns: k, c_mean — the degree-conditional clustering profile.
std::string clustering_by_degree_csv(const ClusteringProfile& cp, const ArtifactMeta& meta);

/// Columns: k, inv_c — one row per node with positive clustering.
std::string clustering_reciprocal_csv(const ClusteringProfile& cp, const ArtifactMeta& meta);

/// Columns: k, knn_mean — the degree-conditional mean neighbor degree.
std::string mixing_by_degree_csv(const MixingProfile& mp, const ArtifactMeta& meta);

/// Columns: window, n_nodes, ln_n, avg_path; slope/intercept/pearson_r of
/// the L-vs-ln N regression ride along as comments. `names` pairs with
/// scan.points.
std::string small_world_csv(std::span<const std::string> names, const SmallWorldScan& scan,
                            const ArtifactMeta& meta);

/// Long format, columns: window, start, end, metric, value. One row per
/// defined metric (n_obs, sparse, k_min, k_mean, k_max, c_min, c_mean,
/// c_max, r, alpha, beta, tail_k_min, ks_distance, gof_p_value, error).
std::string window_reports_csv(std::span<const WindowReport> reports, const ArtifactMeta& meta);

ordered_json window_reports_json(std::span<const WindowReport> reports, const ArtifactMeta& meta);

}  // namespace vgnet
