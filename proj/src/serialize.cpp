#include "vgnet/serialize.hpp"

#include <cmath>
#include <sstream>

#include "vgnet/numformat.hpp"
#include "vgnet/timeutil.hpp"

namespace vgnet {

namespace {

ordered_json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

}  // namespace

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_preamble(const ArtifactMeta& meta) {
  std::ostringstream out;
  out << "# version: " << meta.version << '\n';
  out << "# config_hash: " << hex_u64(meta.config_hash) << '\n';
  out << "# seed: " << meta.seed << '\n';
  return out.str();
}

void stamp(ordered_json& j, const ArtifactMeta& meta) {
  j["version"] = meta.version;
  j["config_hash"] = hex_u64(meta.config_hash);
  j["seed"] = meta.seed;
}

ordered_json to_json(const DescriptiveStats& stats) {
  ordered_json j;
  j["n_obs"] = stats.n_obs;
  j["mean"] = json_number(stats.mean);
  j["max"] = json_number(stats.max);
  j["min"] = json_number(stats.min);
  j["std_dev"] = json_number(stats.std_dev);
  j["skewness"] = json_number(stats.skewness);
  j["kurtosis"] = json_number(stats.kurtosis);
  j["jb_statistic"] = json_number(stats.jb_statistic);
  j["jb_p_value"] = json_number(stats.jb_p_value);
  j["degenerate_moments"] = stats.degenerate_moments;
  return j;
}

ordered_json to_json(const PowerLawFit& fit) {
  ordered_json j;
  j["alpha"] = fit.alpha;
  j["beta"] = fit.beta;
  j["k_min"] = fit.k_min;
  j["ks_distance"] = fit.ks_distance;
  j["n_tail"] = fit.n_tail;
  j["log_likelihood"] = fit.log_likelihood;
  j["gof_p_value"] = fit.gof_p_value ? ordered_json(*fit.gof_p_value) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const WindowReport& report) {
  ordered_json j;
  j["window"] = report.window.name;
  j["start"] = format_timestamp(report.window.start);
  j["end"] = format_timestamp(report.window.end);
  j["n_obs"] = report.n_obs;
  j["sparse"] = report.sparse;
  if (!report.error.empty()) {
    j["error"] = report.error;
    return j;
  }
  j["k_min"] = report.k_min;
  j["k_mean"] = report.k_mean;
  j["k_max"] = report.k_max;
  j["c_min"] = json_number(report.c_min);
  j["c_mean"] = json_number(report.c_mean);
  j["c_max"] = json_number(report.c_max);
  j["r"] = report.assortativity_r ? ordered_json(*report.assortativity_r)
                                  : ordered_json(nullptr);
  if (report.powerlaw) {
    j["powerlaw"] = to_json(*report.powerlaw);
  } else {
    j["powerlaw"] = nullptr;
    if (!report.powerlaw_skip_reason.empty())
      j["powerlaw_skip_reason"] = report.powerlaw_skip_reason;
  }
  return j;
}

std::string degree_distribution_csv(const DegreeDistribution& dd, const PowerLawFit* fit,
                                    const ArtifactMeta& meta) {
  std::ostringstream out;
  out << csv_preamble(meta);
  out << "k,pdf,ccdf_empirical,ccdf_fitted\n";
  std::size_t ci = 0;
  for (const auto& [k, p] : dd.pdf) {
    while (ci < dd.ccdf.size() && dd.ccdf[ci].first < k) ++ci;
    const double ccdf_emp = dd.ccdf[ci].second;
    out << k << ',' << double_to_string(p) << ',' << double_to_string(ccdf_emp) << ',';
    if (fit && k >= fit->k_min) out << double_to_string(fitted_ccdf(*fit, k));
    out << '\n';
  }
  return out.str();
}

std::string clustering_by_degree_csv(const ClusteringProfile& cp, const ArtifactMeta& meta) {
  std::ostringstream out;
  out << csv_preamble(meta);
  out << "k,c_mean\n";
  for (const auto& [k, c] : cp.conditional)
    out << k << ',' << double_to_string(c) << '\n';
  return out.str();
}

std::string clustering_reciprocal_csv(const ClusteringProfile& cp, const ArtifactMeta& meta) {
  std::ostringstream out;
  out << csv_preamble(meta);
  out << "k,inv_c\n";
  for (const auto& [k, inv] : cp.reciprocal_pairs)
    out << k << ',' << double_to_string(inv) << '\n';
  return out.str();
}

std::string mixing_by_degree_csv(const MixingProfile& mp, const ArtifactMeta& meta) {
  std::ostringstream out;
  out << csv_preamble(meta);
  out << "k,knn_mean\n";
  for (const auto& [k, knn] : mp.knn_by_degree)
    out << k << ',' << double_to_string(knn) << '\n';
  return out.str();
}

std::string small_world_csv(std::span<const std::string> names, const SmallWorldScan& scan,
                            const ArtifactMeta& meta) {
  std::ostringstream out;
  out << csv_preamble(meta);
  out << "# slope: " << double_to_string(scan.slope) << '\n';
  out << "# intercept: " << double_to_string(scan.intercept) << '\n';
  out << "# pearson_r: " << double_to_string(scan.pearson_r) << '\n';
  out << "window,n_nodes,ln_n,avg_path\n";
  for (std::size_t i = 0; i < scan.points.size(); ++i) {
    const auto& [n, l] = scan.points[i];
    out << csv_escape(names[i]) << ',' << n << ','
        << double_to_string(std::log(static_cast<double>(n))) << ','
        << double_to_string(l) << '\n';
  }
  return out.str();
}

std::string window_reports_csv(std::span<const WindowReport> reports, const ArtifactMeta& meta) {
  std::ostringstream out;
  out << csv_preamble(meta);
  out << "window,start,end,metric,value\n";
  for (const WindowReport& r : reports) {
    const std::string prefix = csv_escape(r.window.name) + ',' +
                               format_timestamp(r.window.start) + ',' +
                               format_timestamp(r.window.end) + ',';
    const auto row = [&](const char* metric, const std::string& value) {
      out << prefix << metric << ',' << csv_escape(value) << '\n';
    };
    row("n_obs", std::to_string(r.n_obs));
    row("sparse", r.sparse ? "1" : "0");
    if (!r.error.empty()) {
      row("error", r.error);
      continue;
    }
    row("k_min", std::to_string(r.k_min));
    row("k_mean", double_to_string(r.k_mean));
    row("k_max", std::to_string(r.k_max));
    row("c_min", double_to_string(r.c_min));
    row("c_mean", double_to_string(r.c_mean));
    row("c_max", double_to_string(r.c_max));
    row("r", r.assortativity_r ? double_to_string(*r.assortativity_r) : "");
    if (r.powerlaw) {
      row("alpha", double_to_string(r.powerlaw->alpha));
      row("beta", double_to_string(r.powerlaw->beta));
      row("tail_k_min", std::to_string(r.powerlaw->k_min));
      row("ks_distance", double_to_string(r.powerlaw->ks_distance));
      if (r.powerlaw->gof_p_value)
        row("gof_p_value", double_to_string(*r.powerlaw->gof_p_value));
    } else if (!r.powerlaw_skip_reason.empty()) {
      row("powerlaw_skip_reason", r.powerlaw_skip_reason);
    }
  }
  return out.str();
}

ordered_json window_reports_json(std::span<const WindowReport> reports,
                                 const ArtifactMeta& meta) {
  ordered_json j;
  stamp(j, meta);
  j["windows"] = ordered_json::array();
  for (const WindowReport& r : reports) j["windows"].push_back(to_json(r));
  return j;
}

}  // namespace vgnet
