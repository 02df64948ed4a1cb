// vgtool: CSV time series -> visibility graphs -> network diagnostics.
//
// Subcommands:
//   describe  per-window descriptive statistics of the price series
//   analyze   per-window graph artifacts: edge list, degree/clustering/
//             mixing profiles, power-law fit, summary, small-world scan
//   rolling   calendar-month (or fixed-span) metric trajectories
//   metrics   the analyze artifact set for an externally built edge list
//
// Every artifact embeds the toolkit version, a hash of the effective
// configuration, and the seed; identical configurations produce
// byte-identical outputs at any VG_THREADS setting.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vgnet/errors.hpp"
#include "vgnet/graph.hpp"
#include "vgnet/metrics.hpp"
#include "vgnet/numformat.hpp"
#include "vgnet/parallel.hpp"
#include "vgnet/powerlaw.hpp"
#include "vgnet/presets.hpp"
#include "vgnet/rng.hpp"
#include "vgnet/rolling.hpp"
#include "vgnet/serialize.hpp"
#include "vgnet/series.hpp"
#include "vgnet/timeutil.hpp"
#include "vgnet/version.hpp"
#include "vgnet/vg.hpp"

namespace fs = std::filesystem;
using vgnet::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string edgelist;
  std::string time_col = "time";
  std::string price_col = "price";
  std::string preset;  // paper-daily | paper-monthly | "" (resolved per command)
  std::string windows_file;
  std::string time_mode = "ordinal";
  std::string l_budget = "auto";  // auto | exact | positive integer
  bool fit_on = false;
  bool fit_off = false;
  std::int64_t bootstrap = 0;
  std::uint64_t seed = 0;
  std::string out_dir = "vgtool-out";
  int window_days = 0;
  int threads = 1;
};

int env_threads() {
  if (const char* env = std::getenv("VG_THREADS")) {
    int v = 0;
    const auto res = std::from_chars(env, env + std::string_view(env).size(), v);
    if (res.ec == std::errc() && v >= 1) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

/// Configuration echo. Deliberately excludes the thread count: results do
/// not depend on it, so neither may the config hash.
ordered_json config_fields(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["input"] = cfg.input;
  j["edgelist"] = cfg.edgelist;
  j["time_col"] = cfg.time_col;
  j["price_col"] = cfg.price_col;
  j["preset"] = cfg.preset;
  j["windows_file"] = cfg.windows_file;
  j["time_mode"] = cfg.time_mode;
  j["l_budget"] = cfg.l_budget;
  j["fit"] = cfg.fit_on ? "on" : cfg.fit_off ? "off" : "auto";
  j["bootstrap"] = cfg.bootstrap;
  j["seed"] = cfg.seed;
  j["window_days"] = cfg.window_days;
  j["out"] = cfg.out_dir;
  return j;
}

vgnet::ArtifactMeta make_meta(const RunConfig& cfg) {
  // The output directory is echoed but not hashed: relocating a run must
  // not change its fingerprint.
  ordered_json hashed = config_fields(cfg);
  hashed.erase("out");
  return {vgnet::kVersion, vgnet::fnv1a64(hashed.dump()), cfg.seed};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_config_echo(const RunConfig& cfg, const vgnet::ArtifactMeta& meta) {
  ordered_json j;
  vgnet::stamp(j, meta);
  j.update(config_fields(cfg));
  write_file(fs::path(cfg.out_dir) / "config.json", j.dump(2) + "\n");
}

vgnet::TimeMode time_mode_of(const RunConfig& cfg) {
  return cfg.time_mode == "actual" ? vgnet::TimeMode::actual : vgnet::TimeMode::ordinal;
}

/// auto: exact BFS up to 20k nodes, 2000 sampled sources beyond; numeric
/// budgets clamp to the node count (a budget of n is the exact computation).
std::optional<vgnet::NodeId> resolve_budget(const std::string& spec, vgnet::NodeId n) {
  if (spec == "exact") return std::nullopt;
  if (spec == "auto") {
    if (n <= 20000) return std::nullopt;
    return 2000;
  }
  std::int64_t v = 0;
  std::from_chars(spec.data(), spec.data() + spec.size(), v);
  return static_cast<vgnet::NodeId>(std::min<std::int64_t>(v, n));
}

std::vector<vgnet::WindowSpec> load_windows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) vgnet::raise(vgnet::errc::precondition_failed, "cannot open windows file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    vgnet::raise(vgnet::errc::malformed_csv,
                 "windows file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_array())
    vgnet::raise(vgnet::errc::precondition_failed,
                 "windows file must hold a JSON array of {name, start, end}");
  std::vector<vgnet::WindowSpec> out;
  for (const auto& w : j) {
    vgnet::WindowSpec spec;
    spec.name = w.at("name").get<std::string>();
    spec.start = vgnet::parse_timestamp(w.at("start").get<std::string>());
    spec.end = vgnet::parse_timestamp(w.at("end").get<std::string>());
    if (spec.start >= spec.end)
      vgnet::raise(vgnet::errc::precondition_failed,
                   "window " + spec.name + ": start must precede end");
    out.push_back(std::move(spec));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = i + 1; k < out.size(); ++k)
      if (out[i].name == out[k].name)
        vgnet::raise(vgnet::errc::precondition_failed,
                     "duplicate window name " + out[i].name);
  return out;
}

/// Window list for describe/analyze: explicit file, then preset, then the
/// daily preset as the documented default.
std::vector<vgnet::WindowSpec> resolve_windows(const RunConfig& cfg) {
  if (!cfg.windows_file.empty()) return load_windows_file(cfg.windows_file);
  if (cfg.preset == "paper-monthly") return vgnet::preset_monthly_windows();
  return vgnet::preset_daily_windows();
}

vgnet::PriceSeries load_series(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) vgnet::raise(vgnet::errc::precondition_failed, "cannot open input " + cfg.input);
  return vgnet::parse_csv(in, {cfg.time_col, cfg.price_col},
                          fs::path(cfg.input).stem().string());
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
            c == '_')
               ? c
               : '_';
  return out.empty() ? std::string("window") : out;
}

// ---------------------------------------------------------------- describe

int cmd_describe(const RunConfig& cfg) {
  const vgnet::PriceSeries series = load_series(cfg);
  const auto windows = resolve_windows(cfg);
  const auto meta = make_meta(cfg);
  fs::create_directories(cfg.out_dir);

  std::ostringstream csv;
  csv << vgnet::csv_preamble(meta);
  csv << "window,start,end,n_obs,mean,max,min,std_dev,skewness,kurtosis,"
         "jb_statistic,jb_p_value,error\n";
  ordered_json jout;
  vgnet::stamp(jout, meta);
  jout["instrument"] = series.instrument_label;
  jout["frequency"] = series.frequency_label;
  jout["windows"] = ordered_json::array();

  for (const auto& w : windows) {
    ordered_json jw;
    jw["window"] = w.name;
    jw["start"] = vgnet::format_timestamp(w.start);
    jw["end"] = vgnet::format_timestamp(w.end);
    csv << vgnet::csv_escape(w.name) << ',' << vgnet::format_timestamp(w.start) << ','
        << vgnet::format_timestamp(w.end) << ',';
    try {
      const vgnet::DescriptiveStats st = vgnet::describe(vgnet::slice(series, w));
      jw["stats"] = vgnet::to_json(st);
      csv << st.n_obs << ',' << vgnet::double_to_string(st.mean) << ','
          << vgnet::double_to_string(st.max) << ',' << vgnet::double_to_string(st.min)
          << ',' << vgnet::double_to_string(st.std_dev) << ','
          << vgnet::double_to_string(st.skewness) << ','
          << vgnet::double_to_string(st.kurtosis) << ','
          << vgnet::double_to_string(st.jb_statistic) << ','
          << vgnet::double_to_string(st.jb_p_value) << ",\n";
    } catch (const vgnet::VgError& e) {
      jw["stats"] = nullptr;
      jw["error"] = e.what();
      csv << ",,,,,,,,," << vgnet::csv_escape(e.what()) << '\n';
    }
    jout["windows"].push_back(std::move(jw));
  }

  write_file(fs::path(cfg.out_dir) / "describe.csv", csv.str());
  write_file(fs::path(cfg.out_dir) / "describe.json", jout.dump(2) + "\n");
  write_config_echo(cfg, meta);
  return 0;
}

// ----------------------------------------------------------------- analyze

struct WindowArtifacts {
  std::string name;
  std::string error;
  std::string edges, degree_csv, clust_csv, recip_csv, mixing_csv;
  ordered_json summary;
  std::optional<std::pair<vgnet::NodeId, double>> scan_point;  // (N, L)
};

WindowArtifacts analyze_one_window(const RunConfig& cfg, const vgnet::PriceSeries& series,
                                   const vgnet::WindowSpec& w,
                                   const vgnet::ArtifactMeta& meta) {
  WindowArtifacts art;
  art.name = w.name;
  art.summary["window"] = w.name;
  art.summary["start"] = vgnet::format_timestamp(w.start);
  art.summary["end"] = vgnet::format_timestamp(w.end);

  vgnet::PriceSeries sl;
  try {
    sl = vgnet::slice(series, w);
  } catch (const vgnet::VgError& e) {
    art.error = e.what();
    art.summary["error"] = art.error;
    return art;
  }

  vgnet::Graph g = vgnet::build_fast(sl, time_mode_of(cfg));
  g.set_meta({series.instrument_label, series.frequency_label, w.name});

  const auto dd = vgnet::degree_distribution(g);
  const auto cp = vgnet::clustering(g);
  const auto mp = vgnet::mixing_profile(g);
  const std::uint64_t window_seed = vgnet::derive_seed(cfg.seed, vgnet::fnv1a64(w.name));
  const auto ps = vgnet::average_shortest_path(
      g, resolve_budget(cfg.l_budget, g.n_nodes()), window_seed);

  std::optional<vgnet::PowerLawFit> fit;
  std::string skip_reason;
  if (!cfg.fit_off) {
    try {
      fit = vgnet::select_kmin(dd.degrees);
      if (cfg.bootstrap > 0)
        fit->gof_p_value = vgnet::bootstrap_gof(*fit, dd.degrees, cfg.bootstrap, window_seed);
    } catch (const vgnet::VgError& e) {
      skip_reason = vgnet::errc_name(e.code());
    }
  }

  std::ostringstream edges;
  vgnet::export_edgelist(g, edges);
  art.edges = edges.str();
  art.degree_csv = vgnet::degree_distribution_csv(dd, fit ? &*fit : nullptr, meta);
  art.clust_csv = vgnet::clustering_by_degree_csv(cp, meta);
  art.recip_csv = vgnet::clustering_reciprocal_csv(cp, meta);
  art.mixing_csv = vgnet::mixing_by_degree_csv(mp, meta);

  art.summary["n_obs"] = static_cast<std::int64_t>(sl.size());
  art.summary["n_nodes"] = g.n_nodes();
  art.summary["n_edges"] = g.n_edges();
  art.summary["k_min"] = dd.k_min_obs;
  art.summary["k_mean"] = dd.k_mean;
  art.summary["k_max"] = dd.k_max;
  art.summary["C"] = std::isnan(cp.global_mean) ? ordered_json(nullptr)
                                                : ordered_json(cp.global_mean);
  art.summary["r"] = mp.assortativity_r ? ordered_json(*mp.assortativity_r)
                                        : ordered_json(nullptr);
  art.summary["L"] = ps.avg_shortest_path;
  art.summary["l_method"] =
      ps.method == vgnet::PathStats::Method::exact ? "exact" : "sampled";
  art.summary["l_sources"] = ps.n_sources_used;
  if (fit) {
    art.summary["powerlaw"] = vgnet::to_json(*fit);
  } else {
    art.summary["powerlaw"] = nullptr;
    if (!skip_reason.empty()) art.summary["powerlaw_skip_reason"] = skip_reason;
  }
  art.scan_point = {g.n_nodes(), ps.avg_shortest_path};
  return art;
}

int cmd_analyze(const RunConfig& cfg) {
  const vgnet::PriceSeries series = load_series(cfg);
  const auto windows = resolve_windows(cfg);
  const auto meta = make_meta(cfg);
  fs::create_directories(cfg.out_dir);

  std::vector<WindowArtifacts> arts(windows.size());
  vgnet::parallel_for_tasks(windows.size(), cfg.threads, [&](std::size_t i) {
    arts[i] = analyze_one_window(cfg, series, windows[i], meta);
  });

  std::ostringstream table;
  table << vgnet::csv_preamble(meta);
  table << "window,start,end,instrument,n_nodes,n_edges,C,r,L,alpha,error\n";

  std::vector<std::string> scan_names;
  std::vector<std::pair<vgnet::NodeId, double>> scan_points;
  for (std::size_t i = 0; i < arts.size(); ++i) {
    WindowArtifacts& art = arts[i];
    const auto stem = sanitize(art.name);
    vgnet::stamp(art.summary, meta);
    write_file(fs::path(cfg.out_dir) / (stem + "_summary.json"),
               art.summary.dump(2) + "\n");
    if (art.error.empty()) {
      write_file(fs::path(cfg.out_dir) / (stem + ".edges"), art.edges);
      write_file(fs::path(cfg.out_dir) / (stem + "_degree.csv"), art.degree_csv);
      write_file(fs::path(cfg.out_dir) / (stem + "_clustering_by_degree.csv"),
                 art.clust_csv);
      write_file(fs::path(cfg.out_dir) / (stem + "_clustering_reciprocal.csv"),
                 art.recip_csv);
      write_file(fs::path(cfg.out_dir) / (stem + "_mixing.csv"), art.mixing_csv);
      scan_names.push_back(art.name);
      scan_points.push_back(*art.scan_point);
    }
    const auto& s = art.summary;
    const auto opt_num = [&](const char* key) -> std::string {
      if (!s.contains(key) || s[key].is_null()) return "";
      return vgnet::double_to_string(s[key].get<double>());
    };
    table << vgnet::csv_escape(art.name) << ','
          << vgnet::format_timestamp(windows[i].start) << ','
          << vgnet::format_timestamp(windows[i].end) << ','
          << vgnet::csv_escape(series.instrument_label) << ',';
    if (art.error.empty()) {
      table << s["n_nodes"].get<std::int64_t>() << ','
            << s["n_edges"].get<std::int64_t>() << ',' << opt_num("C") << ','
            << opt_num("r") << ',' << opt_num("L") << ','
            << (s["powerlaw"].is_null()
                    ? ""
                    : vgnet::double_to_string(s["powerlaw"]["alpha"].get<double>()))
            << ",\n";
    } else {
      table << ",,,,,," << vgnet::csv_escape(art.error) << '\n';
    }
  }
  write_file(fs::path(cfg.out_dir) / "summary_table.csv", table.str());

  // Small-world scan across windows: the regression needs >= 3 points with
  // two distinct sizes; below that only the rows are written.
  vgnet::SmallWorldScan scan;
  scan.points = scan_points;
  scan.slope = scan.intercept = scan.pearson_r = std::nan("");
  if (scan_points.size() >= 3) {
    try {
      scan = vgnet::small_world_fit(scan_points);
    } catch (const vgnet::VgError&) {
    }
  }
  write_file(fs::path(cfg.out_dir) / "small_world.csv",
             vgnet::small_world_csv(scan_names, scan, meta));

  write_config_echo(cfg, meta);
  return 0;
}

// ----------------------------------------------------------------- rolling

std::vector<vgnet::WindowSpec> fixed_span_windows(const vgnet::PriceSeries& series,
                                                  int days) {
  std::vector<vgnet::WindowSpec> out;
  const std::int64_t span = static_cast<std::int64_t>(days) * 86400;
  const std::int64_t last = series.observations.back().timestamp;
  for (std::int64_t start = series.observations.front().timestamp; start <= last;
       start += span)
    out.push_back({vgnet::format_date(start), start, start + span});
  return out;
}

int cmd_rolling(const RunConfig& cfg) {
  const vgnet::PriceSeries series = load_series(cfg);
  const auto meta = make_meta(cfg);
  fs::create_directories(cfg.out_dir);

  vgnet::AnalyzeOptions opt;
  opt.time_mode = time_mode_of(cfg);
  if (cfg.fit_on) opt.fit_powerlaw = true;
  if (cfg.fit_off) opt.fit_powerlaw = false;
  opt.bootstrap_resamples = cfg.bootstrap;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;

  std::vector<vgnet::WindowReport> reports;
  if (!cfg.windows_file.empty()) {
    const auto windows = load_windows_file(cfg.windows_file);
    reports = vgnet::analyze_windows(series, windows, opt);
  } else if (cfg.preset == "paper-monthly") {
    const auto windows = vgnet::preset_monthly_windows();
    reports = vgnet::analyze_windows(series, windows, opt);
  } else if (cfg.window_days > 0) {
    const auto windows = fixed_span_windows(series, cfg.window_days);
    reports = vgnet::analyze_windows(series, windows, opt);
  } else {
    reports = vgnet::analyze_series(series, opt);
  }

  write_file(fs::path(cfg.out_dir) / "rolling.csv",
             vgnet::window_reports_csv(reports, meta));
  write_file(fs::path(cfg.out_dir) / "rolling.json",
             vgnet::window_reports_json(reports, meta).dump(2) + "\n");
  write_config_echo(cfg, meta);
  return 0;
}

// ----------------------------------------------------------------- metrics

int cmd_metrics(const RunConfig& cfg) {
  std::ifstream in(cfg.edgelist);
  if (!in)
    vgnet::raise(vgnet::errc::precondition_failed, "cannot open edge list " + cfg.edgelist);
  const vgnet::Graph g = vgnet::import_edgelist(in);
  const auto meta = make_meta(cfg);
  fs::create_directories(cfg.out_dir);

  const std::string stem = sanitize(fs::path(cfg.edgelist).stem().string());
  const auto dd = vgnet::degree_distribution(g);
  const auto cp = vgnet::clustering(g);
  const auto mp = vgnet::mixing_profile(g);
  const std::uint64_t task_seed = vgnet::derive_seed(cfg.seed, vgnet::fnv1a64(stem));
  const auto ps = vgnet::average_shortest_path(
      g, resolve_budget(cfg.l_budget, g.n_nodes()), task_seed);

  std::optional<vgnet::PowerLawFit> fit;
  std::string skip_reason;
  if (cfg.fit_on) {
    try {
      fit = vgnet::select_kmin(dd.degrees);
      if (cfg.bootstrap > 0)
        fit->gof_p_value = vgnet::bootstrap_gof(*fit, dd.degrees, cfg.bootstrap, task_seed);
    } catch (const vgnet::VgError& e) {
      skip_reason = vgnet::errc_name(e.code());
    }
  }

  write_file(fs::path(cfg.out_dir) / (stem + "_degree.csv"),
             vgnet::degree_distribution_csv(dd, fit ? &*fit : nullptr, meta));
  write_file(fs::path(cfg.out_dir) / (stem + "_clustering_by_degree.csv"),
             vgnet::clustering_by_degree_csv(cp, meta));
  write_file(fs::path(cfg.out_dir) / (stem + "_clustering_reciprocal.csv"),
             vgnet::clustering_reciprocal_csv(cp, meta));
  write_file(fs::path(cfg.out_dir) / (stem + "_mixing.csv"),
             vgnet::mixing_by_degree_csv(mp, meta));

  ordered_json summary;
  summary["graph"] = stem;
  summary["n_nodes"] = g.n_nodes();
  summary["n_edges"] = g.n_edges();
  summary["k_min"] = dd.k_min_obs;
  summary["k_mean"] = dd.k_mean;
  summary["k_max"] = dd.k_max;
  summary["C"] = std::isnan(cp.global_mean) ? ordered_json(nullptr)
                                            : ordered_json(cp.global_mean);
  summary["r"] = mp.assortativity_r ? ordered_json(*mp.assortativity_r)
                                    : ordered_json(nullptr);
  summary["L"] = ps.avg_shortest_path;
  summary["l_method"] = ps.method == vgnet::PathStats::Method::exact ? "exact" : "sampled";
  summary["l_sources"] = ps.n_sources_used;
  if (fit) {
    summary["powerlaw"] = vgnet::to_json(*fit);
  } else {
    summary["powerlaw"] = nullptr;
    if (!skip_reason.empty()) summary["powerlaw_skip_reason"] = skip_reason;
  }
  vgnet::stamp(summary, meta);
  write_file(fs::path(cfg.out_dir) / (stem + "_summary.json"), summary.dump(2) + "\n");
  write_config_echo(cfg, meta);
  return 0;
}

std::string budget_check(const std::string& s) {
  if (s == "auto" || s == "exact") return {};
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec == std::errc() && res.ptr == s.data() + s.size() && v > 0) return {};
  return "must be 'auto', 'exact', or a positive integer";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"visibility-graph time-series analysis toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = env_threads();

  const auto add_io = [&](CLI::App* sub, bool needs_input) {
    sub->add_option("--input", cfg.input, "input CSV with a header row")
        ->required(needs_input);
    sub->add_option("--time-col", cfg.time_col, "timestamp column name")
        ->capture_default_str();
    sub->add_option("--price-col", cfg.price_col, "price column name")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for all sampling and bootstrap draws")
        ->capture_default_str();
    sub->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    sub->add_option("--time-mode", cfg.time_mode,
                    "abscissa for the visibility test: observation index or raw timestamp")
        ->check(CLI::IsMember({"ordinal", "actual"}))
        ->capture_default_str();
  };
  const auto add_windows = [&](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset,
                    "built-in window set (2018-2023 crude-oil study periods)")
        ->check(CLI::IsMember({"paper-daily", "paper-monthly"}));
    sub->add_option("--windows", cfg.windows_file,
                    "JSON file with [{name, start, end}] windows; overrides --preset");
  };
  const auto add_fit = [&](CLI::App* sub) {
    auto* on = sub->add_flag("--fit", cfg.fit_on, "force power-law tail fitting on");
    auto* off = sub->add_flag("--no-fit", cfg.fit_off, "disable power-law tail fitting");
    on->excludes(off);
    off->excludes(on);
    sub->add_option("--bootstrap", cfg.bootstrap,
                    "goodness-of-fit bootstrap resamples (0 = skip)")
        ->capture_default_str();
  };

  auto* describe = app.add_subcommand("describe", "per-window descriptive statistics");
  add_io(describe, true);
  add_windows(describe);

  auto* analyze =
      app.add_subcommand("analyze", "per-window graph construction and diagnostics");
  add_io(analyze, true);
  add_windows(analyze);
  add_fit(analyze);
  analyze->add_option("--l-budget", cfg.l_budget,
                      "shortest-path sources: auto, exact, or a sample size")
      ->check(budget_check)
      ->capture_default_str();

  auto* rolling = app.add_subcommand("rolling", "calendar-month metric trajectories");
  add_io(rolling, true);
  add_windows(rolling);
  add_fit(rolling);
  rolling->add_option("--window-days", cfg.window_days,
                      "fixed-length windows of this many days instead of calendar months")
      ->check(CLI::PositiveNumber);

  auto* metrics =
      app.add_subcommand("metrics", "diagnostics for an externally built edge list");
  metrics->add_option("--edgelist", cfg.edgelist, "edge-list file")->required();
  metrics->add_option("--seed", cfg.seed, "seed for sampled shortest paths")
      ->capture_default_str();
  metrics->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  metrics->add_option("--l-budget", cfg.l_budget,
                      "shortest-path sources: auto, exact, or a sample size")
      ->check(budget_check)
      ->capture_default_str();
  add_fit(metrics);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(describe)) {
      cfg.command = "describe";
      if (cfg.preset.empty()) cfg.preset = "paper-daily";
      return cmd_describe(cfg);
    }
    if (app.got_subcommand(analyze)) {
      cfg.command = "analyze";
      if (cfg.preset.empty()) cfg.preset = "paper-daily";
      return cmd_analyze(cfg);
    }
    if (app.got_subcommand(rolling)) {
      cfg.command = "rolling";
      return cmd_rolling(cfg);
    }
    cfg.command = "metrics";
    return cmd_metrics(cfg);
  } catch (const vgnet::VgError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
