#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vgnet/graph.hpp"

namespace vgnet {

struct DegreeDistribution {
  std::vector<NodeId> degrees;                       // per node
  std::vector<std::pair<NodeId, double>> pdf;        // degree -> Pr(K = k), ascending
  std::vector<std::pair<NodeId, double>> ccdf;       // degree -> Pr(K >= k), ascending
  NodeId k_min_obs = 0;
  NodeId k_max = 0;
  double k_mean = 0;
};

DegreeDistribution degree_distribution(const Graph& graph);

struct ClusteringProfile {
  // c_i = 2 E_i / (k_i (k_i - 1)); NaN when k_i < 2 (undefined, excluded
  // from every aggregate below).
  std::vector<double> per_node;
  double global_mean = 0;
  std::vector<std::pair<NodeId, double>> conditional;       // k -> <c|k>
  std::vector<std::pair<NodeId, double>> reciprocal_pairs;  // (k_i, 1/c_i), c_i > 0
  std::int64_t n_defined = 0;
};

ClusteringProfile clustering(const Graph& graph);

struct PathStats {
  NodeId n_nodes = 0;
  double avg_shortest_path = 0;
  enum class Method { exact, sampled } method = Method::exact;
  NodeId n_sources_used = 0;
};

/// Mean shortest-path distance over ordered node pairs. An empty budget runs
/// breadth-first traversal from every node; otherwise `budget` sources are
/// drawn uniformly without replacement from the seeded generator and only
/// their rows are averaged. budget == n reproduces the exact value
/// bit-for-bit. Requires a connected graph.
PathStats average_shortest_path(const Graph& graph,
                                std::optional<NodeId> budget = std::nullopt,
                                std::uint64_t seed = 0);

struct SmallWorldScan {
  std::vector<std::pair<NodeId, double>> points;  // (N, L) per graph, input order
  double slope = 0;      // least-squares slope of L against ln N
  double intercept = 0;
  double pearson_r = 0;  // correlation of L with ln N
};

/// Requires at least 3 graphs.
SmallWorldScan small_world_scan(std::span<const Graph> graphs,
                                std::optional<NodeId> budget = std::nullopt,
                                std::uint64_t seed = 0);

/// Regression stage of the scan on precomputed (N, L) points; at least 3
/// points with at least two distinct sizes.
SmallWorldScan small_world_fit(std::span<const std::pair<NodeId, double>> points);

struct MixingProfile {
  std::vector<double> knn_per_node;                      // mean neighbor degree
  std::vector<std::pair<NodeId, double>> knn_by_degree;  // k -> <k_nn|k>
  // Degree assortativity: Pearson correlation of degrees across edge
  // endpoints. Empty when every edge endpoint has the same degree
  // (DegenerateVariance, e.g. cycles and complete graphs).
  std::optional<double> assortativity_r;
};

/// Requires at least one edge.
MixingProfile mixing_profile(const Graph& graph);

}  // namespace vgnet
