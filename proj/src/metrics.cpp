#include "vgnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "vgnet/errors.hpp"

namespace vgnet {

namespace {

std::vector<NodeId> degrees_of(const Graph& g) {
  std::vector<NodeId> deg(static_cast<std::size_t>(g.n_nodes()));
  for (NodeId v = 0; v < g.n_nodes(); ++v)
    deg[static_cast<std::size_t>(v)] = g.degree(v);
  return deg;
}

}  // namespace

DegreeDistribution degree_distribution(const Graph& graph) {
  if (graph.n_nodes() == 0) raise(errc::precondition_failed, "degree_distribution: empty graph");
  DegreeDistribution out;
  out.degrees = degrees_of(graph);

  const auto n = static_cast<double>(graph.n_nodes());
  NodeId k_max = 0;
  for (NodeId k : out.degrees) k_max = std::max(k_max, k);
  std::vector<std::int64_t> count(static_cast<std::size_t>(k_max) + 1, 0);
  for (NodeId k : out.degrees) ++count[static_cast<std::size_t>(k)];

  // CCDF by a suffix sum of exact counts, so Pr(K >= k_min_obs) == 1.
  std::int64_t tail = 0;
  std::vector<std::pair<NodeId, double>> ccdf_rev;
  for (NodeId k = k_max; k >= 0; --k) {
    tail += count[static_cast<std::size_t>(k)];
    if (count[static_cast<std::size_t>(k)] > 0)
      ccdf_rev.emplace_back(k, static_cast<double>(tail) / n);
    if (k == 0) break;
  }
  for (auto it = ccdf_rev.rbegin(); it != ccdf_rev.rend(); ++it) out.ccdf.push_back(*it);
  for (NodeId k = 0; k <= k_max; ++k)
    if (count[static_cast<std::size_t>(k)] > 0)
      out.pdf.emplace_back(k, static_cast<double>(count[static_cast<std::size_t>(k)]) / n);

  out.k_min_obs = out.pdf.front().first;
  out.k_max = k_max;
  std::int64_t degree_sum = 0;
  for (NodeId k : out.degrees) degree_sum += k;
  out.k_mean = static_cast<double>(degree_sum) / n;
  return out;
}

ClusteringProfile clustering(const Graph& graph) {
  if (graph.n_nodes() == 0) raise(errc::precondition_failed, "clustering: empty graph");
  const NodeId n = graph.n_nodes();
  ClusteringProfile out;
  out.per_node.assign(static_cast<std::size_t>(n), std::nan(""));

  // Adjacency rows are sorted, so E_i (edges among neighbors of i) is half
  // the total size of the pairwise sorted intersections.
  std::vector<std::int64_t> tri_sum_by_k;  // accumulate <c|k> numerators lazily
  double c_total = 0;
  std::int64_t defined = 0;
  std::vector<std::pair<NodeId, double>> defined_ck;  // (k_i, c_i)

  for (NodeId i = 0; i < n; ++i) {
    const auto nbr = graph.neighbors(i);
    const auto k = static_cast<std::int64_t>(nbr.size());
    if (k < 2) continue;
    std::int64_t closed = 0;  // counts ordered (u, w) with u,w both adjacent to i
    for (NodeId u : nbr) {
      const auto nu = graph.neighbors(u);
      // |N(i) ∩ N(u)| by linear merge.
      std::size_t a = 0, b = 0;
      while (a < nbr.size() && b < nu.size()) {
        if (nbr[a] < nu[b]) ++a;
        else if (nu[b] < nbr[a]) ++b;
        else { ++closed; ++a; ++b; }
      }
    }
    // closed == 2 E_i: each neighbor-neighbor edge {u,w} is found once from
    // u's row and once from w's row.
    const double ci = static_cast<double>(closed) / (static_cast<double>(k) * static_cast<double>(k - 1));
    out.per_node[static_cast<std::size_t>(i)] = ci;
    c_total += ci;
    ++defined;
    defined_ck.emplace_back(static_cast<NodeId>(k), ci);
    if (ci > 0)
      out.reciprocal_pairs.emplace_back(static_cast<NodeId>(k), 1.0 / ci);
  }
  (void)tri_sum_by_k;

  out.n_defined = defined;
  out.global_mean = defined > 0 ? c_total / static_cast<double>(defined) : std::nan("");

  std::sort(defined_ck.begin(), defined_ck.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < defined_ck.size();) {
    std::size_t j = i;
    double s = 0;
    while (j < defined_ck.size() && defined_ck[j].first == defined_ck[i].first) {
      s += defined_ck[j].second;
      ++j;
    }
    out.conditional.emplace_back(defined_ck[i].first, s / static_cast<double>(j - i));
    i = j;
  }
  std::sort(out.reciprocal_pairs.begin(), out.reciprocal_pairs.end());
  return out;
}

namespace {

/// Sum of shortest-path distances from `src` to every other node.
/// Raises when the graph is disconnected (some node unreached).
std::int64_t bfs_distance_sum(const Graph& g, NodeId src, std::vector<std::int32_t>& dist,
                              std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(src);
  dist[static_cast<std::size_t>(src)] = 0;
  std::int64_t sum = 0;
  std::size_t head = 0;
  while (head < queue.size()) {
    const NodeId v = queue[head++];
    const std::int32_t dv = dist[static_cast<std::size_t>(v)];
    for (NodeId u : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(u)] >= 0) continue;
      dist[static_cast<std::size_t>(u)] = dv + 1;
      sum += dv + 1;
      queue.push_back(u);
    }
  }
  if (queue.size() != dist.size())
    raise(errc::precondition_failed,
          "average_shortest_path: graph is disconnected (source " + std::to_string(src) + ")");
  return sum;
}

}  // namespace

PathStats average_shortest_path(const Graph& graph, std::optional<NodeId> budget,
                                std::uint64_t seed) {
  const NodeId n = graph.n_nodes();
  if (n < 2) raise(errc::too_short, "average_shortest_path: need at least 2 nodes");
  if (budget && (*budget < 1 || *budget > n))
    raise(errc::budget_exceeds_n,
          "average_shortest_path: budget " + std::to_string(*budget) + " outside [1, " +
              std::to_string(n) + "]");

  std::vector<NodeId> sources;
  if (!budget || *budget == n) {
    sources.resize(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) sources[static_cast<std::size_t>(v)] = v;
  } else {
    // Partial Fisher-Yates draw without replacement, then sorted so the
    // accumulation order (and hence the float result) is index-deterministic.
    std::vector<NodeId> pool(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    std::mt19937_64 rng(seed);
    for (NodeId i = 0; i < *budget; ++i) {
      std::uniform_int_distribution<NodeId> pick(i, n - 1);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
    }
    sources.assign(pool.begin(), pool.begin() + *budget);
    std::sort(sources.begin(), sources.end());
  }

  std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
  std::vector<NodeId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  for (NodeId s : sources) total += bfs_distance_sum(graph, s, dist, queue);

  PathStats out;
  out.n_nodes = n;
  out.n_sources_used = static_cast<NodeId>(sources.size());
  const bool exact = sources.size() == static_cast<std::size_t>(n);
  out.method = exact ? PathStats::Method::exact : PathStats::Method::sampled;
  // Exact: mean over all ordered pairs. Sampled: mean distance from the
  // sampled rows to the n-1 other nodes.
  out.avg_shortest_path =
      static_cast<double>(total) /
      (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
  return out;
}

SmallWorldScan small_world_fit(std::span<const std::pair<NodeId, double>> points) {
  if (points.size() < 3)
    raise(errc::precondition_failed, "small_world_fit: need at least 3 points");
  SmallWorldScan out;
  out.points.assign(points.begin(), points.end());
  const auto m = static_cast<double>(out.points.size());
  double sx = 0, sy = 0;
  for (const auto& [n, l] : out.points) {
    sx += std::log(static_cast<double>(n));
    sy += l;
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, syy = 0, sxy = 0;
  for (const auto& [n, l] : out.points) {
    const double dx = std::log(static_cast<double>(n)) - mx;
    const double dy = l - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0)
    raise(errc::degenerate_variance, "small_world_fit: all points share one size");
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.pearson_r = syy > 0 ? sxy / std::sqrt(sxx * syy) : 0.0;
  return out;
}

SmallWorldScan small_world_scan(std::span<const Graph> graphs, std::optional<NodeId> budget,
                                std::uint64_t seed) {
  if (graphs.size() < 3)
    raise(errc::precondition_failed, "small_world_scan: need at least 3 graphs");
  std::vector<std::pair<NodeId, double>> points;
  for (const Graph& g : graphs) {
    std::optional<NodeId> b = budget;
    if (b && *b > g.n_nodes()) b = g.n_nodes();
    const PathStats ps = average_shortest_path(g, b, seed);
    points.emplace_back(g.n_nodes(), ps.avg_shortest_path);
  }
  return small_world_fit(points);
}

MixingProfile mixing_profile(const Graph& graph) {
  if (graph.n_edges() == 0)
    raise(errc::precondition_failed, "mixing_profile: graph has no edges");
  const NodeId n = graph.n_nodes();
  MixingProfile out;
  out.knn_per_node.assign(static_cast<std::size_t>(n), std::nan(""));

  std::vector<std::pair<NodeId, double>> defined;  // (k_i, k_nn,i)
  for (NodeId i = 0; i < n; ++i) {
    const auto nbr = graph.neighbors(i);
    if (nbr.empty()) continue;
    std::int64_t s = 0;
    for (NodeId u : nbr) s += graph.degree(u);
    const double knn = static_cast<double>(s) / static_cast<double>(nbr.size());
    out.knn_per_node[static_cast<std::size_t>(i)] = knn;
    defined.emplace_back(static_cast<NodeId>(nbr.size()), knn);
  }
  std::sort(defined.begin(), defined.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < defined.size();) {
    std::size_t j = i;
    double s = 0;
    while (j < defined.size() && defined[j].first == defined[i].first) {
      s += defined[j].second;
      ++j;
    }
    out.knn_by_degree.emplace_back(defined[i].first, s / static_cast<double>(j - i));
    i = j;
  }

  // Degree-degree Pearson correlation over edges, from integer power sums.
  // With M edges and endpoint degrees (j_e, k_e):
  //   S_jk   = sum j_e k_e
  //   S_half = sum (j_e + k_e)
  //   S_sq   = sum (j_e^2 + k_e^2)
  //   r = (4 M S_jk - S_half^2) / (2 M S_sq - S_half^2)
  // which is Pearson r of the symmetrised endpoint lists, exactly.
  __int128 s_jk = 0, s_half = 0, s_sq = 0;
  std::int64_t m_edges = 0;
  for (NodeId i = 0; i < n; ++i) {
    const std::int64_t ki = graph.degree(i);
    for (NodeId u : graph.neighbors(i)) {
      if (u <= i) continue;  // each undirected edge once
      const std::int64_t ku = graph.degree(u);
      s_jk += static_cast<__int128>(ki) * ku;
      s_half += ki + ku;
      s_sq += static_cast<__int128>(ki) * ki + static_cast<__int128>(ku) * ku;
      ++m_edges;
    }
  }
  const __int128 num = 4 * static_cast<__int128>(m_edges) * s_jk - s_half * s_half;
  const __int128 den = 2 * static_cast<__int128>(m_edges) * s_sq - s_half * s_half;
  if (den == 0) {
    out.assortativity_r = std::nullopt;  // every edge joins equal degrees
  } else {
    out.assortativity_r = static_cast<double>(num) / static_cast<double>(den);
  }
  return out;
}

}  // namespace vgnet
