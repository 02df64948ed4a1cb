#include "vgnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "vgnet/errors.hpp"

namespace vgnet {

Graph Graph::from_edges(NodeId n_nodes, std::span<const Edge> edges, GraphMeta meta) {
  if (n_nodes < 0) raise(errc::precondition_failed, "negative node count");
  Graph g;
  g.n_nodes_ = n_nodes;
  g.meta_ = std::move(meta);
  g.offsets_.assign(static_cast<std::size_t>(n_nodes) + 1, 0);

  for (const Edge& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n_nodes || e.second >= n_nodes)
      raise(errc::index_out_of_range,
            "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    if (e.first == e.second)
      raise(errc::precondition_failed, "self-loop at node " + std::to_string(e.first));
    ++g.offsets_[static_cast<std::size_t>(e.first) + 1];
    ++g.offsets_[static_cast<std::size_t>(e.second) + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.adj_.resize(static_cast<std::size_t>(2) * edges.size());
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.first)]++)] = e.second;
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.second)]++)] = e.first;
  }
  for (NodeId i = 0; i < n_nodes; ++i) {
    auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(i)]);
    auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(i) + 1]);
    std::sort(begin, end);
    if (std::adjacent_find(begin, end) != end)
      raise(errc::precondition_failed, "duplicate edge at node " + std::to_string(i));
  }
  return g;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), j);
}

void export_edgelist(const Graph& graph, std::ostream& out) {
  out << "# nodes: " << graph.n_nodes() << '\n';
  out << "# edges: " << graph.n_edges() << '\n';
  const GraphMeta& m = graph.meta();
  if (!m.instrument.empty()) out << "# instrument: " << m.instrument << '\n';
  if (!m.frequency.empty()) out << "# frequency: " << m.frequency << '\n';
  if (!m.window.empty()) out << "# window: " << m.window << '\n';
  for (NodeId i = 0; i < graph.n_nodes(); ++i)
    for (NodeId j : graph.neighbors(i))
      if (i < j) out << i << ' ' << j << '\n';
}

Graph import_edgelist(std::istream& in) {
  std::vector<Edge> edges;
  NodeId n_nodes = 0;
  bool n_from_header = false;
  GraphMeta meta;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto key_end = line.find(':');
      if (key_end == std::string::npos) continue;
      std::string key = line.substr(1, key_end - 1);
      std::string value = line.substr(key_end + 1);
      const auto strip = [](std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      strip(key);
      strip(value);
      if (key == "nodes") {
        n_nodes = static_cast<NodeId>(std::stol(value));
        n_from_header = true;
      } else if (key == "instrument") {
        meta.instrument = value;
      } else if (key == "frequency") {
        meta.frequency = value;
      } else if (key == "window") {
        meta.window = value;
      }
      continue;
    }
    NodeId a, b;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ' ')
      raise(errc::malformed_csv, "edge list line " + std::to_string(line_no));
    auto r2 = std::from_chars(r1.ptr + 1, end, b);
    if (r2.ec != std::errc() || r2.ptr != end)
      raise(errc::malformed_csv, "edge list line " + std::to_string(line_no));
    edges.emplace_back(a, b);
    if (!n_from_header) n_nodes = std::max({n_nodes, a + 1, b + 1});
  }
  return Graph::from_edges(n_nodes, edges, std::move(meta));
}

}  // namespace vgnet
