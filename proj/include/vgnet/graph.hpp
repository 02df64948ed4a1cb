#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vgnet {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

struct GraphMeta {
  std::string instrument;
  std::string frequency;
  std::string window;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

/// Immutable undirected simple graph in compressed sparse row form. Each
/// edge is stored in both endpoint rows; rows are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds the CSR form from an unordered undirected edge list. Self-loops
  /// and duplicate edges are rejected.
  static Graph from_edges(NodeId n_nodes, std::span<const Edge> edges,
                          GraphMeta meta = {});

  NodeId n_nodes() const { return n_nodes_; }
  std::int64_t n_edges() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {adj_.data() + offsets_[static_cast<std::size_t>(i)],
            adj_.data() + offsets_[static_cast<std::size_t>(i) + 1]};
  }
  NodeId degree(NodeId i) const {
    return static_cast<NodeId>(offsets_[static_cast<std::size_t>(i) + 1] -
                               offsets_[static_cast<std::size_t>(i)]);
  }
  bool has_edge(NodeId i, NodeId j) const;

  const GraphMeta& meta() const { return meta_; }
  void set_meta(GraphMeta meta) { meta_ = std::move(meta); }

  /// Structural equality; metadata is ignored.
  bool same_edges(const Graph& other) const {
    return n_nodes_ == other.n_nodes_ && offsets_ == other.offsets_ &&
           adj_ == other.adj_;
  }

 private:
  NodeId n_nodes_ = 0;
  std::vector<std::int64_t> offsets_;  // size n_nodes + 1
  std::vector<NodeId> adj_;            // size 2 * n_edges, sorted per row
  GraphMeta meta_;
};

/// One `i j` pair per line with i < j, pairs ascending; `#`-prefixed header
/// comments carry node count and source metadata.
void export_edgelist(const Graph& graph, std::ostream& out);

/// Reads the export_edgelist format (unknown `# key: value` comments are
/// ignored). Node count is taken from the header when present, otherwise
/// from the largest endpoint.
Graph import_edgelist(std::istream& in);

}  // namespace vgnet
