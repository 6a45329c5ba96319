#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bhc {

using NodeId = std::int32_t;
using EdgeCount = std::int64_t;

// Undirected simple graph in CSR form.  Node ids are compacted to 0..n-1 in
// order of first appearance; the original ids are kept so labels and output
// files can refer to the ids the caller used.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list over compact ids [0, n).  Self-loops are
  // dropped, duplicate edges (either orientation) merged.
  Graph(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
        std::vector<std::int64_t> original_ids = {});

  NodeId num_nodes() const { return static_cast<NodeId>(offsets_.size()) - 1; }
  EdgeCount num_edges() const { return static_cast<EdgeCount>(adj_.size()) / 2; }

  NodeId degree(NodeId u) const { return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]); }
  NodeId max_degree() const;

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const;

  std::int64_t original_id(NodeId u) const { return original_ids_[u]; }
  const std::vector<std::int64_t>& original_ids() const { return original_ids_; }

  // Undirected edges as (u, v) with u < v, in CSR order.
  std::vector<std::pair<NodeId, NodeId>> edge_list() const;

  // Equality is on the labeled graph: same original-id vertex set and edge set.
  bool operator==(const Graph& other) const;

 private:
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<NodeId> adj_;
  std::vector<std::int64_t> original_ids_;
};

// Reads "u v" pairs, one edge per line.  Lines starting with '#' or '%' and
// blank lines are skipped.  With one_indexed, ids are shifted down by one
// (ids must then be >= 1).  Ids are compacted by first appearance.
Graph load_edge_list(const std::string& path, bool one_indexed = false);

// Writes one "u v" line per edge using original ids, u < v, in CSR order.
// load_edge_list(save_edge_list(g)) reproduces g exactly.
void save_edge_list(const Graph& g, const std::string& path);

// Connected components; each component's nodes sorted ascending, components
// ordered by their smallest node.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Subgraph induced by `nodes` (compact ids of g, need not be sorted).
// The result's original ids are inherited from g, so labels keep lining up.
// Also returns the map from new compact id to the old compact id.
std::pair<Graph, std::vector<NodeId>> induced_subgraph(const Graph& g,
                                                       const std::vector<NodeId>& nodes);

std::pair<Graph, std::vector<NodeId>> largest_component(const Graph& g);

// Spectral-radius estimate for the non-backtracking operator from the degree
// sequence: sum(d_i^2) / sum(d_i).  Requires at least one edge.
double estimate_rho_B(const Graph& g);

// Integer class labels, one per original node id (line i of a labels file is
// the label of original id i).
struct LabelVector {
  std::vector<int> labels;
  int num_classes = 0;
};

LabelVector load_labels(const std::string& path);
void save_labels(const LabelVector& labels, const std::string& path);

}  // namespace bhc
