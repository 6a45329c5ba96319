#include "bhc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bhc {

Graph::Graph(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
             std::vector<std::int64_t> original_ids) {
  if (n < 0) throw std::invalid_argument("Graph: negative node count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<NodeId> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
  adj_.resize(static_cast<std::size_t>(offsets_[n]));
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  // Sorted insertion order of (u,v) pairs already yields sorted rows for u;
  // rows for the larger endpoint collect smaller endpoints in sorted order
  // too, but the mix of the two roles does not, so sort each row.
  for (NodeId u = 0; u < n; ++u)
    std::sort(adj_.begin() + offsets_[u], adj_.begin() + offsets_[u + 1]);

  if (original_ids.empty()) {
    original_ids_.resize(n);
    std::iota(original_ids_.begin(), original_ids_.end(), std::int64_t{0});
  } else {
    if (static_cast<NodeId>(original_ids.size()) != n)
      throw std::invalid_argument("Graph: original id count does not match node count");
    original_ids_ = std::move(original_ids);
  }
}

NodeId Graph::max_degree() const {
  NodeId best = 0;
  for (NodeId u = 0; u < num_nodes(); ++u) best = std::max(best, degree(u));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(num_edges()));
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

bool Graph::operator==(const Graph& other) const {
  if (num_nodes() != other.num_nodes() || num_edges() != other.num_edges()) return false;
  auto a_ids = original_ids_;
  auto b_ids = other.original_ids_;
  std::sort(a_ids.begin(), a_ids.end());
  std::sort(b_ids.begin(), b_ids.end());
  if (a_ids != b_ids) return false;

  auto canonical = [](const Graph& g) {
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    edges.reserve(static_cast<std::size_t>(g.num_edges()));
    for (const auto& [u, v] : g.edge_list()) {
      std::int64_t a = g.original_id(u), b = g.original_id(v);
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  return canonical(*this) == canonical(other);
}

namespace {

std::int64_t parse_id(const std::string& token, std::size_t line_no, const std::string& path) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) +
                             ": expected integer node id, got '" + token + "'");
  }
  return value;
}

}  // namespace

Graph load_edge_list(const std::string& path, bool one_indexed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_edge_list: cannot open '" + path + "'");

  std::unordered_map<std::int64_t, NodeId> compact;
  std::vector<std::int64_t> original_ids;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto intern = [&](std::int64_t raw) {
    auto [it, inserted] = compact.try_emplace(raw, static_cast<NodeId>(original_ids.size()));
    if (inserted) original_ids.push_back(raw);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected 'u v', got '" + line + "'");
    }
    std::int64_t ua = parse_id(a, line_no, path);
    std::int64_t ub = parse_id(b, line_no, path);
    if (one_indexed) {
      if (ua < 1 || ub < 1)
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": id below 1 in one-indexed edge list");
      --ua;
      --ub;
    } else if (ua < 0 || ub < 0) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": negative node id");
    }
    const NodeId cu = intern(ua);  // intern in argument order: first appearance defines the id
    const NodeId cv = intern(ub);
    edges.emplace_back(cu, cv);
  }
  if (original_ids.empty())
    throw std::runtime_error("load_edge_list: '" + path + "' contains no edges");

  const auto n = static_cast<NodeId>(original_ids.size());
  return Graph(n, std::move(edges), std::move(original_ids));
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_edge_list: cannot open '" + path + "' for writing");
  for (const auto& [u, v] : g.edge_list())
    out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
  if (!out) throw std::runtime_error("save_edge_list: write to '" + path + "' failed");
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> comp(n, -1);
  std::vector<std::vector<NodeId>> components;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const auto id = static_cast<NodeId>(components.size());
    components.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      components[id].push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

std::pair<Graph, std::vector<NodeId>> induced_subgraph(const Graph& g,
                                                       const std::vector<NodeId>& nodes) {
  std::vector<NodeId> old_of_new(nodes);
  std::vector<NodeId> new_of_old(g.num_nodes(), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    NodeId u = old_of_new[i];
    if (u < 0 || u >= g.num_nodes())
      throw std::invalid_argument("induced_subgraph: node id out of range");
    if (new_of_old[u] >= 0) throw std::invalid_argument("induced_subgraph: duplicate node id");
    new_of_old[u] = static_cast<NodeId>(i);
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::int64_t> original_ids(old_of_new.size());
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    NodeId u = old_of_new[i];
    original_ids[i] = g.original_id(u);
    for (NodeId v : g.neighbors(u)) {
      if (new_of_old[v] >= 0 && u < v)
        edges.emplace_back(static_cast<NodeId>(i), new_of_old[v]);
    }
  }
  return {Graph(static_cast<NodeId>(old_of_new.size()), std::move(edges),
                std::move(original_ids)),
          std::move(old_of_new)};
}

std::pair<Graph, std::vector<NodeId>> largest_component(const Graph& g) {
  auto components = connected_components(g);
  if (components.empty()) throw std::invalid_argument("largest_component: empty graph");
  std::size_t best = 0;
  for (std::size_t i = 1; i < components.size(); ++i)
    if (components[i].size() > components[best].size()) best = i;
  return induced_subgraph(g, components[best]);
}

double estimate_rho_B(const Graph& g) {
  if (g.num_edges() == 0) throw std::invalid_argument("estimate_rho_B: graph has no edges");
  double sum_d = 0.0, sum_d2 = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const double d = g.degree(u);
    sum_d += d;
    sum_d2 += d * d;
  }
  return sum_d2 / sum_d;
}

LabelVector load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_labels: cannot open '" + path + "'");
  LabelVector result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::int64_t value = parse_id(line.substr(start, line.find_last_not_of(" \t\r") - start + 1),
                                  line_no, path);
    if (value < 0)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": negative label");
    result.labels.push_back(static_cast<int>(value));
    result.num_classes = std::max(result.num_classes, static_cast<int>(value) + 1);
  }
  if (result.labels.empty()) throw std::runtime_error("load_labels: '" + path + "' is empty");
  return result;
}

void save_labels(const LabelVector& labels, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_labels: cannot open '" + path + "' for writing");
  for (int l : labels.labels) out << l << '\n';
  if (!out) throw std::runtime_error("save_labels: write to '" + path + "' failed");
}

}  // namespace bhc
