#include "bhc/nonbacktracking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bhc/bethe.hpp"
#include "bhc/rng.hpp"

namespace bhc {

DirectedEdgeIndex::DirectedEdgeIndex(const Graph& g) {
  const NodeId n = g.num_nodes();
  const std::int64_t m = g.num_edges();
  tails_.resize(static_cast<std::size_t>(2 * m));
  out_offsets_.assign(n + 1, 0);
  out_ids_.resize(static_cast<std::size_t>(2 * m));

  // Assign undirected edge ids in (u < v) CSR order, then record, for every
  // adjacency slot (u, x), the directed id of u -> x.
  std::int64_t edge_id = 0;
  std::vector<std::int64_t> cursor(n, 0);
  for (NodeId u = 0; u < n; ++u) out_offsets_[u + 1] = out_offsets_[u] + g.degree(u);
  for (NodeId u = 0; u < n; ++u) cursor[u] = out_offsets_[u];

  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) {
        const std::int64_t fwd = 2 * edge_id;      // u -> v
        const std::int64_t bwd = fwd + 1;          // v -> u
        tails_[fwd] = u;
        tails_[bwd] = v;
        out_ids_[cursor[u]++] = fwd;
        out_ids_[cursor[v]++] = bwd;
        ++edge_id;
      }
    }
  }
}

void DirectedEdgeIndex::apply(const std::vector<double>& w, std::vector<double>& y) const {
  const std::int64_t two_m = static_cast<std::int64_t>(tails_.size());
  if (static_cast<std::int64_t>(w.size()) != two_m)
    throw std::invalid_argument("DirectedEdgeIndex::apply: vector length mismatch");
  y.assign(w.size(), 0.0);

  // out_sum[u] = sum of w over directed edges with tail u
  const NodeId n = static_cast<NodeId>(out_offsets_.size()) - 1;
  std::vector<double> out_sum(n, 0.0);
  for (NodeId u = 0; u < n; ++u)
    for (std::int64_t pos = out_offsets_[u]; pos < out_offsets_[u + 1]; ++pos)
      out_sum[u] += w[out_ids_[pos]];

  // (Bw)_(i->j) = out_sum[j] - w[(j->i)]
  for (std::int64_t id = 0; id < two_m; ++id) y[id] = out_sum[head(id)] - w[reverse(id)];
}

NonBacktrackingMatrix build_nonbacktracking(const Graph& g, std::int64_t cap) {
  const std::int64_t two_m = 2 * g.num_edges();
  if (two_m > cap)
    throw std::invalid_argument("build_nonbacktracking: 2m = " + std::to_string(two_m) +
                                " exceeds cap " + std::to_string(cap));
  DirectedEdgeIndex index(g);
  NonBacktrackingMatrix b;
  b.dim = two_m;
  b.offsets.assign(static_cast<std::size_t>(two_m) + 1, 0);
  for (std::int64_t id = 0; id < two_m; ++id) {
    const NodeId j = index.head(id);
    b.offsets[id + 1] = b.offsets[id] + g.degree(j) - 1;
  }
  b.cols.resize(static_cast<std::size_t>(b.offsets[two_m]));
  for (std::int64_t id = 0; id < two_m; ++id) {
    std::int64_t pos = b.offsets[id];
    const std::int64_t back = DirectedEdgeIndex::reverse(id);
    for (std::int64_t out : index.out_edges(index.head(id))) {
      if (out == back) continue;
      b.cols[pos++] = out;
    }
    std::sort(b.cols.begin() + b.offsets[id], b.cols.begin() + b.offsets[id + 1]);
  }
  return b;
}

RhoBResult power_rho_B(const Graph& g, double tol, int max_iterations, std::uint64_t seed) {
  if (g.num_edges() == 0)
    throw std::invalid_argument("power_rho_B: graph has no edges");

  DirectedEdgeIndex index(g);
  const std::size_t dim = static_cast<std::size_t>(2 * g.num_edges());

  Rng rng(seed);
  std::vector<double> v(dim), y(dim);
  for (auto& x : v) x = rng.uniform(0.5, 1.5);  // positive start reaches every block
  double nv = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  for (auto& x : v) x /= nv;

  constexpr int kWindow = 12;  // divisible by the short rotation periods
  constexpr int kStable = 5;
  std::vector<double> log_growth;
  log_growth.reserve(static_cast<std::size_t>(max_iterations));

  double estimate = 0.0, previous = -1.0;
  int stable_steps = 0;

  for (int iter = 1; iter <= max_iterations; ++iter) {
    index.apply(v, y);
    double ny = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (ny == 0.0) return {0.0, iter};  // nilpotent B (forest): spectral radius 0
    for (std::size_t i = 0; i < dim; ++i) v[i] = y[i] / ny;
    log_growth.push_back(std::log(ny));

    if (iter >= kWindow) {
      double acc = 0.0;
      for (int t = iter - kWindow; t < iter; ++t) acc += log_growth[t];
      estimate = std::exp(acc / kWindow);
      if (previous > 0.0 && std::abs(estimate - previous) <= tol * estimate) {
        if (++stable_steps >= kStable) return {estimate, iter};
      } else {
        stable_steps = 0;
      }
      previous = estimate;
    }
  }

  if (estimate == 0.0 && !log_growth.empty()) {
    // budget shorter than the averaging window: report what the history gives
    const double acc = std::accumulate(log_growth.begin(), log_growth.end(), 0.0);
    estimate = std::exp(acc / static_cast<double>(log_growth.size()));
  }
  std::ostringstream msg;
  msg << "power_rho_B: growth estimate still moving after " << max_iterations
      << " iterations (last estimate " << estimate
      << "); leading eigenvalues likely form an oscillating complex pair";
  throw PowerIterationError(msg.str(), estimate);
}

FactorizationResult log_abs_det_H(const Graph& g, double r, const FactorOptions& opts) {
  return factor_inertia(build_bethe_hessian(g, r), opts);
}

}  // namespace bhc
