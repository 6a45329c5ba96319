#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bhc/factor.hpp"
#include "bhc/graph.hpp"

namespace bhc {

// Indexing for the 2m directed edges of an undirected graph: undirected edge
// e = {u, v} with u < v yields directed ids 2e (u -> v) and 2e+1 (v -> u), so
// reversal is id ^ 1.
class DirectedEdgeIndex {
 public:
  explicit DirectedEdgeIndex(const Graph& g);

  std::int64_t num_directed() const { return static_cast<std::int64_t>(tails_.size()); }
  NodeId tail(std::int64_t id) const { return tails_[id]; }
  NodeId head(std::int64_t id) const { return tails_[id ^ 1]; }
  static std::int64_t reverse(std::int64_t id) { return id ^ 1; }

  // Directed ids (u -> x) for all neighbors x of u, aligned with g.neighbors(u).
  std::span<const std::int64_t> out_edges(NodeId u) const {
    return {out_ids_.data() + out_offsets_[u], out_ids_.data() + out_offsets_[u + 1]};
  }

  // y = B w for the non-backtracking operator
  // B[(i->j), (l->m)] = 1 iff l == j and m != i.  O(m) per apply.
  void apply(const std::vector<double>& w, std::vector<double>& y) const;

 private:
  std::vector<NodeId> tails_;           // tail node per directed id
  std::vector<std::int64_t> out_offsets_;
  std::vector<std::int64_t> out_ids_;
};

// Explicit sparse B (row-major CSR over directed ids) for small graphs;
// refuses 2m above `cap`.
struct NonBacktrackingMatrix {
  std::int64_t dim = 0;
  std::vector<std::int64_t> offsets;
  std::vector<std::int64_t> cols;
};

NonBacktrackingMatrix build_nonbacktracking(const Graph& g, std::int64_t cap = 20000);

struct PowerIterationError : std::runtime_error {
  PowerIterationError(const std::string& message, double estimate)
      : std::runtime_error(message), last_estimate(estimate) {}
  double last_estimate;
};

struct RhoBResult {
  double rho = 0.0;
  int iterations = 0;
};

// Spectral radius of B by matrix-free power iteration.  The growth rate is
// estimated over a 12-step window (geometric mean), which also converges when
// the leading modulus is shared by a conjugate pair or a rotating multiplet;
// exit requires the relative change of the estimate to stay within tol for a
// few consecutive steps.  Throws PowerIterationError (with the last estimate
// attached) if the budget runs out while the estimate still oscillates.
RhoBResult power_rho_B(const Graph& g, double tol = 1e-8, int max_iterations = 20000,
                       std::uint64_t seed = 0x5eed);

// sign / log|det| / negative-eigenvalue count of H_r.  Real eigenvalues of B
// outside the bulk are exactly the r values where the determinant vanishes.
FactorizationResult log_abs_det_H(const Graph& g, double r, const FactorOptions& opts = {});

}  // namespace bhc
