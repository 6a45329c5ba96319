#include "bhc/bethe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bhc {

SymmetricSparseMatrix build_bethe_hessian(const Graph& g, double r) {
  const double shift = r * r - 1.0;
  return SymmetricSparseMatrix::from_graph(
      g, [&](NodeId u) { return shift + g.degree(u); },
      [&](NodeId, NodeId) { return -r; });
}

SymmetricSparseMatrix build_adjacency(const Graph& g) {
  return SymmetricSparseMatrix::from_graph(
      g, [](NodeId) { return 0.0; }, [](NodeId, NodeId) { return 1.0; });
}

SymmetricSparseMatrix build_rw_symmetric(const Graph& g) {
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (g.degree(u) == 0)
      throw std::invalid_argument(
          "build_rw_symmetric: node " + std::to_string(g.original_id(u)) +
          " has degree 0; restrict to a connected component first");
  }
  return SymmetricSparseMatrix::from_graph(
      g, [](NodeId) { return 0.0; },
      [&](NodeId u, NodeId v) {
        return 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
      });
}

std::vector<EigenPair> rw_leading_eigenpairs(const Graph& g, int count,
                                             const LanczosOptions& opts) {
  const SymmetricSparseMatrix s = build_rw_symmetric(g);
  std::vector<EigenPair> pairs = largest_eigenpairs(s, count, opts);
  for (auto& pair : pairs) {
    double nrm2 = 0.0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      pair.vector[u] /= std::sqrt(static_cast<double>(g.degree(u)));
      nrm2 += pair.vector[u] * pair.vector[u];
    }
    const double nrm = std::sqrt(nrm2);
    for (auto& x : pair.vector) x /= nrm;
  }
  return pairs;
}

}  // namespace bhc
