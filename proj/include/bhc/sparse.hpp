#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bhc/graph.hpp"

namespace bhc {

// Symmetric sparse matrix in CSR with both triangles stored, columns sorted
// per row.  All operators used here share the adjacency sparsity pattern
// (plus the diagonal), so instances are built from a Graph with a diagonal
// function and a per-edge off-diagonal function.
class SymmetricSparseMatrix {
 public:
  SymmetricSparseMatrix() = default;

  static SymmetricSparseMatrix from_graph(
      const Graph& g, const std::function<double(NodeId)>& diagonal,
      const std::function<double(NodeId, NodeId)>& off_diagonal);

  NodeId dim() const { return static_cast<NodeId>(offsets_.size()) - 1; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(cols_.size()); }

  // y = A x.  Uses the OpenMP kernel for large dimensions when threads are
  // available; rows are independent, so serial and parallel results are
  // bit-identical.
  void multiply(const double* x, double* y) const;
  void multiply_serial(const double* x, double* y) const;
  void multiply_parallel(const double* x, double* y) const;

  // y = shift * x - A x, the spectral fold used by the eigensolver.
  void multiply_shifted_neg(double shift, const double* x, double* y) const;

  double inf_norm() const;  // max absolute row sum

  // Row-major dense copy; refuses dimensions above `cap`.
  std::vector<double> to_dense(NodeId cap = 2000) const;

  // Rewrite the stored values in place, keeping the pattern.  Used when
  // scanning a one-parameter family of operators on a fixed graph.
  void set_values(const Graph& g, const std::function<double(NodeId)>& diagonal,
                  const std::function<double(NodeId, NodeId)>& off_diagonal);

  // MatrixMarket coordinate format, symmetric, lower triangle, 1-indexed,
  // values with 17 significant digits.
  void save_matrix_market(const std::string& path) const;

  const std::vector<std::int64_t>& offsets() const { return offsets_; }
  const std::vector<NodeId>& cols() const { return cols_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<NodeId> cols_;
  std::vector<double> values_;
};

}  // namespace bhc
