#include "bhc/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bhc {

SymmetricSparseMatrix SymmetricSparseMatrix::from_graph(
    const Graph& g, const std::function<double(NodeId)>& diagonal,
    const std::function<double(NodeId, NodeId)>& off_diagonal) {
  SymmetricSparseMatrix m;
  const NodeId n = g.num_nodes();
  m.offsets_.assign(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) m.offsets_[u + 1] = m.offsets_[u] + g.degree(u) + 1;
  m.cols_.resize(static_cast<std::size_t>(m.offsets_[n]));
  m.values_.resize(m.cols_.size());

  for (NodeId u = 0; u < n; ++u) {
    std::int64_t pos = m.offsets_[u];
    bool diag_written = false;
    for (NodeId v : g.neighbors(u)) {
      if (!diag_written && v > u) {
        m.cols_[pos] = u;
        m.values_[pos] = diagonal(u);
        diag_written = true;
        ++pos;
      }
      m.cols_[pos] = v;
      m.values_[pos] = off_diagonal(u, v);
      ++pos;
    }
    if (!diag_written) {
      m.cols_[pos] = u;
      m.values_[pos] = diagonal(u);
      ++pos;
    }
  }
  return m;
}

void SymmetricSparseMatrix::set_values(
    const Graph& g, const std::function<double(NodeId)>& diagonal,
    const std::function<double(NodeId, NodeId)>& off_diagonal) {
  const NodeId n = dim();
  if (n != g.num_nodes())
    throw std::invalid_argument("SymmetricSparseMatrix::set_values: graph dimension mismatch");
  for (NodeId u = 0; u < n; ++u) {
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos) {
      const NodeId v = cols_[pos];
      values_[pos] = (v == u) ? diagonal(u) : off_diagonal(u, v);
    }
  }
}

void SymmetricSparseMatrix::multiply_serial(const double* x, double* y) const {
  const NodeId n = dim();
  for (NodeId u = 0; u < n; ++u) {
    double acc = 0.0;
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
      acc += values_[pos] * x[cols_[pos]];
    y[u] = acc;
  }
}

void SymmetricSparseMatrix::multiply_parallel(const double* x, double* y) const {
  const NodeId n = dim();
#pragma omp parallel for schedule(static)
  for (NodeId u = 0; u < n; ++u) {
    double acc = 0.0;
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
      acc += values_[pos] * x[cols_[pos]];
    y[u] = acc;
  }
}

namespace {

bool use_parallel(NodeId n) {
#ifdef _OPENMP
  return n >= 4096 && omp_get_max_threads() > 1;
#else
  (void)n;
  return false;
#endif
}

}  // namespace

void SymmetricSparseMatrix::multiply(const double* x, double* y) const {
  if (use_parallel(dim()))
    multiply_parallel(x, y);
  else
    multiply_serial(x, y);
}

void SymmetricSparseMatrix::multiply_shifted_neg(double shift, const double* x, double* y) const {
  const NodeId n = dim();
  if (use_parallel(n)) {
#pragma omp parallel for schedule(static)
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
        acc += values_[pos] * x[cols_[pos]];
      y[u] = shift * x[u] - acc;
    }
  } else {
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
        acc += values_[pos] * x[cols_[pos]];
      y[u] = shift * x[u] - acc;
    }
  }
}

double SymmetricSparseMatrix::inf_norm() const {
  double best = 0.0;
  for (NodeId u = 0; u < dim(); ++u) {
    double row = 0.0;
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
      row += std::abs(values_[pos]);
    best = std::max(best, row);
  }
  return best;
}

std::vector<double> SymmetricSparseMatrix::to_dense(NodeId cap) const {
  const NodeId n = dim();
  if (n > cap)
    throw std::invalid_argument("SymmetricSparseMatrix::to_dense: dimension " +
                                std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (NodeId u = 0; u < n; ++u)
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
      dense[static_cast<std::size_t>(u) * n + cols_[pos]] = values_[pos];
  return dense;
}

void SymmetricSparseMatrix::save_matrix_market(const std::string& path) const {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("save_matrix_market: cannot open '" + path + "' for writing");
  // coordinate format lists nonzeros: skip zero-valued stored entries (the
  // assembled pattern keeps every diagonal slot even when its value is zero)
  const NodeId n = dim();
  std::int64_t lower = 0;
  for (NodeId u = 0; u < n; ++u)
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos)
      if (cols_[pos] <= u && values_[pos] != 0.0) ++lower;

  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << n << ' ' << n << ' ' << lower << '\n';
  char buffer[64];
  for (NodeId u = 0; u < n; ++u) {
    for (std::int64_t pos = offsets_[u]; pos < offsets_[u + 1]; ++pos) {
      const NodeId v = cols_[pos];
      if (v > u || values_[pos] == 0.0) continue;
      std::snprintf(buffer, sizeof buffer, "%.17g", values_[pos]);
      out << (u + 1) << ' ' << (v + 1) << ' ' << buffer << '\n';
    }
  }
  if (!out) throw std::runtime_error("save_matrix_market: write to '" + path + "' failed");
}

}  // namespace bhc
