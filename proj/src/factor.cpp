#include "bhc/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace bhc {

namespace {

// Classifies one pivot (or a 2x2 block eigenvalue surrogate) into the
// running inertia counts.
void account_pivot(double value, double threshold, FactorizationResult& out) {
  if (std::abs(value) < threshold) {
    ++out.n_zero;
    out.sign = 0;
  } else {
    out.log_abs_det += std::log(std::abs(value));
    if (value < 0.0) {
      ++out.n_negative;
      if (out.sign != 0) out.sign = -out.sign;
    }
  }
}

}  // namespace

FactorizationResult dense_bunch_kaufman(std::vector<double> a, NodeId n, double pivot_rel_tol,
                                        double scale) {
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("dense_bunch_kaufman: matrix size does not match dimension");
  auto at = [&](NodeId i, NodeId j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  if (scale <= 0.0) {
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) scale = 1.0;
  }
  const double threshold = pivot_rel_tol * scale;
  // Bunch-Kaufman pivot balance constant, minimizes worst-case element growth.
  const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;

  FactorizationResult out;
  out.sign = 1;
  out.backend = "dense-bk";

  auto swap_symmetric = [&](NodeId p, NodeId q) {
    if (p == q) return;
    for (NodeId j = 0; j < n; ++j) std::swap(at(p, j), at(q, j));
    for (NodeId i = 0; i < n; ++i) std::swap(at(i, p), at(i, q));
  };

  NodeId k = 0;
  while (k < n) {
    const double absakk = std::abs(at(k, k));
    NodeId imax = k;
    double colmax = 0.0;
    for (NodeId i = k + 1; i < n; ++i) {
      const double v = std::abs(at(i, k));
      if (v > colmax) {
        colmax = v;
        imax = i;
      }
    }

    bool use_two = false;
    if (std::max(absakk, colmax) == 0.0) {
      // Entire pivot column is zero: exact zero eigenvalue.
      account_pivot(0.0, threshold, out);
      ++k;
      continue;
    }

    if (absakk < alpha * colmax) {
      double rowmax = 0.0;
      for (NodeId j = k; j < imax; ++j) rowmax = std::max(rowmax, std::abs(at(imax, j)));
      for (NodeId i = imax + 1; i < n; ++i) rowmax = std::max(rowmax, std::abs(at(i, imax)));
      if (absakk * rowmax >= alpha * colmax * colmax) {
        // keep the 1x1 pivot at k
      } else if (std::abs(at(imax, imax)) >= alpha * rowmax) {
        swap_symmetric(k, imax);
      } else {
        swap_symmetric(k + 1, imax);
        use_two = true;
      }
    }

    if (!use_two) {
      const double d = at(k, k);
      account_pivot(d, threshold, out);
      if (std::abs(d) >= threshold) {
        for (NodeId i = k + 1; i < n; ++i) {
          const double w = at(i, k) / d;
          if (w == 0.0) continue;
          for (NodeId j = k + 1; j < n; ++j) at(i, j) -= w * at(k, j);
        }
        // keep symmetry exact rather than trusting roundoff
        for (NodeId i = k + 1; i < n; ++i)
          for (NodeId j = k + 1; j < i; ++j) at(j, i) = at(i, j);
      }
      ++k;
    } else {
      const double d11 = at(k, k), d21 = at(k + 1, k), d22 = at(k + 1, k + 1);
      const double det = d11 * d22 - d21 * d21;  // < 0 for a genuine 2x2 pivot
      if (std::abs(det) < threshold * threshold) {
        out.sign = 0;
        out.n_zero += 2;
      } else {
        out.log_abs_det += std::log(std::abs(det));
        if (det < 0.0) {
          // one negative, one positive eigenvalue
          ++out.n_negative;
          if (out.sign != 0) out.sign = -out.sign;
        } else {
          const int s = d11 + d22 < 0.0 ? -1 : 1;
          if (s < 0) out.n_negative += 2;
          // det > 0: both eigenvalues share the trace's sign; det sign even
        }
        const double inv11 = d22 / det, inv22 = d11 / det, inv21 = -d21 / det;
        for (NodeId i = k + 2; i < n; ++i) {
          const double c1 = at(i, k), c2 = at(i, k + 1);
          const double w1 = c1 * inv11 + c2 * inv21;
          const double w2 = c1 * inv21 + c2 * inv22;
          if (w1 == 0.0 && w2 == 0.0) continue;
          for (NodeId j = k + 2; j < n; ++j) at(i, j) -= w1 * at(k, j) + w2 * at(k + 1, j);
        }
        for (NodeId i = k + 2; i < n; ++i)
          for (NodeId j = k + 2; j < i; ++j) at(j, i) = at(i, j);
      }
      k += 2;
    }
  }
  return out;
}

namespace {

FactorizationResult sparse_ldlt(const SymmetricSparseMatrix& m, const FactorOptions& opts,
                                bool& broke_down) {
  const NodeId n = m.dim();
  broke_down = false;

  Eigen::SparseMatrix<double> s(n, n);
  {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(m.nnz()));
    const auto& offsets = m.offsets();
    const auto& cols = m.cols();
    const auto& values = m.values();
    for (NodeId u = 0; u < n; ++u)
      for (std::int64_t pos = offsets[u]; pos < offsets[u + 1]; ++pos)
        triplets.emplace_back(u, cols[pos], values[pos]);
    s.setFromTriplets(triplets.begin(), triplets.end());
  }

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower> solver;
  solver.compute(s);

  FactorizationResult out;
  out.sign = 1;
  out.backend = "sparse-ldlt";

  if (solver.info() != Eigen::Success) {
    broke_down = true;
    return out;
  }
  const auto& d = solver.vectorD();
  const double threshold = opts.pivot_rel_tol * std::max(m.inf_norm(), 1e-300);
  for (NodeId i = 0; i < n; ++i) {
    const double v = d[i];
    if (!std::isfinite(v)) {
      broke_down = true;  // hit a pivot the unpivoted LDL^T cannot handle
      return out;
    }
    account_pivot(v, threshold, out);
  }
  return out;
}

}  // namespace

FactorizationResult factor_inertia(const SymmetricSparseMatrix& m, const FactorOptions& opts) {
  const NodeId n = m.dim();
  const double scale = std::max(m.inf_norm(), 1e-300);

  if (n <= opts.dense_cap)
    return dense_bunch_kaufman(m.to_dense(n), n, opts.pivot_rel_tol, scale);

  bool broke_down = false;
  FactorizationResult out = sparse_ldlt(m, opts, broke_down);
  if (!broke_down) return out;

  if (n <= opts.fallback_cap)
    return dense_bunch_kaufman(m.to_dense(n), n, opts.pivot_rel_tol, scale);
  throw std::runtime_error(
      "factor_inertia: sparse LDL^T broke down on an indefinite matrix of dimension " +
      std::to_string(n) + ", above the dense fallback cap");
}

}  // namespace bhc
