#pragma once

#include <string>

#include "bhc/sparse.hpp"

namespace bhc {

struct FactorizationResult {
  int sign = 0;              // sign of det: -1, 0 (numerically singular), +1
  double log_abs_det = 0.0;  // sum over non-negligible pivots when sign == 0
  NodeId n_negative = 0;     // negative eigenvalue count (Sylvester inertia)
  NodeId n_zero = 0;         // pivots below the singularity threshold
  std::string backend;       // "dense-bk" or "sparse-ldlt"
};

struct FactorOptions {
  double pivot_rel_tol = 1e-10;  // |pivot| < tol * ||M||_inf counts as zero
  NodeId dense_cap = 1500;       // at or below: dense Bunch-Kaufman
  NodeId fallback_cap = 8000;    // dense fallback limit if the sparse path breaks down
};

// Symmetric indefinite factorization for inertia and log|det|.  Dimensions up
// to dense_cap go through a dense Bunch-Kaufman with 2x2 pivoting; larger
// ones through a sparse LDL^T (fill-reducing ordering), falling back to the
// dense path if that breaks down on an indefinite matrix.
FactorizationResult factor_inertia(const SymmetricSparseMatrix& m,
                                   const FactorOptions& opts = {});

// Dense-path entry point used directly by tests: Bunch-Kaufman on a row-major
// symmetric matrix.  `scale` sets the singularity threshold (pass the
// infinity norm of the matrix; 0 means derive from the largest entry).
FactorizationResult dense_bunch_kaufman(std::vector<double> a, NodeId n, double pivot_rel_tol,
                                        double scale = 0.0);

}  // namespace bhc
