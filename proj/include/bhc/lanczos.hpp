#pragma once

#include <cstdint>
#include <vector>

#include "bhc/sparse.hpp"

namespace bhc {

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit norm
  double residual = 0.0;       // ||M x - value x||_2, measured, not a bound
};

struct LanczosOptions {
  double tol = 1e-8;      // residual tolerance, relative to ||M||_inf
  int max_basis = 160;    // Krylov basis size per restart cycle
  long max_matvecs = 200000;
  int max_stagnant_cycles = 6;  // restart cycles without a new converged pair
  std::uint64_t seed = 0x5eed;
  const std::vector<double>* warm_start = nullptr;  // initial direction hint
};

// Extremal eigenpairs of a symmetric sparse matrix by Lanczos with full
// reorthogonalization.  The spectrum is folded by the infinity norm so the
// wanted end is always the dominant end; converged Ritz vectors are locked
// and deflated, and the iteration restarts until p pairs are locked, which
// makes repeated eigenvalues come out with their full multiplicity.
//
// smallest_eigenpairs returns values ascending, largest_eigenpairs descending.
// Throws on p > n or if the matvec/stagnation budget is exhausted before
// convergence (message carries the best residual reached).
std::vector<EigenPair> smallest_eigenpairs(const SymmetricSparseMatrix& m, int p,
                                           const LanczosOptions& opts = {});
std::vector<EigenPair> largest_eigenpairs(const SymmetricSparseMatrix& m, int p,
                                          const LanczosOptions& opts = {});

}  // namespace bhc
