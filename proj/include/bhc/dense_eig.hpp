#pragma once

#include <vector>

#include "bhc/sparse.hpp"

namespace bhc {

struct DenseEigResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n; column j is the eigenvector of values[j]
};

// Full eigendecomposition of a dense symmetric matrix (row-major).  Householder
// tridiagonalization followed by implicit-shift QL.  Throws on asymmetric
// input or if the QL iteration fails to converge.
DenseEigResult dense_eigh(std::vector<double> a, NodeId n);

// Eigenvalues only; skips the transform accumulation (about 4x faster).
std::vector<double> dense_eigenvalues(std::vector<double> a, NodeId n);

// Eigendecomposition of a symmetric tridiagonal matrix given its diagonal and
// subdiagonal (sub.size() == diag.size() - 1).
DenseEigResult tridiag_eigh(std::vector<double> diag, std::vector<double> sub,
                            bool want_vectors = true);

// Ascending spectrum of a sparse symmetric matrix via the dense path.
// Refuses dimensions above `cap`.
std::vector<double> dense_spectrum(const SymmetricSparseMatrix& m, NodeId cap = 2000);

}  // namespace bhc
