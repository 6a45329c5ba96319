#pragma once

#include <vector>

#include "bhc/graph.hpp"
#include "bhc/lanczos.hpp"
#include "bhc/sparse.hpp"

namespace bhc {

// H_r = (r^2 - 1) I + D - r A.
SymmetricSparseMatrix build_bethe_hessian(const Graph& g, double r);

// Adjacency as a symmetric operator (zero diagonal).
SymmetricSparseMatrix build_adjacency(const Graph& g);

// Symmetrized random walk D^{-1/2} A D^{-1/2}; same spectrum as D^{-1} A.
// Requires minimum degree >= 1 (restrict to a component first).
SymmetricSparseMatrix build_rw_symmetric(const Graph& g);

// Leading eigenpairs of the random-walk operator D^{-1} A: eigenvalues of the
// symmetrized form, eigenvectors back-transformed by D^{-1/2} and
// renormalized.  Values come out in descending order; the first is 1 on a
// connected graph.
std::vector<EigenPair> rw_leading_eigenpairs(const Graph& g, int count,
                                             const LanczosOptions& opts = {});

}  // namespace bhc
