#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bhc/bethe.hpp"
#include "bhc/graph.hpp"
#include "bhc/lanczos.hpp"

namespace bhc {

// nu_p(r): p-th smallest eigenvalue of H_r (1-based p).
double nu(const Graph& g, double r, int p, double eig_tol = 1e-8, std::uint64_t seed = 0x5eed);

// Evaluator for nu curves on a fixed graph: reuses the sparsity pattern and
// warm-starts each solve from the previous eigenvector, which makes grid
// scans and bisections cheap.
class BetheCurve {
 public:
  explicit BetheCurve(const Graph& g, double eig_tol = 1e-8, std::uint64_t seed = 0x5eed);

  // The p smallest eigenpairs of H_r, ascending.
  const std::vector<EigenPair>& eval(double r, int p);

  int evaluations() const { return evaluations_; }
  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  double eig_tol_;
  std::uint64_t seed_;
  SymmetricSparseMatrix h_;
  std::vector<EigenPair> last_;
  double last_r_ = 0.0;
  int evaluations_ = 0;
};

struct NotDetectableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CrossingResult {
  double r_star = 0.0;
  int p = 0;
  double bracket_lo = 0.0, bracket_hi = 0.0;  // final bracket, opposite nu signs
  double nu_lo = 0.0, nu_hi = 0.0;
  double achieved_width = 0.0;
  int evaluations = 0;
  bool degenerate = false;  // nu_p already non-positive at |r| -> 1+
  EigenPair pair;           // re-extracted exactly at r_star
};

struct ZetaOptions {
  int grid_points = 32;
  double eig_tol = 1e-8;
  std::uint64_t seed = 0x5eed;
  bool allow_disassortative = true;
};

// Estimates zeta_p as the first downward (+ to -) zero crossing of nu_p(r)
// scanning a geometric grid on (1, sqrt(rho_hat)], refined by bisection to
// bracket width `tol` (tol <= 0 picks 1e-3 * sqrt(rho_hat)).  The grid is
// refined once (4x) before giving up.  With allow_disassortative the mirror
// interval [-sqrt(rho_hat), -1) is scanned as well -- following nu_{p-1}
// there, since the leading direction only pins nu_1 on the positive axis --
// and of the two candidate crossings the one closer to 1 wins.  A negative
// returned r_star means the disassortative crossing won.  If no axis yields
// a crossing, throws NotDetectableError.
CrossingResult estimate_zeta_method2(const Graph& g, int p, double tol = -1.0,
                                     const ZetaOptions& opts = {});

struct GammaResult {
  double gamma1 = 0.0;            // largest real eigenvalue of B (estimate)
  std::optional<double> gamma2;   // second one, absent when inside the bulk
  double rho_hat = 0.0;
  int evaluations = 0;

  // Method-1 zeta estimate gamma1/gamma2; throws if gamma2 was not found.
  double zeta() const;
};

// Estimates gamma_1, gamma_2 as the largest zero crossings of nu_1, nu_2 on
// (sqrt(rho_hat), d_max + 1], where H_r is diagonally dominant at the top end.
GammaResult estimate_gamma_pair(const Graph& g, double tol = -1.0, const ZetaOptions& opts = {});

// zeta for a balanced 2-class model: (c_in + c_out) / (c_in - c_out).
// Negative for disassortative parameters; throws when c_in == c_out.
double zeta_from_params(double c_in, double c_out);

}  // namespace bhc
