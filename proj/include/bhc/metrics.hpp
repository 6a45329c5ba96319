#pragma once

#include <vector>

#include "bhc/graph.hpp"

namespace bhc {

// Closed-form quantities for the balanced 2-class model with heterogeneity
// phi = E[theta^2].
struct TheoryParams {
  double c_in = 0.0;
  double c_out = 0.0;
  double phi = 1.0;

  double c() const { return 0.5 * (c_in + c_out); }
  double alpha() const;            // (c_in - c_out) / sqrt(c)
  double alpha_c() const;          // detectability threshold 2 / sqrt(phi)
  bool detectable() const;
  double zeta() const;             // (c_in + c_out) / (c_in - c_out) = 2 sqrt(c) / alpha
  double f_alpha() const;          // sqrt(c_in c_out) / (c_in - c_out)
  double lambda_alpha() const;     // -(zeta^2 - 1) = -4 f_alpha^2
  double mu_complement() const;    // 1 - mu = sqrt((c phi - zeta^2)/(c phi - 1)), 0 below threshold
};

// Chance-corrected agreement between two labelings over the best class
// matching: (max_perm acc - 1/k) / (1 - 1/k) with k = max of the two class
// counts.  Exhaustive over permutations for k <= 8, Hungarian assignment
// above.  Returns 0 when both labelings are single-class.
double overlap(const std::vector<int>& estimated, const std::vector<int>& truth);

// Newman modularity of a labeling (labels over compact node ids).
double modularity(const Graph& g, const std::vector<int>& labels);

// Mean over nodes of erf(sqrt(alpha^2 d_i / (8c - 2 alpha^2) *
// (c phi - zeta^2)/(c phi - 1))); 0 at or below the detectability threshold.
// The real-valued overload accepts expected degrees (c * theta_i).
double predicted_overlap(const std::vector<double>& degrees, const TheoryParams& params);
double predicted_overlap(const std::vector<NodeId>& degrees, const TheoryParams& params);

struct EigvecStats {
  double class_mean[2] = {0.0, 0.0};  // mean of the aligned, sqrt(n)-scaled entries per class
  double residual_variance = 0.0;     // variance of sqrt(d_i)/(2 f) standardized residuals
  int informative_nodes = 0;          // degree >= 1 nodes entering the statistics
};

// Compares an informative eigenvector against the theoretical shape: entries
// concentrate at +/- (1 - mu) per class with fluctuations of scale
// 2 f_alpha / sqrt(d_i).  x is rescaled to ||x||^2 = n and sign-aligned with
// the truth before measuring; zero-degree nodes are excluded.
EigvecStats eigvec_stats(const std::vector<double>& x, const std::vector<int>& truth,
                         const std::vector<NodeId>& degrees, const TheoryParams& params);

struct DetectableResult {
  int count = 0;            // eigenvalues of C*Pi above sqrt(c/phi)
  double c = 0.0;           // common row sum of C*Pi
  std::vector<double> tau;  // eigenvalues of C*Pi, descending
};

// Number of detectable classes for a general affinity: eigenvalues tau_p of
// C*Pi (computed through the symmetric similarity Pi^{1/2} C Pi^{1/2})
// exceeding sqrt(c/phi).  Validates the constant-row-sum property first.
DetectableResult detectable_count(const std::vector<double>& C, const std::vector<double>& pi,
                                  double phi);

// Signed relative error between the estimated and detectable class counts.
double recovery_metric(int k_hat, int k_detectable);

}  // namespace bhc
