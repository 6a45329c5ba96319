#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhc/factor.hpp"
#include "bhc/graph.hpp"
#include "bhc/kmeans.hpp"
#include "bhc/zeta.hpp"

namespace bhc {

// Number of communities as the count of negative eigenvalues of H at
// r = sqrt(rho_hat), computed from the factorization inertia.
int estimate_k(const Graph& g, const FactorOptions& factor_opts = {});

struct ClusterOptions {
  std::optional<int> forced_k;  // known-k protocol: bypass estimate_k
  std::uint64_t seed = 0x5eed;
  double zeta_tol = -1.0;  // bisection bracket width; <= 0 picks 1e-3 sqrt(rho_hat)
  double eig_tol = 1e-8;
  int grid_points = 32;
  bool use_largest_component = false;  // default: drop isolated nodes only
  int kmeans_restarts = 10;
};

struct ClassDiagnostics {
  int p = 0;               // eigenvalue index
  double zeta = 0.0;       // crossing estimate (signed)
  double nu_at_zeta = 0.0;
  double eig_residual = 0.0;
  bool degenerate = false;
  bool dropped = false;
  std::string note;
};

struct ClusteringResult {
  std::string method;
  int k_hat = 1;
  std::vector<int> labels;           // one per compact node id of the input graph
  std::vector<double> zetas;         // informative crossings, one per embedding column
  std::vector<double> embedding;     // n_active x columns, row-major
  int embedding_columns = 0;
  std::vector<NodeId> active_nodes;  // compact ids that entered the spectral step
  double kmeans_inertia = 0.0;
  double rho_hat = 0.0;
  std::vector<ClassDiagnostics> diagnostics;
};

// Full pipeline: estimate k (unless forced), locate the zero crossing of
// nu_p for p = 2..k, cluster the rows of the resulting eigenvector embedding
// with k-means.  Classes whose crossing cannot be found are dropped with a
// warning entry in the diagnostics.  Nodes outside the active set are
// assigned to the cluster whose centroid is nearest to the origin.
ClusteringResult algorithm1(const Graph& g, const ClusterOptions& opts = {});

enum class BaselineMethod {
  bethe_fixed_r,   // H_r at a fixed r (default sqrt(rho_hat))
  adjacency,       // leading adjacency eigenvectors
  rw_second,       // leading random-walk eigenvectors
  rw_oracle_best,  // best single random-walk eigenvector judged against the truth
};

BaselineMethod baseline_from_name(const std::string& name);
std::string baseline_name(BaselineMethod method);

struct BaselineOptions {
  std::uint64_t seed = 0x5eed;
  double eig_tol = 1e-8;
  std::optional<double> r;                // bethe_fixed_r only
  const std::vector<int>* truth = nullptr;  // rw_oracle_best: labels over compact ids
  int kmeans_restarts = 10;
  int oracle_candidates = 25;  // rw_oracle_best: non-trivial eigenvectors scanned
};

// Spectral baselines sharing the embedding/k-means conventions of algorithm1.
ClusteringResult baseline_cluster(const Graph& g, BaselineMethod method, int k,
                                  const BaselineOptions& opts = {});

}  // namespace bhc
