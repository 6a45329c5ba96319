#include "bhc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bhc/bethe.hpp"
#include "bhc/lanczos.hpp"
#include "bhc/metrics.hpp"
#include "bhc/nonbacktracking.hpp"
#include "bhc/rng.hpp"

namespace bhc {

int estimate_k(const Graph& g, const FactorOptions& factor_opts) {
  const double r = std::sqrt(estimate_rho_B(g));
  return static_cast<int>(log_abs_det_H(g, r, factor_opts).n_negative);
}

namespace {

// Active nodes, their subgraph, and a map back to the input graph.
struct ActiveSet {
  Graph sub;
  std::vector<NodeId> to_parent;
};

ActiveSet select_active(const Graph& g, bool use_largest_component) {
  if (use_largest_component) {
    auto [sub, map] = largest_component(g);
    return {std::move(sub), std::move(map)};
  }
  std::vector<NodeId> keep;
  keep.reserve(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    if (g.degree(u) >= 1) keep.push_back(u);
  if (keep.empty()) throw std::invalid_argument("algorithm1: graph has no edges");
  auto [sub, map] = induced_subgraph(g, keep);
  return {std::move(sub), std::move(map)};
}

// Flip each embedding column so its largest-magnitude entry is positive
// (deterministic orientation; ties cannot matter since the entry is unique
// by magnitude or the flip is a no-op).
void orient_columns(std::vector<double>& embedding, int n, int cols) {
  for (int c = 0; c < cols; ++c) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      const double value = embedding[static_cast<std::size_t>(i) * cols + c];
      if (std::abs(value) > std::abs(best)) best = value;
    }
    if (best < 0.0)
      for (int i = 0; i < n; ++i) embedding[static_cast<std::size_t>(i) * cols + c] *= -1.0;
  }
}

// Shared tail of every method: cluster embedding rows, then map labels back
// to the full graph, assigning inactive nodes to the centroid nearest the
// origin.
void finish_with_kmeans(const Graph& g, const ActiveSet& active, int k, std::uint64_t seed,
                        int restarts, ClusteringResult& result) {
  const int n_active = active.sub.num_nodes();
  if (result.embedding_columns == 0) {
    result.k_hat = 1;
    result.labels.assign(g.num_nodes(), 0);
    return;
  }

  KMeansOptions kopts;
  kopts.restarts = restarts;
  kopts.seed = derive_seed(seed, 0x6b6d);
  const KMeansResult km =
      kmeans(result.embedding, n_active, result.embedding_columns, k, kopts);
  result.kmeans_inertia = km.inertia;

  int fallback = 0;
  double best_norm = std::numeric_limits<double>::infinity();
  for (int c = 0; c < k; ++c) {
    double nrm = 0.0;
    for (int t = 0; t < result.embedding_columns; ++t) {
      const double value = km.centroids[static_cast<std::size_t>(c) * result.embedding_columns + t];
      nrm += value * value;
    }
    if (nrm < best_norm) {
      best_norm = nrm;
      fallback = c;
    }
  }

  result.labels.assign(g.num_nodes(), fallback);
  for (int i = 0; i < n_active; ++i) result.labels[active.to_parent[i]] = km.labels[i];
  result.k_hat = k;
}

}  // namespace

ClusteringResult algorithm1(const Graph& g, const ClusterOptions& opts) {
  ClusteringResult result;
  result.method = "algorithm1";

  ActiveSet active = select_active(g, opts.use_largest_component);
  result.active_nodes = active.to_parent;
  result.rho_hat = estimate_rho_B(active.sub);

  int k = 0;
  if (opts.forced_k) {
    k = *opts.forced_k;
    if (k < 1) throw std::invalid_argument("algorithm1: forced k must be >= 1");
  } else {
    k = estimate_k(active.sub);
    if (k < 1) {
      ClassDiagnostics note;
      note.note = "estimated k = " + std::to_string(k) + "; returning a single community";
      result.diagnostics.push_back(note);
      k = 1;
    }
  }

  if (k == 1) {
    result.k_hat = 1;
    result.labels.assign(g.num_nodes(), 0);
    return result;
  }

  const int n_active = active.sub.num_nodes();
  std::vector<std::vector<double>> columns;
  ZetaOptions zopts;
  zopts.grid_points = opts.grid_points;
  zopts.eig_tol = opts.eig_tol;
  zopts.seed = derive_seed(opts.seed, 0x2e7a);

  for (int p = 2; p <= k; ++p) {
    ClassDiagnostics diag;
    diag.p = p;
    try {
      CrossingResult crossing = estimate_zeta_method2(active.sub, p, opts.zeta_tol, zopts);
      diag.zeta = crossing.r_star;
      diag.nu_at_zeta = crossing.pair.value;
      diag.eig_residual = crossing.pair.residual;
      diag.degenerate = crossing.degenerate;
      result.zetas.push_back(crossing.r_star);
      columns.push_back(std::move(crossing.pair.vector));
    } catch (const NotDetectableError& error) {
      diag.dropped = true;
      diag.note = error.what();
    }
    result.diagnostics.push_back(std::move(diag));
  }

  const int cols = static_cast<int>(columns.size());
  result.embedding_columns = cols;
  if (cols > 0) {
    result.embedding.resize(static_cast<std::size_t>(n_active) * cols);
    for (int c = 0; c < cols; ++c)
      for (int i = 0; i < n_active; ++i)
        result.embedding[static_cast<std::size_t>(i) * cols + c] = columns[c][i];
    orient_columns(result.embedding, n_active, cols);
  }

  finish_with_kmeans(g, active, 1 + cols, opts.seed, opts.kmeans_restarts, result);
  return result;
}

BaselineMethod baseline_from_name(const std::string& name) {
  if (name == "bethe_fixed") return BaselineMethod::bethe_fixed_r;
  if (name == "adjacency") return BaselineMethod::adjacency;
  if (name == "rw_second") return BaselineMethod::rw_second;
  if (name == "rw_oracle_best") return BaselineMethod::rw_oracle_best;
  throw std::invalid_argument("unknown baseline method '" + name + "'");
}

std::string baseline_name(BaselineMethod method) {
  switch (method) {
    case BaselineMethod::bethe_fixed_r: return "bethe_fixed";
    case BaselineMethod::adjacency: return "adjacency";
    case BaselineMethod::rw_second: return "rw_second";
    case BaselineMethod::rw_oracle_best: return "rw_oracle_best";
  }
  throw std::logic_error("baseline_name: unreachable");
}

ClusteringResult baseline_cluster(const Graph& g, BaselineMethod method, int k,
                                  const BaselineOptions& opts) {
  if (k < 2) throw std::invalid_argument("baseline_cluster: k must be >= 2");

  ClusteringResult result;
  result.method = baseline_name(method);

  ActiveSet active = select_active(g, false);
  result.active_nodes = active.to_parent;
  result.rho_hat = estimate_rho_B(active.sub);
  const int n_active = active.sub.num_nodes();

  LanczosOptions lopts;
  lopts.tol = opts.eig_tol;
  lopts.seed = derive_seed(opts.seed, 0xba5e);

  std::vector<std::vector<double>> columns;

  switch (method) {
    case BaselineMethod::bethe_fixed_r: {
      const double r = opts.r.value_or(std::sqrt(result.rho_hat));
      const auto pairs = smallest_eigenpairs(build_bethe_hessian(active.sub, r), k, lopts);
      for (int p = 1; p < k; ++p) {
        columns.push_back(pairs[p].vector);
        result.zetas.push_back(r);
        ClassDiagnostics diag;
        diag.p = p + 1;
        diag.zeta = r;
        diag.nu_at_zeta = pairs[p].value;
        diag.eig_residual = pairs[p].residual;
        result.diagnostics.push_back(diag);
      }
      break;
    }
    case BaselineMethod::adjacency: {
      const auto pairs = largest_eigenpairs(build_adjacency(active.sub), k, lopts);
      for (int p = 1; p < k; ++p) {
        columns.push_back(pairs[p].vector);
        ClassDiagnostics diag;
        diag.p = p + 1;
        diag.nu_at_zeta = pairs[p].value;
        diag.eig_residual = pairs[p].residual;
        result.diagnostics.push_back(diag);
      }
      break;
    }
    case BaselineMethod::rw_second: {
      const auto pairs = rw_leading_eigenpairs(active.sub, k, lopts);
      for (int p = 1; p < k; ++p) {
        columns.push_back(pairs[p].vector);
        ClassDiagnostics diag;
        diag.p = p + 1;
        diag.nu_at_zeta = pairs[p].value;
        diag.eig_residual = pairs[p].residual;
        result.diagnostics.push_back(diag);
      }
      break;
    }
    case BaselineMethod::rw_oracle_best: {
      if (opts.truth == nullptr || static_cast<NodeId>(opts.truth->size()) != g.num_nodes())
        throw std::invalid_argument(
            "baseline_cluster: rw_oracle_best needs ground-truth labels over the input graph");
      const int count = std::min<int>(opts.oracle_candidates + 1, n_active);
      const auto pairs = rw_leading_eigenpairs(active.sub, count, lopts);

      double best_overlap = -std::numeric_limits<double>::infinity();
      for (int j = 1; j < count; ++j) {
        ClusteringResult candidate;
        candidate.method = result.method;
        candidate.embedding = pairs[j].vector;
        candidate.embedding_columns = 1;
        orient_columns(candidate.embedding, n_active, 1);
        finish_with_kmeans(g, active, k, derive_seed(opts.seed, 7000 + j),
                           opts.kmeans_restarts, candidate);
        const double score = overlap(candidate.labels, *opts.truth);
        if (score > best_overlap) {
          best_overlap = score;
          candidate.active_nodes = result.active_nodes;
          candidate.rho_hat = result.rho_hat;
          candidate.diagnostics.clear();
          ClassDiagnostics diag;
          diag.p = j + 1;
          diag.nu_at_zeta = pairs[j].value;
          diag.eig_residual = pairs[j].residual;
          diag.note = "selected by oracle overlap " + std::to_string(score);
          candidate.diagnostics.push_back(diag);
          result = std::move(candidate);
        }
      }
      return result;
    }
  }

  const int cols = static_cast<int>(columns.size());
  result.embedding_columns = cols;
  result.embedding.resize(static_cast<std::size_t>(n_active) * cols);
  for (int c = 0; c < cols; ++c)
    for (int i = 0; i < n_active; ++i)
      result.embedding[static_cast<std::size_t>(i) * cols + c] = columns[c][i];
  orient_columns(result.embedding, n_active, cols);

  finish_with_kmeans(g, active, k, opts.seed, opts.kmeans_restarts, result);
  return result;
}

}  // namespace bhc
