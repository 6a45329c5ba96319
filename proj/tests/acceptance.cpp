// Acceptance checks for the release gate.  Each criterion prints one
// [PASS]/[FAIL] line with the measured numbers; the exit code is the number
// of failed criteria.  Criteria 3 and 4 share one simulation sweep and are
// reported together by the id "34".
//
//   bhc_acceptance            runs everything
//   bhc_acceptance 1 5 10     runs a subset

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bhc/bethe.hpp"
#include "bhc/cli.hpp"
#include "bhc/dcsbm.hpp"
#include "bhc/dense_eig.hpp"
#include "bhc/graph.hpp"
#include "bhc/lanczos.hpp"
#include "bhc/metrics.hpp"
#include "bhc/nonbacktracking.hpp"
#include "bhc/pipeline.hpp"
#include "bhc/rng.hpp"
#include "bhc/sweep.hpp"
#include "bhc/theta.hpp"
#include "bhc/zeta.hpp"

namespace {

using namespace bhc;
using Clock = std::chrono::steady_clock;

const std::string kDataDir = BHC_DATA_DIR;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int id, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << detail << std::endl;
}

SampleResult sample_two_class(NodeId n, double c_in, double c_out, const ThetaDistribution& theta,
                              std::uint64_t seed) {
  DcsbmParams params;
  params.n = n;
  params.k = 2;
  params.pi = {0.5, 0.5};
  params.C = {c_in, c_out, c_out, c_in};
  params.theta = theta;
  Rng rng(seed);
  return sample_dcsbm(params, rng);
}

Graph random_er(NodeId n, double c, std::uint64_t seed) {
  DcsbmParams params;
  params.n = n;
  params.k = 1;
  params.pi = {1.0};
  params.C = {c};
  Rng rng(seed);
  return sample_dcsbm(params, rng).graph;
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream out;
  out << std::setprecision(precision) << x;
  return out.str();
}

// ---------------------------------------------------------------------------
// 1. closed-form identities of the detectability theory
// ---------------------------------------------------------------------------

int criterion1() {
  const auto start = Clock::now();
  Rng rng(0xACCE55);
  const double tol = 1e-12;
  double worst = 0.0;
  int bad = 0;

  const auto rel_err = [](double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
  };

  for (int trial = 0; trial < 1000; ++trial) {
    const double c_out = rng.uniform(0.5, 20.0);
    const double c_in = c_out + rng.uniform(0.1, 30.0);
    const double phi = rng.uniform(1.0, 4.0);
    const TheoryParams t{c_in, c_out, phi};

    // alpha_c = 2 / sqrt(phi)
    double err = rel_err(t.alpha_c(), 2.0 / std::sqrt(phi));
    // zeta = 2 sqrt(c) / alpha (two routes to the same ratio)
    err = std::max(err, rel_err(t.zeta(), 2.0 * std::sqrt(t.c()) / t.alpha()));
    // 4 f^2 = zeta^2 - 1
    err = std::max(err, rel_err(4.0 * t.f_alpha() * t.f_alpha(), t.zeta() * t.zeta() - 1.0));
    // lambda = -4 f^2
    err = std::max(err, rel_err(t.lambda_alpha(), -4.0 * t.f_alpha() * t.f_alpha()));

    // parameters placed exactly at the threshold: zeta must hit sqrt(c phi)
    const double c = t.c();
    const double x = std::sqrt(c / phi);
    const TheoryParams at{c + x, c - x, phi};
    err = std::max(err, rel_err(at.zeta(), std::sqrt(c * phi)));

    worst = std::max(worst, err);
    if (err > tol) ++bad;
  }

  const double elapsed = ms_since(start);
  const bool pass = bad == 0 && elapsed < 1000.0;
  report(1, pass,
         "threshold identities on 1000 random triples: " + std::to_string(bad) +
             " violations above 1e-12 (worst rel err " + fmt(worst, 3) + ", " +
             fmt(elapsed, 3) + " ms)");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 2. exactness of the indicator eigenvector on disconnected communities
// ---------------------------------------------------------------------------

int criterion2() {
  // two planted communities with c_out = 0 and heterogeneous weights; every
  // kernel vector of H at r = 1 is constant on each connected component, so
  // nu_2(1) vanishes and the second eigenvector cannot change sign inside one
  const auto sample =
      sample_two_class(1000, 16.0, 0.0, ThetaDistribution::powerlaw(3.0, 10.0, 1.0), 1);
  const Graph& g = sample.graph;
  const auto components = connected_components(g);

  LanczosOptions opts;
  opts.tol = 1e-10;
  const auto h = build_bethe_hessian(g, 1.0);
  const auto pairs = smallest_eigenpairs(h, 2, opts);
  const double nu2 = pairs[1].value;
  const auto& x = pairs[1].vector;

  double max_abs = 0.0;
  for (const double v : x) max_abs = std::max(max_abs, std::abs(v));
  const double negligible = 1e-6 * max_abs;

  int mixed = 0;
  for (const auto& component : components) {
    bool has_pos = false, has_neg = false;
    for (const NodeId u : component) {
      if (x[u] > negligible) has_pos = true;
      if (x[u] < -negligible) has_neg = true;
    }
    if (has_pos && has_neg) ++mixed;
  }

  const bool pass = components.size() >= 2 && std::abs(nu2) <= 1e-8 && mixed == 0;
  report(2, pass,
         "two-component model: nu_2(1) = " + fmt(nu2, 3) + ", " +
             std::to_string(components.size()) + " components, " + std::to_string(mixed) +
             " with mixed eigenvector sign");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 3 + 4. overlap prediction and eigenvector shape across the c_in sweep
// ---------------------------------------------------------------------------

struct GridPointResult {
  std::string model;
  double c_in = 0.0;
  TheoryParams params;
  bool above_threshold = false;
  double mean_overlap = 0.0;
  double mean_predicted = 0.0;
  double mean_class0 = 0.0;
  double mean_class1 = 0.0;
  double mean_residual_variance = 0.0;
  int stats_seeds = 0;
};

int criterion34() {
  const NodeId n = 5000;
  const double c_out = 6.0;
  const std::vector<double> c_in_values = {12, 16, 20, 24, 28, 32, 36};
  const int n_seeds = 10;
  const std::vector<std::pair<std::string, ThetaDistribution>> models = {
      {"constant", ThetaDistribution::constant()},
      {"powerlaw", ThetaDistribution::powerlaw(3.0, 10.0, 4.0)},
  };

  std::vector<GridPointResult> grid;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const auto& [model_name, theta] = models[mi];
    for (std::size_t gi = 0; gi < c_in_values.size(); ++gi) {
      GridPointResult point;
      point.model = model_name;
      point.c_in = c_in_values[gi];
      point.params = TheoryParams{point.c_in, c_out, theta.phi()};
      point.above_threshold = point.params.alpha() > point.params.alpha_c() * (1.0 + 1e-12);

      double ov_sum = 0.0, pred_sum = 0.0;
      double mean0_sum = 0.0, mean1_sum = 0.0, resvar_sum = 0.0;
      int stats_seeds = 0;
      for (int s = 1; s <= n_seeds; ++s) {
        const std::uint64_t graph_seed =
            derive_seed(derive_seed(0xACC0'0034 + mi, gi), static_cast<std::uint64_t>(s));
        const auto sample = sample_two_class(n, point.c_in, c_out, theta, graph_seed);

        std::vector<NodeId> degrees(static_cast<std::size_t>(n));
        for (NodeId u = 0; u < n; ++u) degrees[u] = sample.graph.degree(u);
        pred_sum += predicted_overlap(degrees, point.params);

        ClusterOptions opts;
        opts.forced_k = 2;
        opts.seed = derive_seed(graph_seed, 0xC1);
        const auto result = algorithm1(sample.graph, opts);
        ov_sum += overlap(result.labels, sample.labels.labels);

        if (result.embedding_columns == 1 && !result.active_nodes.empty()) {
          std::vector<int> truth_active;
          std::vector<NodeId> degrees_active;
          truth_active.reserve(result.active_nodes.size());
          for (const NodeId u : result.active_nodes) {
            truth_active.push_back(sample.labels.labels[u]);
            degrees_active.push_back(sample.graph.degree(u));
          }
          const auto stats =
              eigvec_stats(result.embedding, truth_active, degrees_active, point.params);
          mean0_sum += stats.class_mean[0];
          mean1_sum += stats.class_mean[1];
          resvar_sum += stats.residual_variance;
          ++stats_seeds;
        }
      }

      point.mean_overlap = ov_sum / n_seeds;
      point.mean_predicted = pred_sum / n_seeds;
      if (stats_seeds > 0) {
        point.mean_class0 = mean0_sum / stats_seeds;
        point.mean_class1 = mean1_sum / stats_seeds;
        point.mean_residual_variance = resvar_sum / stats_seeds;
      }
      point.stats_seeds = stats_seeds;
      grid.push_back(point);
    }
  }

  // criterion 3: simulated vs predicted overlap at each point above threshold
  int points_above = 0, points_bad = 0;
  double worst_gap = 0.0;
  std::string worst_at;
  for (const auto& point : grid) {
    if (!point.above_threshold) continue;
    ++points_above;
    const double gap = std::abs(point.mean_overlap - point.mean_predicted);
    if (gap > worst_gap) {
      worst_gap = gap;
      worst_at = point.model + " c_in=" + fmt(point.c_in, 3);
    }
    if (gap > 0.05) ++points_bad;
  }
  const bool pass3 = points_bad == 0 && points_above > 0;
  report(3, pass3,
         "predicted vs simulated overlap: " + std::to_string(points_bad) + "/" +
             std::to_string(points_above) + " points above threshold off by > 0.05 (worst " +
             fmt(worst_gap, 3) + " at " + worst_at + ")");

  // criterion 4: class-conditional means inside the 1-mu +- 2f/sqrt(c) band
  // for at least 80% of the points; residual variance near 1 in aggregate
  int in_band = 0;
  double resvar_total = 0.0;
  int resvar_points = 0;
  for (const auto& point : grid) {
    if (!point.above_threshold || point.stats_seeds == 0) continue;
    const double center = point.params.mu_complement();
    const double half_width = 2.0 * point.params.f_alpha() / std::sqrt(point.params.c());
    const bool band0 = std::abs(point.mean_class0 - center) <= half_width;
    const bool band1 = std::abs(point.mean_class1 + center) <= half_width;
    if (band0 && band1) ++in_band;
    resvar_total += point.mean_residual_variance;
    ++resvar_points;
  }
  const double band_fraction =
      points_above > 0 ? static_cast<double>(in_band) / points_above : 0.0;
  const double resvar = resvar_points > 0 ? resvar_total / resvar_points : 0.0;
  const bool pass4 = band_fraction >= 0.80 && resvar >= 0.7 && resvar <= 1.3;
  report(4, pass4,
         "eigenvector statistics: class means in band at " + std::to_string(in_band) + "/" +
             std::to_string(points_above) + " points (" + fmt(100.0 * band_fraction, 3) +
             "%), mean standardized residual variance " + fmt(resvar, 3));

  return (pass3 ? 0 : 1) + (pass4 ? 0 : 1);
}

// ---------------------------------------------------------------------------
// 5. agreement of the two zeta estimation routes with the model value
// ---------------------------------------------------------------------------

int criterion5() {
  const double zeta_model = zeta_from_params(13.0, 5.0);  // 2.25
  int bad = 0;
  double zeta_sum = 0.0;
  double worst_zeta = 0.0, worst_ratio = 0.0;
  for (int s = 1; s <= 10; ++s) {
    const std::uint64_t seed = derive_seed(0xACC5, static_cast<std::uint64_t>(s));
    const auto sample = sample_two_class(5000, 13.0, 5.0, ThetaDistribution::constant(), seed);

    bool seed_ok = true;
    try {
      const auto crossing = estimate_zeta_method2(sample.graph, 2);
      zeta_sum += crossing.r_star;
      const double zeta_err = std::abs(crossing.r_star - zeta_model) / zeta_model;
      worst_zeta = std::max(worst_zeta, zeta_err);
      // The isolated eigenvalue sits only ~0.9 above the bulk edge at these
      // parameters, so single-draw crossings wobble several percent around
      // 9/4 (both routes agree seed by seed, so this is the graph, not the
      // estimator).  The 5% band therefore applies to the seed mean, with a
      // loose per-seed rail against genuine failures.
      if (zeta_err > 0.15) seed_ok = false;

      const auto gamma = estimate_gamma_pair(sample.graph);
      if (!gamma.gamma2) {
        seed_ok = false;
      } else {
        const double ratio_err = std::abs(gamma.zeta() - crossing.r_star) / crossing.r_star;
        worst_ratio = std::max(worst_ratio, ratio_err);
        if (ratio_err > 0.05) seed_ok = false;
      }
    } catch (const std::exception&) {
      seed_ok = false;
    }
    if (!seed_ok) ++bad;
  }
  const double mean_err = std::abs(zeta_sum / 10.0 - zeta_model) / zeta_model;
  const bool pass = bad == 0 && mean_err <= 0.05;
  report(5, pass,
         "zeta estimation on 10 seeds: mean crossing err " + fmt(100.0 * mean_err, 3) +
             "% (bound 5%), worst seed " + fmt(100.0 * worst_zeta, 3) +
             "%, worst route disagreement " + fmt(100.0 * worst_ratio, 3) + "%, " +
             std::to_string(bad) + " seeds outside rails");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 6. iterative solver and factorization vs the dense reference
// ---------------------------------------------------------------------------

int criterion6() {
  Rng rng(0xACC6);
  int value_bad = 0, inertia_bad = 0, draws = 0;
  double worst_value_err = 0.0;

  for (int gi = 0; gi < 50; ++gi) {
    const auto n = static_cast<NodeId>(20 + rng.uniform_index(481));  // up to 500
    const double c = rng.uniform(2.0, 10.0);
    const Graph g = random_er(n, c, derive_seed(0xACC6'0001, static_cast<std::uint64_t>(gi)));
    const double r_cap = std::sqrt(estimate_rho_B(g)) + 1.5;

    for (int ri = 0; ri < 20; ++ri) {
      const double r = rng.uniform(-2.5, r_cap);
      const auto h = build_bethe_hessian(g, r);
      const auto dense = dense_spectrum(h);
      ++draws;

      LanczosOptions opts;
      opts.tol = 1e-12;
      opts.seed = derive_seed(0xACC6'0002, static_cast<std::uint64_t>(draws));
      const int p = std::min<NodeId>(4, n);
      const auto pairs = smallest_eigenpairs(h, p, opts);
      for (int j = 0; j < p; ++j) {
        const double err = std::abs(pairs[j].value - dense[j]);
        worst_value_err = std::max(worst_value_err, err);
        if (err > 1e-8) ++value_bad;
      }

      const auto factor = log_abs_det_H(g, r);
      if (factor.n_zero > 0) continue;  // numerically singular draw: no exact count to match
      NodeId negative = 0;
      for (const double v : dense)
        if (v < 0.0) ++negative;
      if (factor.n_negative != negative) ++inertia_bad;
    }
  }

  const bool pass = value_bad == 0 && inertia_bad == 0;
  report(6, pass,
         "dense-reference equivalence over " + std::to_string(draws) + " (graph, r) draws: " +
             std::to_string(value_bad) + " eigenvalue mismatches (worst " +
             fmt(worst_value_err, 3) + "), " + std::to_string(inertia_bad) +
             " inertia mismatches");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 7. determinant sign flips at the reported crossings; zero at r = 1 on cycles
// ---------------------------------------------------------------------------

int criterion7() {
  const double eps = 1e-4;
  int crossings = 0, flip_bad = 0, graphs_used = 0;

  const auto check_flip = [&](const Graph& g, double r_star) {
    ++crossings;
    const auto lo = log_abs_det_H(g, r_star - eps);
    const auto hi = log_abs_det_H(g, r_star + eps);
    if (lo.sign * hi.sign != -1) ++flip_bad;
  };

  for (std::uint64_t seed = 1; seed <= 20 && graphs_used < 5; ++seed) {
    const auto sample = sample_two_class(80, 8.0, 1.0, ThetaDistribution::constant(), seed);
    const Graph& g = sample.graph;
    if (2 * g.num_edges() > 400) continue;
    ++graphs_used;

    try {
      const auto crossing = estimate_zeta_method2(g, 2, 1e-6);
      if (!crossing.degenerate) check_flip(g, crossing.r_star);
    } catch (const NotDetectableError&) {
      // an undetectable draw reports no crossing; nothing to bridge
    }

    const auto gamma = estimate_gamma_pair(g, 1e-6);
    check_flip(g, gamma.gamma1);
    if (gamma.gamma2) check_flip(g, *gamma.gamma2);
  }

  int cycle_bad = 0;
  for (NodeId n = 3; n <= 40; ++n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    const Graph cycle(n, std::move(edges));
    if (log_abs_det_H(cycle, 1.0).sign != 0) ++cycle_bad;
  }

  const bool pass = crossings >= 5 && flip_bad == 0 && cycle_bad == 0;
  report(7, pass,
         "determinant bridge: " + std::to_string(flip_bad) + "/" + std::to_string(crossings) +
             " crossings without a sign flip, " + std::to_string(cycle_bad) +
             "/38 cycles with nonzero sign at r = 1");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 8. class-count recovery on the four-class heavy-tailed benchmark
// ---------------------------------------------------------------------------

int criterion8() {
  const auto theta = ThetaDistribution::powerlaw(3.0, 13.0, 4.0);
  const std::vector<double> pi(4, 0.25);
  int correct = 0, metric_bad = 0, detectable_bad = 0;

  for (int s = 1; s <= 10; ++s) {
    const std::uint64_t seed = derive_seed(0xACC8, static_cast<std::uint64_t>(s));
    Rng rng(seed);
    DcsbmParams params;
    params.n = 5000;
    params.k = 4;
    params.pi = pi;
    params.C = build_affinity(4, 20.0, 5.0, 1.5, pi, rng);
    params.theta = theta;
    const auto sample = sample_dcsbm(params, rng);

    const auto detectable = detectable_count(params.C, pi, theta.phi());
    if (detectable.count != 4) ++detectable_bad;

    const int k_hat = estimate_k(sample.graph);
    if (k_hat == 4) {
      ++correct;
      if (recovery_metric(k_hat, detectable.count) != 0.0) ++metric_bad;
    }
  }

  const bool pass = correct >= 9 && metric_bad == 0 && detectable_bad == 0;
  report(8, pass,
         "class-count recovery: k_hat = 4 in " + std::to_string(correct) +
             "/10 seeds, recovery metric nonzero in " + std::to_string(metric_bad) +
             ", detectable count != 4 in " + std::to_string(detectable_bad));
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 9. tuned radius vs the fixed sqrt(rho) radius on heavy-tailed graphs
// ---------------------------------------------------------------------------

int criterion9() {
  const auto theta = ThetaDistribution::powerlaw(3.0, 10.0, 4.0);
  const std::vector<double> c_in_values = {8.0, 12.0, 16.0};
  int points_bad = 0;
  std::string detail;

  for (std::size_t gi = 0; gi < c_in_values.size(); ++gi) {
    const double c_in = c_in_values[gi];
    double tuned_sum = 0.0, fixed_sum = 0.0;
    for (int s = 1; s <= 10; ++s) {
      const std::uint64_t graph_seed =
          derive_seed(derive_seed(0xACC9, gi), static_cast<std::uint64_t>(s));
      const auto sample = sample_two_class(5000, c_in, 1.0, theta, graph_seed);

      ClusterOptions tuned_opts;
      tuned_opts.forced_k = 2;
      tuned_opts.seed = derive_seed(graph_seed, 0xA1);
      const auto tuned = algorithm1(sample.graph, tuned_opts);
      tuned_sum += overlap(tuned.labels, sample.labels.labels);

      BaselineOptions fixed_opts;
      fixed_opts.seed = derive_seed(graph_seed, 0xB1);
      const auto fixed =
          baseline_cluster(sample.graph, BaselineMethod::bethe_fixed_r, 2, fixed_opts);
      fixed_sum += overlap(fixed.labels, sample.labels.labels);
    }
    const double gain = (tuned_sum - fixed_sum) / 10.0;
    if (gain < 0.05) ++points_bad;
    if (!detail.empty()) detail += ", ";
    detail += "c_in=" + fmt(c_in, 3) + ": +" + fmt(gain, 3);
  }

  const bool pass = points_bad == 0;
  report(9, pass, "tuned-radius gain over fixed sqrt(rho) (" + detail + ")");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 10. the bundled karate-club graph is recovered exactly through the CLI path
// ---------------------------------------------------------------------------

int criterion10() {
  const auto start = Clock::now();
  cli::ClusterArgs args;
  args.graph_path = kDataDir + "/karate.edges";
  args.k = "2";
  args.labels_path = kDataDir + "/karate.labels";
  std::ostringstream out, err;
  const int exit_code = cli::cmd_cluster(args, out, err);
  const double elapsed = ms_since(start);

  double measured = -1.0;
  if (exit_code == 0) {
    const auto doc = nlohmann::json::parse(out.str());
    measured = doc.at("overlap").get<double>();
  }
  const bool pass = exit_code == 0 && measured == 1.0 && elapsed < 1000.0;
  report(10, pass,
         "karate club via the cluster command: exit " + std::to_string(exit_code) +
             ", overlap " + fmt(measured, 4) + ", " + fmt(elapsed, 3) + " ms");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// 11. nothing is recovered below the detectability threshold
// ---------------------------------------------------------------------------

int criterion11() {
  // c = 9 with theta = 1: threshold separation c_in - c_out = 2 sqrt(c) = 6;
  // half of it gives alpha = 0.5 alpha_c
  const double c_in = 10.5, c_out = 7.5;
  const std::vector<std::string> methods = {"algorithm1", "bethe_fixed", "adjacency", "rw_second",
                                            "rw_oracle_best"};
  std::vector<double> sums(methods.size(), 0.0);

  for (int s = 1; s <= 10; ++s) {
    const std::uint64_t graph_seed = derive_seed(0xACCB, static_cast<std::uint64_t>(s));
    const auto sample = sample_two_class(5000, c_in, c_out, ThetaDistribution::constant(), graph_seed);

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      const std::uint64_t method_seed = derive_seed(graph_seed, 0xD0 + mi);
      std::vector<int> labels;
      if (methods[mi] == "algorithm1") {
        ClusterOptions opts;
        opts.forced_k = 2;
        opts.seed = method_seed;
        labels = algorithm1(sample.graph, opts).labels;
      } else {
        BaselineOptions opts;
        opts.seed = method_seed;
        opts.truth = &sample.labels.labels;
        labels =
            baseline_cluster(sample.graph, baseline_from_name(methods[mi]), 2, opts).labels;
      }
      sums[mi] += overlap(labels, sample.labels.labels);
    }
  }

  int bad = 0;
  std::string detail;
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    const double mean = sums[mi] / 10.0;
    if (std::abs(mean) >= 0.05) ++bad;
    if (!detail.empty()) detail += ", ";
    detail += methods[mi] + " " + fmt(mean, 2);
  }
  const bool pass = bad == 0;
  report(11, pass, "below-threshold null model, mean overlap by method: " + detail);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<int()>>> registry = {
      {"1", criterion1}, {"2", criterion2},  {"34", criterion34}, {"5", criterion5},
      {"6", criterion6}, {"7", criterion7},  {"8", criterion8},   {"9", criterion9},
      {"10", criterion10}, {"11", criterion11},
  };

  std::vector<std::string> selected;
  for (int i = 1; i < argc; ++i) selected.emplace_back(argv[i]);

  int failures = 0, executed = 0;
  for (const auto& [id, run] : registry) {
    const bool wanted =
        selected.empty() ||
        std::find(selected.begin(), selected.end(), id) != selected.end() ||
        (id == "34" && (std::find(selected.begin(), selected.end(), "3") != selected.end() ||
                        std::find(selected.begin(), selected.end(), "4") != selected.end()));
    if (!wanted) continue;
    ++executed;
    failures += run();
  }

  if (executed == 0) {
    std::cerr << "unknown criterion id; valid: 1 2 34 5 6 7 8 9 10 11\n";
    return 2;
  }
  return failures > 125 ? 125 : failures;
}
