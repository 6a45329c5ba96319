// Compares the OpenMP kernels against their serial reference on one
// synthetic workload: CSR matrix-vector products on a Bethe-Hessian, the
// eigensolves built on them, and the k-means inner loop.  The parallel and
// serial products must agree bitwise; the benchmark asserts that before
// printing timings.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "bhc/bethe.hpp"
#include "bhc/dcsbm.hpp"
#include "bhc/graph.hpp"
#include "bhc/kmeans.hpp"
#include "bhc/lanczos.hpp"
#include "bhc/rng.hpp"
#include "bhc/sparse.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    body();
    best = std::min(best, ms_since(start));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  bhc::NodeId n = 200000;
  double c = 10.0;
  int reps = 30;
  int k = 8;
  int dim = 7;
  std::uint64_t seed = 0x5eed;
  app.add_option("--n", n, "node count (default 200000)");
  app.add_option("--c", c, "mean degree (default 10)");
  app.add_option("--reps", reps, "repetitions per kernel, best-of (default 30)");
  app.add_option("--k", k, "k-means cluster count (default 8)");
  app.add_option("--dim", dim, "k-means embedding width (default 7)");
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP: compiled out (serial build)\n");
#endif

  bhc::Rng rng(seed);
  bhc::DcsbmParams params;
  params.n = n;
  params.k = 2;
  params.pi = {0.5, 0.5};
  params.C = bhc::build_affinity(2, 1.6 * c, 0.4 * c, 0.0, params.pi, rng);
  params.theta = bhc::ThetaDistribution::powerlaw(3.0, 10.0, 4.0);
  const bhc::SampleResult sample = bhc::sample_dcsbm(params, rng);
  const bhc::Graph& g = sample.graph;
  std::printf("graph: n=%d m=%lld mean degree %.2f\n", g.num_nodes(),
              static_cast<long long>(g.num_edges()),
              2.0 * static_cast<double>(g.num_edges()) / g.num_nodes());

  const bhc::SymmetricSparseMatrix h = bhc::build_bethe_hessian(g, std::sqrt(bhc::estimate_rho_B(g)));
  std::vector<double> x(static_cast<std::size_t>(n)), y_serial(x.size()), y_parallel(x.size());
  for (double& v : x) v = rng.uniform(-1.0, 1.0);

  h.multiply_serial(x.data(), y_serial.data());
  h.multiply_parallel(x.data(), y_parallel.data());
  bool bitwise_equal = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y_serial[i] != y_parallel[i]) bitwise_equal = false;
  std::printf("spmv serial/parallel bitwise equal: %s\n", bitwise_equal ? "yes" : "NO");
  if (!bitwise_equal) return 1;

  const double spmv_serial = time_best_of(reps, [&] { h.multiply_serial(x.data(), y_serial.data()); });
  const double spmv_parallel =
      time_best_of(reps, [&] { h.multiply_parallel(x.data(), y_parallel.data()); });

  bhc::LanczosOptions eig_opts;
  eig_opts.seed = seed;
  const double eig_ms = time_best_of(std::max(1, reps / 10),
                                     [&] { (void)bhc::smallest_eigenpairs(h, 2, eig_opts); });

  std::vector<double> points(static_cast<std::size_t>(n) * dim);
  for (double& v : points) v = rng.normal();
  bhc::KMeansOptions km_opts;
  km_opts.restarts = 1;
  km_opts.seed = seed;
  const double kmeans_ms = time_best_of(std::max(1, reps / 10),
                                        [&] { (void)bhc::kmeans(points, n, dim, k, km_opts); });

  std::printf("\n%-34s %12s\n", "kernel", "best ms");
  std::printf("%-34s %12.3f\n", "spmv (serial reference)", spmv_serial);
  std::printf("%-34s %12.3f  speedup %.2fx\n", "spmv (OpenMP)", spmv_parallel,
              spmv_serial / spmv_parallel);
  std::printf("%-34s %12.3f\n", "lanczos smallest-2 (uses spmv)", eig_ms);
  std::printf("%-34s %12.3f\n", "k-means single restart", kmeans_ms);
  return 0;
}
