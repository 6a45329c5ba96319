#include "bhc/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bhc/rng.hpp"

namespace bhc {

namespace {

double sq_dist(const double* a, const double* b, int dim) {
  double acc = 0.0;
  for (int t = 0; t < dim; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

// k-means++: first centroid uniform, the rest proportional to the squared
// distance to the nearest centroid chosen so far.
std::vector<double> seed_centroids(const std::vector<double>& points, int n, int dim, int k,
                                   Rng& rng) {
  std::vector<double> centroids(static_cast<std::size_t>(k) * dim);
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());

  const int first = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
  std::copy_n(points.data() + static_cast<std::size_t>(first) * dim, dim, centroids.data());

  for (int c = 1; c < k; ++c) {
    const double* latest = centroids.data() + static_cast<std::size_t>(c - 1) * dim;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], sq_dist(points.data() + static_cast<std::size_t>(i) * dim, latest, dim));
      total += d2[i];
    }
    if (!(total > 0.0))
      throw std::invalid_argument("kmeans: fewer distinct points than clusters");
    double target = rng.uniform() * total;
    int chosen = n - 1;
    for (int i = 0; i < n; ++i) {
      target -= d2[i];
      if (target <= 0.0) {
        chosen = i;
        break;
      }
    }
    std::copy_n(points.data() + static_cast<std::size_t>(chosen) * dim, dim,
                centroids.data() + static_cast<std::size_t>(c) * dim);
  }
  return centroids;
}

// Nearest-centroid assignment; rows are independent so the parallel and
// serial versions agree bit for bit (ties to the lowest index).
void assign_points(const std::vector<double>& points, int n, int dim,
                   const std::vector<double>& centroids, int k, std::vector<int>& labels) {
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (int i = 0; i < n; ++i) {
    const double* point = points.data() + static_cast<std::size_t>(i) * dim;
    int best = 0;
    double best_d = sq_dist(point, centroids.data(), dim);
    for (int c = 1; c < k; ++c) {
      const double d = sq_dist(point, centroids.data() + static_cast<std::size_t>(c) * dim, dim);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    labels[i] = best;
  }
}

double run_lloyd(const std::vector<double>& points, int n, int dim, int k, Rng& rng,
                 const KMeansOptions& opts, std::vector<int>& labels,
                 std::vector<double>& centroids, int& iterations_out) {
  centroids = seed_centroids(points, n, dim, k, rng);
  labels.assign(n, 0);
  std::vector<std::int64_t> counts(k);
  double inertia = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    iterations_out = iter;
    assign_points(points, n, dim, centroids, k, labels);

    // Empty-cluster repair: hand each empty cluster the farthest point of the
    // (current) largest cluster.
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < n; ++i) ++counts[labels[i]];
    for (int c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      const int donor = static_cast<int>(
          std::max_element(counts.begin(), counts.end()) - counts.begin());
      int moved = -1;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        if (labels[i] != donor) continue;
        const double d = sq_dist(points.data() + static_cast<std::size_t>(i) * dim,
                                 centroids.data() + static_cast<std::size_t>(donor) * dim, dim);
        if (d > far_d) {
          far_d = d;
          moved = i;
        }
      }
      labels[moved] = c;
      --counts[donor];
      ++counts[c];
    }

    // Centroid update (serial accumulation, fixed order).
    std::fill(centroids.begin(), centroids.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double* point = points.data() + static_cast<std::size_t>(i) * dim;
      double* centroid = centroids.data() + static_cast<std::size_t>(labels[i]) * dim;
      for (int t = 0; t < dim; ++t) centroid[t] += point[t];
    }
    for (int c = 0; c < k; ++c)
      for (int t = 0; t < dim; ++t) centroids[static_cast<std::size_t>(c) * dim + t] /= counts[c];

    double new_inertia = 0.0;
    for (int i = 0; i < n; ++i)
      new_inertia += sq_dist(points.data() + static_cast<std::size_t>(i) * dim,
                             centroids.data() + static_cast<std::size_t>(labels[i]) * dim, dim);

    if (inertia - new_inertia <= opts.rel_tol * std::max(inertia, 1e-300) &&
        std::isfinite(inertia)) {
      inertia = new_inertia;
      break;
    }
    inertia = new_inertia;
  }
  return inertia;
}

}  // namespace

KMeansResult kmeans(const std::vector<double>& points, int n, int dim, int k,
                    const KMeansOptions& opts) {
  if (n < 1 || dim < 1) throw std::invalid_argument("kmeans: need n >= 1 and dim >= 1");
  if (points.size() != static_cast<std::size_t>(n) * dim)
    throw std::invalid_argument("kmeans: points size does not match n x dim");
  if (k < 1) throw std::invalid_argument("kmeans: k must be positive");
  if (k > n)
    throw std::invalid_argument("kmeans: k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(n));

  Rng rng(opts.seed);
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::vector<int> labels;
    std::vector<double> centroids;
    int iterations = 0;
    const double inertia = run_lloyd(points, n, dim, k, rng, opts, labels, centroids, iterations);
    if (inertia < best.inertia) {
      best.labels = std::move(labels);
      best.centroids = std::move(centroids);
      best.inertia = inertia;
      best.iterations = iterations;
    }
  }
  return best;
}

}  // namespace bhc
