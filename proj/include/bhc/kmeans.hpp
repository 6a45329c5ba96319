#pragma once

#include <cstdint>
#include <vector>

namespace bhc {

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 300;
  double rel_tol = 1e-7;  // relative inertia decrease per iteration
  std::uint64_t seed = 0x5eed;
};

struct KMeansResult {
  std::vector<int> labels;
  std::vector<double> centroids;  // k x dim row-major
  double inertia = 0.0;
  int iterations = 0;  // of the winning restart
};

// Lloyd's algorithm with k-means++ seeding, best of `restarts` by final
// inertia.  Assignment ties go to the lowest cluster index and empty clusters
// are repaired by moving the farthest point out of the largest cluster, so
// results are deterministic for a fixed seed.  Throws when k exceeds the
// number of distinct points.
KMeansResult kmeans(const std::vector<double>& points, int n, int dim, int k,
                    const KMeansOptions& opts = {});

}  // namespace bhc
