#pragma once

#include <cstdint>
#include <vector>

#include "bhc/graph.hpp"
#include "bhc/rng.hpp"
#include "bhc/theta.hpp"

namespace bhc {

// Degree-corrected stochastic block model.  Edge {i, j} is present with
// probability min(1, theta_i * theta_j * C_{ab} / n) where a, b are the
// classes of i and j.  The affinity matrix must satisfy C * Pi * 1 = c * 1
// (constant expected degree c across classes).
struct DcsbmParams {
  NodeId n = 0;
  int k = 0;
  std::vector<double> pi;  // class proportions, length k, sums to 1
  std::vector<double> C;   // k x k row-major symmetric affinity
  ThetaDistribution theta = ThetaDistribution::constant();

  // Throws std::invalid_argument describing the first violated condition.
  void validate() const;

  // The constant expected degree c = (C Pi 1)_1.
  double expected_degree() const;
};

// Affinity matrix with off-diagonal entries c_out + Uniform(-f, f), C_{00}
// fixed to c_in, and the remaining diagonal chosen so every row of C*Pi sums
// to the same c.  Throws if that forces a negative diagonal entry.
std::vector<double> build_affinity(int k, double c_in, double c_out, double f,
                                   const std::vector<double>& pi, Rng& rng);

struct SampleResult {
  Graph graph;
  LabelVector labels;          // planted classes, aligned with compact node ids
  std::vector<double> theta;   // realized degree-correction weights
  std::int64_t prob_clip_events = 0;  // pairs where theta_i*theta_j*C/n exceeded 1
};

// Exact class sizes round(n * pi_p), remainder assigned to the largest class;
// nodes of a class are contiguous.  Edges are drawn per class-pair block with
// a geometric-skip scan under a row upper bound and thinned by theta_j.
SampleResult sample_dcsbm(const DcsbmParams& params, Rng& rng);

}  // namespace bhc
