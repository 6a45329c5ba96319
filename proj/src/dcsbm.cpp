#include "bhc/dcsbm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bhc {

namespace {

void validate_pi(const std::vector<double>& pi, int k) {
  if (static_cast<int>(pi.size()) != k)
    throw std::invalid_argument("dcsbm: pi must have one entry per class");
  double sum = 0.0;
  for (double p : pi) {
    if (!(p > 0.0)) throw std::invalid_argument("dcsbm: class proportions must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("dcsbm: class proportions must sum to 1");
}

}  // namespace

void DcsbmParams::validate() const {
  if (n < 1) throw std::invalid_argument("dcsbm: n must be positive");
  if (k < 1) throw std::invalid_argument("dcsbm: k must be positive");
  validate_pi(pi, k);
  if (static_cast<int>(C.size()) != k * k)
    throw std::invalid_argument("dcsbm: affinity matrix must be k x k");
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const double cab = C[a * k + b];
      if (!(cab >= 0.0))
        throw std::invalid_argument("dcsbm: affinity entries must be non-negative");
      if (std::abs(cab - C[b * k + a]) > 1e-12 * std::max(1.0, std::abs(cab)))
        throw std::invalid_argument("dcsbm: affinity matrix must be symmetric");
    }
  }
  const double c0 = expected_degree();
  for (int a = 1; a < k; ++a) {
    double row = 0.0;
    for (int b = 0; b < k; ++b) row += C[a * k + b] * pi[b];
    if (std::abs(row - c0) > 1e-12 * std::max(1.0, c0))
      throw std::invalid_argument(
          "dcsbm: expected degree differs across classes (row " + std::to_string(a) +
          " of C*Pi sums to " + std::to_string(row) + ", row 0 to " + std::to_string(c0) + ")");
  }
}

double DcsbmParams::expected_degree() const {
  double c = 0.0;
  for (int b = 0; b < k; ++b) c += C[b] * pi[b];
  return c;
}

std::vector<double> build_affinity(int k, double c_in, double c_out, double f,
                                   const std::vector<double>& pi, Rng& rng) {
  if (k < 1) throw std::invalid_argument("build_affinity: k must be positive");
  validate_pi(pi, k);
  if (!(c_in >= 0.0) || !(c_out >= 0.0))
    throw std::invalid_argument("build_affinity: c_in and c_out must be non-negative");
  if (!(f >= 0.0) || c_out - f < -1e-12)
    throw std::invalid_argument("build_affinity: need 0 <= f <= c_out");

  std::vector<double> C(static_cast<std::size_t>(k) * k, 0.0);
  C[0] = c_in;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double value = f > 0.0 ? c_out + rng.uniform(-f, f) : c_out;
      C[a * k + b] = value;
      C[b * k + a] = value;
    }
  }
  double c = 0.0;
  for (int b = 0; b < k; ++b) c += C[b] * pi[b];
  for (int a = 1; a < k; ++a) {
    double off = 0.0;
    for (int b = 0; b < k; ++b)
      if (b != a) off += C[a * k + b] * pi[b];
    const double diag = (c - off) / pi[a];
    if (diag < 0.0)
      throw std::invalid_argument("build_affinity: class " + std::to_string(a) +
                                  " needs a negative diagonal to balance expected degree; "
                                  "reduce f or increase c_in");
    C[a * k + a] = diag;
  }
  return C;
}

SampleResult sample_dcsbm(const DcsbmParams& params, Rng& rng) {
  params.validate();
  const NodeId n = params.n;
  const int k = params.k;

  // Exact class sizes: round(n * pi_p), remainder absorbed by the largest class.
  std::vector<NodeId> sizes(k);
  std::int64_t total = 0;
  for (int p = 0; p < k; ++p) {
    sizes[p] = static_cast<NodeId>(std::llround(static_cast<double>(n) * params.pi[p]));
    total += sizes[p];
  }
  const int largest = static_cast<int>(
      std::max_element(params.pi.begin(), params.pi.end()) - params.pi.begin());
  sizes[largest] += static_cast<NodeId>(n - total);
  if (sizes[largest] < 0)
    throw std::invalid_argument("sample_dcsbm: class proportions incompatible with n");

  std::vector<NodeId> start(k + 1, 0);
  for (int p = 0; p < k; ++p) start[p + 1] = start[p] + sizes[p];

  SampleResult result;
  result.labels.num_classes = k;
  result.labels.labels.resize(n);
  for (int p = 0; p < k; ++p)
    std::fill(result.labels.labels.begin() + start[p],
              result.labels.labels.begin() + start[p + 1], p);

  result.theta = params.theta.sample(static_cast<std::size_t>(n), rng);
  std::vector<double> theta_max(k, 0.0);
  for (int p = 0; p < k; ++p)
    for (NodeId i = start[p]; i < start[p + 1]; ++i)
      theta_max[p] = std::max(theta_max[p], result.theta[i]);

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(params.expected_degree() * n / 2.0 * 1.1) + 16);

  // One geometric scan per (node, class) row under the bound
  // p_up = min(1, C_ab * theta_i * max_b theta / n), thinned by theta_j.
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      const double cab = params.C[a * k + b];
      if (cab <= 0.0) continue;
      for (NodeId i = start[a]; i < start[a + 1]; ++i) {
        const NodeId row_begin = (a == b) ? i + 1 : start[b];
        const std::int64_t row_len = start[b + 1] - row_begin;
        if (row_len <= 0) continue;
        const double p_up = std::min(1.0, cab * result.theta[i] * theta_max[b] / n);
        if (p_up <= 0.0) continue;
        for (std::int64_t t = rng.geometric_skip(p_up); t < row_len;
             t += 1 + rng.geometric_skip(p_up)) {
          const NodeId j = row_begin + static_cast<NodeId>(t);
          const double raw = cab * result.theta[i] * result.theta[j] / n;
          if (raw > 1.0) ++result.prob_clip_events;
          const double p_ij = std::min(1.0, raw);
          if (p_ij >= p_up || rng.uniform() * p_up < p_ij) edges.emplace_back(i, j);
        }
      }
    }
  }

  result.graph = Graph(n, std::move(edges));
  return result;
}

}  // namespace bhc
