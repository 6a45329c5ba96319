#include "bhc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bhc/dense_eig.hpp"
#include "bhc/zeta.hpp"

namespace bhc {

double TheoryParams::alpha() const { return (c_in - c_out) / std::sqrt(c()); }
double TheoryParams::alpha_c() const { return 2.0 / std::sqrt(phi); }
bool TheoryParams::detectable() const { return alpha() > alpha_c(); }
double TheoryParams::zeta() const { return zeta_from_params(c_in, c_out); }
double TheoryParams::f_alpha() const { return std::sqrt(c_in * c_out) / (c_in - c_out); }
double TheoryParams::lambda_alpha() const {
  const double f = f_alpha();
  return -4.0 * f * f;
}

double TheoryParams::mu_complement() const {
  const double z = zeta();
  const double num = c() * phi - z * z;
  const double den = c() * phi - 1.0;
  if (num <= 0.0 || den <= 0.0) return 0.0;
  return std::sqrt(num / den);
}

namespace {

int num_classes(const std::vector<int>& labels) {
  int k = 0;
  for (int l : labels) {
    if (l < 0) throw std::invalid_argument("labels must be non-negative");
    k = std::max(k, l + 1);
  }
  return k;
}

// Minimum-cost assignment on a square matrix (potentials method).  Returns
// row -> column.
std::vector<int> hungarian_min(const std::vector<double>& a, int n) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[static_cast<std::size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

double overlap(const std::vector<int>& estimated, const std::vector<int>& truth) {
  if (estimated.size() != truth.size())
    throw std::invalid_argument("overlap: label vectors differ in length (" +
                                std::to_string(estimated.size()) + " vs " +
                                std::to_string(truth.size()) + ")");
  if (estimated.empty()) throw std::invalid_argument("overlap: empty labelings");

  const int k = std::max(num_classes(estimated), num_classes(truth));
  if (k < 2) return 0.0;
  const auto n = static_cast<double>(truth.size());

  std::vector<double> confusion(static_cast<std::size_t>(k) * k, 0.0);
  for (std::size_t i = 0; i < truth.size(); ++i)
    confusion[static_cast<std::size_t>(estimated[i]) * k + truth[i]] += 1.0;

  double matched = 0.0;
  if (k <= 8) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double acc = 0.0;
      for (int c = 0; c < k; ++c) acc += confusion[static_cast<std::size_t>(c) * k + perm[c]];
      matched = std::max(matched, acc);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<double> cost(confusion.size());
    for (std::size_t i = 0; i < confusion.size(); ++i) cost[i] = -confusion[i];
    const auto assignment = hungarian_min(cost, k);
    for (int c = 0; c < k; ++c) matched += confusion[static_cast<std::size_t>(c) * k + assignment[c]];
  }

  const double accuracy = matched / n;
  return (accuracy - 1.0 / k) / (1.0 - 1.0 / k);
}

double modularity(const Graph& g, const std::vector<int>& labels) {
  if (static_cast<NodeId>(labels.size()) != g.num_nodes())
    throw std::invalid_argument("modularity: labels length must equal node count");
  const double m = static_cast<double>(g.num_edges());
  if (m == 0.0) throw std::invalid_argument("modularity: graph has no edges");
  const int k = num_classes(labels);

  std::vector<double> intra(k, 0.0), total_degree(k, 0.0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    total_degree[labels[u]] += g.degree(u);
    for (NodeId v : g.neighbors(u))
      if (u < v && labels[u] == labels[v]) intra[labels[u]] += 1.0;
  }
  double q = 0.0;
  for (int c = 0; c < k; ++c) {
    const double fraction = total_degree[c] / (2.0 * m);
    q += intra[c] / m - fraction * fraction;
  }
  return q;
}

double predicted_overlap(const std::vector<double>& degrees, const TheoryParams& params) {
  if (degrees.empty()) throw std::invalid_argument("predicted_overlap: empty degree sequence");
  if (!params.detectable()) return 0.0;

  const double a2 = params.alpha() * params.alpha();
  const double c = params.c();
  const double z = params.zeta();
  const double shape = (c * params.phi - z * z) / (c * params.phi - 1.0);
  const double denom = 8.0 * c - 2.0 * a2;

  double acc = 0.0;
  for (double d : degrees) acc += std::erf(std::sqrt(a2 * d / denom * shape));
  return acc / static_cast<double>(degrees.size());
}

double predicted_overlap(const std::vector<NodeId>& degrees, const TheoryParams& params) {
  return predicted_overlap(std::vector<double>(degrees.begin(), degrees.end()), params);
}

EigvecStats eigvec_stats(const std::vector<double>& x, const std::vector<int>& truth,
                         const std::vector<NodeId>& degrees, const TheoryParams& params) {
  const std::size_t n = x.size();
  if (truth.size() != n || degrees.size() != n)
    throw std::invalid_argument("eigvec_stats: size mismatch between x, truth, degrees");
  if (num_classes(truth) > 2)
    throw std::invalid_argument("eigvec_stats: expects a 2-class ground truth");

  double norm2 = 0.0;
  for (double e : x) norm2 += e * e;
  if (!(norm2 > 0.0)) throw std::invalid_argument("eigvec_stats: zero vector");
  const double scale = std::sqrt(static_cast<double>(n) / norm2);

  // sign convention: class 0 positive
  double aligned_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    aligned_sum += (truth[i] == 0 ? 1.0 : -1.0) * x[i];
  const double sign = aligned_sum >= 0.0 ? 1.0 : -1.0;

  EigvecStats out;
  double class_sum[2] = {0.0, 0.0};
  std::int64_t class_count[2] = {0, 0};
  const double mu1 = params.mu_complement();
  const double f = params.f_alpha();

  double res_sum = 0.0, res_sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] < 1) continue;
    const double value = sign * scale * x[i];
    class_sum[truth[i]] += value;
    ++class_count[truth[i]];
    const double sigma = truth[i] == 0 ? 1.0 : -1.0;
    const double standardized = (value - sigma * mu1) * std::sqrt(static_cast<double>(degrees[i])) /
                                (2.0 * f);
    res_sum += standardized;
    res_sum2 += standardized * standardized;
    ++out.informative_nodes;
  }
  for (int c = 0; c < 2; ++c)
    out.class_mean[c] = class_count[c] > 0 ? class_sum[c] / class_count[c] : 0.0;
  if (out.informative_nodes > 1) {
    const double mean = res_sum / out.informative_nodes;
    out.residual_variance = res_sum2 / out.informative_nodes - mean * mean;
  }
  return out;
}

DetectableResult detectable_count(const std::vector<double>& C, const std::vector<double>& pi,
                                  double phi) {
  const int k = static_cast<int>(pi.size());
  if (k < 1 || k > 64) throw std::invalid_argument("detectable_count: need 1 <= k <= 64");
  if (C.size() != static_cast<std::size_t>(k) * k)
    throw std::invalid_argument("detectable_count: affinity matrix must be k x k");
  if (!(phi >= 1.0)) throw std::invalid_argument("detectable_count: phi must be >= 1");
  for (double p : pi)
    if (!(p > 0.0)) throw std::invalid_argument("detectable_count: proportions must be positive");

  DetectableResult out;
  std::vector<double> row_sums(k, 0.0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) row_sums[a] += C[static_cast<std::size_t>(a) * k + b] * pi[b];
  out.c = row_sums[0];
  for (int a = 1; a < k; ++a)
    if (std::abs(row_sums[a] - out.c) > 1e-8 * std::max(1.0, out.c))
      throw std::invalid_argument(
          "detectable_count: C*Pi row sums are not constant (row " + std::to_string(a) + ")");

  // tau are the eigenvalues of C*Pi = Pi^{-1/2} (Pi^{1/2} C Pi^{1/2}) Pi^{1/2}.
  std::vector<double> sym(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      sym[static_cast<std::size_t>(a) * k + b] =
          std::sqrt(pi[a]) * C[static_cast<std::size_t>(a) * k + b] * std::sqrt(pi[b]);
  out.tau = dense_eigenvalues(std::move(sym), k);
  std::reverse(out.tau.begin(), out.tau.end());

  const double threshold = std::sqrt(out.c / phi);
  out.count = static_cast<int>(
      std::count_if(out.tau.begin(), out.tau.end(), [&](double t) { return t > threshold; }));
  return out;
}

double recovery_metric(int k_hat, int k_detectable) {
  if (k_hat + k_detectable == 0) return 0.0;
  return 2.0 * (k_hat - k_detectable) / static_cast<double>(k_hat + k_detectable);
}

}  // namespace bhc
