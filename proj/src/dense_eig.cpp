#include "bhc/dense_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bhc {

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form (EISPACK
// tred2 lineage).  On exit d holds the diagonal and e the subdiagonal in
// e[1..n-1].  With accumulate, z is overwritten by the orthogonal transform
// whose columns later become eigenvectors; otherwise z's strict upper part is
// left untouched and only the lower triangle is consumed.
void householder_tridiag(std::vector<double>& z, int n, std::vector<double>& d,
                         std::vector<double>& e, bool accumulate) {
  auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (accumulate) at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;

  if (accumulate) {
    for (int i = 0; i < n; ++i) {
      const int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
          for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
        }
      }
      d[i] = at(i, i);
      at(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) at(i, j) = at(j, i) = 0.0;
    }
  } else {
    for (int i = 0; i < n; ++i) d[i] = at(i, i);
  }
}

// Implicit-shift QL on a symmetric tridiagonal matrix, rotating the columns
// of z alongside when accumulate is set.  d is the diagonal, e the
// subdiagonal shifted down to e[0..n-2] on entry.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n,
                 bool accumulate) {
  auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iterations++ == 60)
          throw std::runtime_error("ql_implicit: no convergence in 60 iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (accumulate) {
            for (int k = 0; k < n; ++k) {
              f = at(k, i + 1);
              at(k, i + 1) = s * at(k, i) + c * f;
              at(k, i) = c * at(k, i) - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& d, std::vector<double>& z, int n, bool with_vectors) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  std::vector<double> d_sorted(n);
  for (int j = 0; j < n; ++j) d_sorted[j] = d[order[j]];
  d = std::move(d_sorted);

  if (with_vectors) {
    std::vector<double> z_sorted(z.size());
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        z_sorted[static_cast<std::size_t>(i) * n + j] = z[static_cast<std::size_t>(i) * n + order[j]];
    z = std::move(z_sorted);
  }
}

void check_symmetric(const std::vector<double>& a, int n) {
  if (a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("dense_eigh: matrix size does not match dimension");
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * std::max(1.0, scale);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a[static_cast<std::size_t>(i) * n + j] -
                   a[static_cast<std::size_t>(j) * n + i]) > tol)
        throw std::invalid_argument("dense_eigh: input matrix is not symmetric");
}

}  // namespace

DenseEigResult dense_eigh(std::vector<double> a, NodeId n) {
  check_symmetric(a, n);
  DenseEigResult result;
  if (n == 0) return result;
  std::vector<double> d(n, 0.0), e(n, 0.0);
  householder_tridiag(a, n, d, e, /*accumulate=*/true);
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  ql_implicit(d, e, a, n, /*accumulate=*/true);
  sort_ascending(d, a, n, true);
  result.values = std::move(d);
  result.vectors = std::move(a);
  return result;
}

std::vector<double> dense_eigenvalues(std::vector<double> a, NodeId n) {
  check_symmetric(a, n);
  if (n == 0) return {};
  std::vector<double> d(n, 0.0), e(n, 0.0);
  householder_tridiag(a, n, d, e, /*accumulate=*/false);
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  ql_implicit(d, e, a, n, /*accumulate=*/false);
  std::sort(d.begin(), d.end());
  return d;
}

DenseEigResult tridiag_eigh(std::vector<double> diag, std::vector<double> sub,
                            bool want_vectors) {
  const int n = static_cast<int>(diag.size());
  if (n > 0 && sub.size() != static_cast<std::size_t>(n) - 1)
    throw std::invalid_argument("tridiag_eigh: subdiagonal must have n-1 entries");
  DenseEigResult result;
  if (n == 0) return result;

  std::vector<double> e(n, 0.0);
  std::copy(sub.begin(), sub.end(), e.begin());
  std::vector<double> z;
  if (want_vectors) {
    z.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  ql_implicit(diag, e, z, n, want_vectors);
  sort_ascending(diag, z, n, want_vectors);
  result.values = std::move(diag);
  result.vectors = std::move(z);
  return result;
}

std::vector<double> dense_spectrum(const SymmetricSparseMatrix& m, NodeId cap) {
  return dense_eigenvalues(m.to_dense(cap), m.dim());
}

}  // namespace bhc
