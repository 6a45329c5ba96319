#include "bhc/zeta.hpp"

#include "bhc/nonbacktracking.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bhc {

BetheCurve::BetheCurve(const Graph& g, double eig_tol, std::uint64_t seed)
    : g_(g), eig_tol_(eig_tol), seed_(seed), h_(build_bethe_hessian(g, 0.0)) {}

const std::vector<EigenPair>& BetheCurve::eval(double r, int p) {
  if (last_.size() >= static_cast<std::size_t>(p) && r == last_r_ && evaluations_ > 0)
    return last_;

  const double shift = r * r - 1.0;
  h_.set_values(
      g_, [&](NodeId u) { return shift + g_.degree(u); },
      [&](NodeId, NodeId) { return -r; });

  LanczosOptions opts;
  opts.tol = eig_tol_;
  opts.seed = seed_;
  if (last_.size() >= static_cast<std::size_t>(p))
    opts.warm_start = &last_[p - 1].vector;
  else if (!last_.empty())
    opts.warm_start = &last_.back().vector;

  last_ = smallest_eigenpairs(h_, p, opts);
  last_r_ = r;
  ++evaluations_;
  return last_;
}

double nu(const Graph& g, double r, int p, double eig_tol, std::uint64_t seed) {
  BetheCurve curve(g, eig_tol, seed);
  return curve.eval(r, p)[p - 1].value;
}

namespace {

std::vector<double> geometric_grid(double lo, double hi, int points) {
  std::vector<double> grid(points);
  const double ll = std::log(lo), lh = std::log(hi);
  for (int j = 0; j < points; ++j)
    grid[j] = std::exp(ll + (lh - ll) * j / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// Bisects nu_q inside (lo, hi) where the predicate "nu > 0" holds at lo and
// fails at hi (axis_sign mirrors the evaluation point for the disassortative
// axis; q is the eigenvalue index followed on that axis).  Returns the
// refined crossing; the caller stamps the class index.
CrossingResult bisect_downward(BetheCurve& curve, int q, double axis_sign, double lo, double hi,
                               double nu_lo, double nu_hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double value = curve.eval(axis_sign * mid, q)[q - 1].value;
    if (value > 0.0) {
      lo = mid;
      nu_lo = value;
    } else {
      hi = mid;
      nu_hi = value;
    }
  }
  CrossingResult out;
  out.p = q;
  out.bracket_lo = axis_sign * lo;
  out.bracket_hi = axis_sign * hi;
  out.nu_lo = nu_lo;
  out.nu_hi = nu_hi;
  out.achieved_width = hi - lo;
  out.r_star = axis_sign * 0.5 * (lo + hi);
  out.pair = curve.eval(out.r_star, q)[q - 1];
  out.evaluations = curve.evaluations();
  return out;
}

// Scans magnitudes ascending on one axis; returns the crossing if nu_q goes
// from positive to non-positive between consecutive grid points.
std::optional<CrossingResult> scan_axis(BetheCurve& curve, int q, double axis_sign,
                                        const std::vector<double>& grid, double tol,
                                        bool& starts_nonpositive) {
  double prev = curve.eval(axis_sign * grid.front(), q)[q - 1].value;
  starts_nonpositive = prev <= 0.0;
  if (starts_nonpositive) return std::nullopt;
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const double value = curve.eval(axis_sign * grid[j], q)[q - 1].value;
    if (prev > 0.0 && value <= 0.0)
      return bisect_downward(curve, q, axis_sign, grid[j - 1], grid[j], prev, value, tol);
    prev = value;
  }
  return std::nullopt;
}

}  // namespace

CrossingResult estimate_zeta_method2(const Graph& g, int p, double tol, const ZetaOptions& opts) {
  if (p < 1) throw std::invalid_argument("estimate_zeta_method2: p must be >= 1");
  const double rho_hat = estimate_rho_B(g);
  const double hi = std::sqrt(rho_hat);
  if (!(hi > 1.0))
    throw NotDetectableError("estimate_zeta_method2: sqrt(rho_hat) = " + std::to_string(hi) +
                             " <= 1, no search interval");
  if (tol <= 0.0) tol = 1e-3 * hi;
  const double lo = 1.0 + 1e-9;

  BetheCurve curve(g, opts.eig_tol, opts.seed);

  auto degenerate_result = [&](double axis_sign, int q) {
    CrossingResult out;
    out.p = p;
    out.degenerate = true;
    out.r_star = axis_sign * lo;
    out.bracket_lo = out.bracket_hi = out.r_star;
    out.pair = curve.eval(out.r_star, q)[q - 1];
    out.nu_lo = out.nu_hi = out.pair.value;
    out.evaluations = curve.evaluations();
    return out;
  };

  // Detectability gate per axis: the informative eigenvalue must still be
  // negative at the interval end.  Transient dips from real bulk eigenvalues
  // of B inside (1, sqrt(rho_hat)) close again before the end and must not
  // count as detection.
  //
  // Index convention.  On the positive axis nu_1 belongs to the leading
  // Perron-aligned direction, negative throughout the interval, so class p
  // lives in nu_p.  At -(1 + eps) the matrix is the signless Laplacian plus
  // a positive shift -- positive semidefinite, no direction pre-occupied --
  // so disassortative crossings start at nu_1 and class p lives in nu_{p-1}.
  auto scan_gated_axis = [&](double axis_sign, double end_r) -> std::optional<CrossingResult> {
    const int q = axis_sign > 0.0 ? p : p - 1;
    if (q < 1) return std::nullopt;
    if (curve.eval(axis_sign * end_r, q)[q - 1].value >= 0.0) return std::nullopt;
    for (int refinement = 0; refinement < 2; ++refinement) {
      const int points = opts.grid_points << (2 * refinement);
      bool starts_nonpositive = false;
      auto found = scan_axis(curve, q, axis_sign, geometric_grid(lo, end_r, points), tol,
                             starts_nonpositive);
      if (starts_nonpositive) return degenerate_result(axis_sign, q);
      if (found) {
        found->p = p;
        found->evaluations = curve.evaluations();
        return found;
      }
    }
    return std::nullopt;  // unreachable with a negative endpoint; defensive
  };

  // Check both axes before committing.  A finite-size real bulk eigenvalue
  // can cross nu_p downward just inside the interval end, where no endpoint
  // gate can tell it from genuine structure; when the disassortative axis is
  // open, the crossing closer to 1 carries the stronger structure and wins.
  auto best_of = [&](double end_r) -> std::optional<CrossingResult> {
    auto found = scan_gated_axis(+1.0, end_r);
    if (found && found->degenerate) return found;
    if (opts.allow_disassortative) {
      auto mirrored = scan_gated_axis(-1.0, end_r);
      if (mirrored && (!found || std::abs(mirrored->r_star) < std::abs(found->r_star)))
        found = mirrored;
    }
    return found;
  };

  if (auto found = best_of(hi)) return *found;

  // The degree-based radius overshoots rho(B) on hub-heavy graphs, and an
  // informative eigenvalue may recross upward between sqrt(rho) and
  // sqrt(rho_hat); re-gate at the measured radius before giving up.
  try {
    const double hi_true = std::min(std::sqrt(power_rho_B(g, 1e-8, 20000, opts.seed).rho), hi);
    if (hi_true > lo)
      if (auto found = best_of(hi_true)) return *found;
  } catch (const PowerIterationError&) {
    // no reliable radius measurement; report on the estimated interval
  }

  std::ostringstream msg;
  msg << "estimate_zeta_method2: class " << p << " not detectable: nu_" << p
      << " is non-negative at the ends of the search interval (1, " << hi << "]";
  throw NotDetectableError(msg.str());
}

double GammaResult::zeta() const {
  if (!gamma2)
    throw NotDetectableError(
        "GammaResult::zeta: gamma_2 was inside the bulk, no zeta estimate");
  return gamma1 / *gamma2;
}

GammaResult estimate_gamma_pair(const Graph& g, double tol, const ZetaOptions& opts) {
  GammaResult out;
  out.rho_hat = estimate_rho_B(g);
  const double lo = std::sqrt(out.rho_hat) * (1.0 + 1e-9);
  const double hi = g.max_degree() + 1.0;
  if (tol <= 0.0) tol = 1e-3 * std::sqrt(out.rho_hat);
  if (!(hi > lo))
    throw std::invalid_argument("estimate_gamma_pair: empty bracket (sqrt(rho_hat) >= d_max + 1)");

  BetheCurve curve(g, opts.eig_tol, opts.seed);
  const auto grid = geometric_grid(lo, hi, opts.grid_points);

  // Scan downward from d_max + 1, where H_r is diagonally dominant and all
  // nu are non-negative; the first sign change seen from above is the largest
  // zero crossing, i.e. the real eigenvalue of B outside the bulk.
  auto largest_crossing = [&](int p) -> std::optional<double> {
    double above = curve.eval(grid.back(), p)[p - 1].value;
    for (std::size_t j = grid.size() - 1; j-- > 0;) {
      const double below = curve.eval(grid[j], p)[p - 1].value;
      if (below < 0.0 && above >= 0.0) {
        double a = grid[j], b = grid[j + 1];
        while (b - a > tol) {
          const double mid = 0.5 * (a + b);
          if (curve.eval(mid, p)[p - 1].value < 0.0)
            a = mid;
          else
            b = mid;
        }
        return 0.5 * (a + b);
      }
      above = below;
    }
    return std::nullopt;
  };

  auto g1 = largest_crossing(1);
  if (!g1)
    throw std::runtime_error(
        "estimate_gamma_pair: nu_1 has no zero crossing above sqrt(rho_hat); "
        "the graph is too sparse for the degree-based bulk estimate");
  out.gamma1 = *g1;
  out.gamma2 = largest_crossing(2);
  out.evaluations = curve.evaluations();
  return out;
}

double zeta_from_params(double c_in, double c_out) {
  if (!(c_in >= 0.0) || !(c_out >= 0.0))
    throw std::invalid_argument("zeta_from_params: degrees must be non-negative");
  if (c_in == c_out)
    throw std::invalid_argument("zeta_from_params: c_in == c_out has no community structure");
  return (c_in + c_out) / (c_in - c_out);
}

}  // namespace bhc
