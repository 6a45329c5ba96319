#pragma once

#include <string>
#include <vector>

#include "bhc/rng.hpp"

namespace bhc {

// Degree-correction weights.  Normalized so E[theta] = 1; the heterogeneity
// that matters downstream is the second moment Phi = E[theta^2].
//
//   constant:              theta_i = 1, Phi = 1
//   powerlaw(a, b, e):     theta_i = U^e / E[U^e],  U ~ Uniform(a, b)
class ThetaDistribution {
 public:
  static ThetaDistribution constant();
  static ThetaDistribution powerlaw(double a, double b, double exponent);

  bool is_constant() const { return constant_; }
  double uniform_lo() const { return a_; }
  double uniform_hi() const { return b_; }
  double exponent() const { return exponent_; }

  // E[theta] (exactly 1 by construction) and Phi = E[theta^2], in closed form.
  double mean() const { return 1.0; }
  double phi() const;

  std::vector<double> sample(std::size_t n, Rng& rng) const;

  std::string describe() const;

 private:
  ThetaDistribution() = default;

  bool constant_ = true;
  double a_ = 0.0, b_ = 0.0, exponent_ = 0.0;
};

}  // namespace bhc
