#include "bhc/theta.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bhc {

namespace {

// E[U^p] for U ~ Uniform(a, b), 0 < a < b, p >= 0.
double uniform_power_moment(double a, double b, double p) {
  return (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / ((b - a) * (p + 1.0));
}

}  // namespace

ThetaDistribution ThetaDistribution::constant() { return ThetaDistribution(); }

ThetaDistribution ThetaDistribution::powerlaw(double a, double b, double exponent) {
  if (!(a > 0.0) || !(b > a))
    throw std::invalid_argument("ThetaDistribution::powerlaw: need 0 < a < b");
  if (!(exponent >= 0.0))
    throw std::invalid_argument("ThetaDistribution::powerlaw: exponent must be >= 0");
  ThetaDistribution d;
  d.constant_ = false;
  d.a_ = a;
  d.b_ = b;
  d.exponent_ = exponent;
  return d;
}

double ThetaDistribution::phi() const {
  if (constant_) return 1.0;
  const double z = uniform_power_moment(a_, b_, exponent_);
  return uniform_power_moment(a_, b_, 2.0 * exponent_) / (z * z);
}

std::vector<double> ThetaDistribution::sample(std::size_t n, Rng& rng) const {
  std::vector<double> theta(n, 1.0);
  if (constant_) return theta;
  const double z = uniform_power_moment(a_, b_, exponent_);
  for (auto& t : theta) t = std::pow(rng.uniform(a_, b_), exponent_) / z;
  return theta;
}

std::string ThetaDistribution::describe() const {
  if (constant_) return "constant";
  std::ostringstream out;
  out << "powerlaw(" << a_ << "," << b_ << "," << exponent_ << ")";
  return out.str();
}

}  // namespace bhc
