#pragma once

#include <stdexcept>

#include "json.hpp"

#include "bhc/theta.hpp"

// JSON helpers shared by the sweep parser and the CLI commands.  Internal:
// the public headers stay free of the JSON dependency.
namespace bhc::detail {

inline ThetaDistribution theta_from_json(const nlohmann::json& j) {
  if (j.is_null()) return ThetaDistribution::constant();
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") return ThetaDistribution::constant();
  if (type == "powerlaw")
    return ThetaDistribution::powerlaw(j.at("a").get<double>(), j.at("b").get<double>(),
                                       j.at("exponent").get<double>());
  throw std::invalid_argument("unknown theta type '" + type + "'");
}

inline nlohmann::json theta_to_json(const ThetaDistribution& t) {
  nlohmann::json j;
  if (t.is_constant()) {
    j["type"] = "constant";
  } else {
    j["type"] = "powerlaw";
    j["a"] = t.uniform_lo();
    j["b"] = t.uniform_hi();
    j["exponent"] = t.exponent();
  }
  j["phi"] = t.phi();
  return j;
}

}  // namespace bhc::detail
