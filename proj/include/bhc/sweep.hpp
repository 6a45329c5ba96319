#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bhc/dcsbm.hpp"
#include "bhc/pipeline.hpp"
#include "bhc/theta.hpp"

namespace bhc {

// Shortest decimal form with 17 significant digits; parses back to the same
// double bit pattern.
std::string format_g17(double x);

// What degree sequence feeds the closed-form overlap prediction:
//   realized        - the sampled graph's actual degrees (varies per seed)
//   expected_degree - c * theta with theta drawn from the grid point alone,
//                     so the column is constant across seeds
enum class PredictionPolicy { realized, expected_degree };

// One parameter sweep: a c_in axis against fixed c_out/n/k/theta, a seed
// list, and a set of clustering methods run on every sampled graph.
struct ExperimentSpec {
  std::string name = "sweep";
  std::vector<double> c_in_values;
  double c_out = 0.0;
  NodeId n = 0;
  int k = 2;
  double f = 0.0;
  std::vector<double> pi;  // empty means uniform
  ThetaDistribution theta = ThetaDistribution::constant();
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> methods;
  std::string output_dir;  // empty: caller decides where the CSV goes
  PredictionPolicy prediction = PredictionPolicy::realized;
  bool estimate_classes = false;  // default: methods run with the planted k
  double zeta_tol = -1.0;
  int grid_points = 32;

  // Throws std::invalid_argument on the first violated condition.
  void validate() const;
};

ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec(const std::string& path);

struct SweepRow {
  double c_in = 0.0;
  double c_out = 0.0;
  NodeId n = 0;
  double phi = 1.0;
  double alpha = 0.0;
  double alpha_c = 0.0;
  std::string method;
  std::uint64_t seed = 0;
  std::optional<double> overlap;
  std::optional<double> predicted_overlap;
  std::optional<double> zeta_hat;
  std::optional<double> zeta_true;
  std::optional<int> k_hat;
  std::optional<double> wall_ms;
  std::string error;  // empty on success; the cell's failure otherwise
};

// Runs the grid in deterministic (c_in, seed, method) order.  Cells are
// independent and distributed over `jobs` worker threads; the returned rows
// are always in grid order regardless of completion order.  Failures are
// captured per row in `error` and never abort the sweep.
std::vector<SweepRow> run_sweep(const ExperimentSpec& spec, int jobs = 1);

std::string sweep_csv_header();
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace bhc
