#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace bhc::cli {

// Shared exit codes: 0 success, 1 internal failure, 2 unreadable input,
// 3 infeasible class count.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnreadable = 2;
inline constexpr int kExitInfeasibleK = 3;

struct GenerateArgs {
  std::string config_path;
  std::string output_dir = ".";
  std::optional<std::uint64_t> seed_override;
};

// Samples a graph from the JSON config and writes edges.txt, labels.txt,
// theta.txt, and meta.json into the output directory.  Byte-identical
// outputs for identical configs.
int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

struct ClusterArgs {
  std::string graph_path;
  std::string k = "auto";  // "auto" or a positive integer
  std::string method = "algorithm1";
  std::string labels_path;  // optional ground truth: adds overlap and modularity
  std::uint64_t seed = 0x5eed;
  double tol = -1.0;
  bool one_indexed = false;
};

// Runs one clustering method and prints the result as JSON on stdout.
int cmd_cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err);

struct SweepArgs {
  std::string spec_path;
  std::string output_override;  // overrides the spec's output directory
  int jobs = 1;
  bool as_json = false;  // rows as a JSON array instead of CSV
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

struct SpectrumArgs {
  std::string graph_path;
  std::optional<double> r;
  std::string scan;  // "lo:hi:steps"; lo/hi may be the token sqrt(rho)
  int p = 2;
  std::string dump_matrix;  // with --r: write H_r in Matrix Market form
  double eig_tol = 1e-8;
  std::uint64_t seed = 0x5eed;
  bool one_indexed = false;
};

// Tabulates the p smallest eigenvalues of H_r together with the determinant
// sign and the negative-eigenvalue count, as CSV on stdout.
int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err);

}  // namespace bhc::cli
