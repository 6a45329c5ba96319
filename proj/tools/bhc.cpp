#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bhc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bethe-Hessian community detection toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0x5eed;
  int jobs = 1;
  double tol = -1.0;
  bool as_json = false;
  app.add_option("--seed", seed, "master random seed");
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "zeta bracket width (default 1e-3 * sqrt(rho))");
  app.add_flag("--json", as_json, "JSON output where CSV is the default");

  bhc::cli::GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand("generate", "sample a DC-SBM graph to files");
  generate->add_option("--config", generate_args.config_path, "model config (JSON)")->required();
  generate->add_option("--output", generate_args.output_dir, "output directory (default .)");

  bhc::cli::ClusterArgs cluster_args;
  CLI::App* cluster = app.add_subcommand("cluster", "cluster a graph, JSON result on stdout");
  cluster->add_option("graph", cluster_args.graph_path, "edge list file")->required();
  cluster->add_option("--k", cluster_args.k, "class count or 'auto' (default)");
  cluster->add_option("--method", cluster_args.method,
                      "algorithm1 | bethe_fixed | adjacency | rw_second | rw_oracle_best");
  cluster->add_option("--labels", cluster_args.labels_path,
                      "ground-truth labels; adds overlap and modularity");
  cluster->add_flag("--one-indexed", cluster_args.one_indexed, "node ids in the file start at 1");

  bhc::cli::SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "run an experiment grid to CSV");
  sweep->add_option("--spec", sweep_args.spec_path, "experiment spec (JSON)")->required();
  sweep->add_option("--output", sweep_args.output_override, "override the spec's output directory");

  bhc::cli::SpectrumArgs spectrum_args;
  CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate eigenvalues of H_r");
  spectrum->add_option("graph", spectrum_args.graph_path, "edge list file")->required();
  spectrum->add_option("--r", spectrum_args.r, "single evaluation point");
  spectrum->add_option("--scan", spectrum_args.scan, "lo:hi:steps; bounds may be sqrt(rho)");
  spectrum->add_option("--p", spectrum_args.p, "eigenvalues per point (default 2)");
  spectrum->add_option("--dump-matrix", spectrum_args.dump_matrix,
                       "write H_r in Matrix Market format (with --r)");
  spectrum->add_flag("--one-indexed", spectrum_args.one_indexed, "node ids in the file start at 1");

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) {
    if (app.count("--seed") > 0) generate_args.seed_override = seed;
    return bhc::cli::cmd_generate(generate_args, std::cout, std::cerr);
  }
  if (cluster->parsed()) {
    cluster_args.seed = seed;
    cluster_args.tol = tol;
    return bhc::cli::cmd_cluster(cluster_args, std::cout, std::cerr);
  }
  if (sweep->parsed()) {
    sweep_args.jobs = jobs;
    sweep_args.as_json = as_json;
    return bhc::cli::cmd_sweep(sweep_args, std::cout, std::cerr);
  }
  if (spectrum->parsed()) {
    spectrum_args.seed = seed;
    return bhc::cli::cmd_spectrum(spectrum_args, std::cout, std::cerr);
  }
  return 1;
}
