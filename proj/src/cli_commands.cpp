#include "bhc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "bhc/bethe.hpp"
#include "bhc/dcsbm.hpp"
#include "bhc/factor.hpp"
#include "bhc/graph.hpp"
#include "bhc/metrics.hpp"
#include "bhc/nonbacktracking.hpp"
#include "bhc/pipeline.hpp"
#include "bhc/sweep.hpp"
#include "bhc/zeta.hpp"
#include "json_detail.hpp"

namespace bhc::cli {

namespace {

using nlohmann::json;

std::optional<Graph> load_graph_or_report(const std::string& path, bool one_indexed,
                                          std::ostream& err) {
  try {
    return load_edge_list(path, one_indexed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

json diagnostics_json(const ClusteringResult& result) {
  json arr = json::array();
  for (const ClassDiagnostics& d : result.diagnostics) {
    json item;
    item["p"] = d.p;
    item["zeta"] = d.zeta;
    item["nu_at_zeta"] = d.nu_at_zeta;
    item["eig_residual"] = d.eig_residual;
    item["degenerate"] = d.degenerate;
    item["dropped"] = d.dropped;
    item["note"] = d.note;
    arr.push_back(item);
  }
  return arr;
}

json result_json(const ClusteringResult& result, const Graph& g) {
  json out;
  out["method"] = result.method;
  out["k_hat"] = result.k_hat;
  out["labels"] = result.labels;
  json ids = json::array();
  for (NodeId u = 0; u < g.num_nodes(); ++u) ids.push_back(g.original_id(u));
  out["node_ids"] = std::move(ids);
  out["zetas"] = result.zetas;
  out["inertia"] = result.kmeans_inertia;
  out["rho_hat"] = result.rho_hat;
  out["diagnostics"] = diagnostics_json(result);
  out["n"] = g.num_nodes();
  out["m"] = g.num_edges();
  return out;
}

}  // namespace

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream config_in(args.config_path);
  if (!config_in) {
    err << "error: cannot open config: " << args.config_path << '\n';
    return kExitUnreadable;
  }

  try {
    json config = json::parse(config_in);

    DcsbmParams params;
    params.n = config.at("n").get<NodeId>();
    params.k = config.value("k", 2);
    if (config.contains("pi")) {
      params.pi = config.at("pi").get<std::vector<double>>();
    } else {
      params.pi.assign(static_cast<std::size_t>(params.k), 1.0 / params.k);
    }
    const double c_in = config.at("c_in").get<double>();
    const double c_out = config.at("c_out").get<double>();
    const double f = config.value("f", 0.0);
    params.theta = detail::theta_from_json(config.contains("theta") ? config.at("theta") : json());
    const std::uint64_t seed =
        args.seed_override ? *args.seed_override : config.value("seed", std::uint64_t{0x5eed});

    Rng rng(seed);
    params.C = build_affinity(params.k, c_in, c_out, f, params.pi, rng);
    params.validate();
    const SampleResult sample = sample_dcsbm(params, rng);

    const std::filesystem::path dir(args.output_dir);
    std::filesystem::create_directories(dir);
    save_edge_list(sample.graph, (dir / "edges.txt").string());
    save_labels(sample.labels, (dir / "labels.txt").string());
    {
      std::ofstream theta_out(dir / "theta.txt");
      if (!theta_out) throw std::runtime_error("cannot write theta.txt");
      for (double t : sample.theta) theta_out << format_g17(t) << '\n';
    }

    json meta;
    meta["n"] = params.n;
    meta["k"] = params.k;
    meta["m"] = sample.graph.num_edges();
    meta["pi"] = params.pi;
    meta["c_in"] = c_in;
    meta["c_out"] = c_out;
    meta["f"] = f;
    json affinity = json::array();
    for (int a = 0; a < params.k; ++a) {
      json row = json::array();
      for (int b = 0; b < params.k; ++b) row.push_back(params.C[static_cast<std::size_t>(a) * params.k + b]);
      affinity.push_back(std::move(row));
    }
    meta["affinity"] = std::move(affinity);
    meta["theta"] = detail::theta_to_json(params.theta);
    meta["expected_degree"] = params.expected_degree();
    meta["seed"] = seed;
    meta["prob_clip_events"] = sample.prob_clip_events;
    if (params.k == 2) {
      const TheoryParams theory{c_in, c_out, params.theta.phi()};
      meta["alpha"] = theory.alpha();
      meta["alpha_c"] = theory.alpha_c();
      try {
        meta["zeta_true"] = zeta_from_params(c_in, c_out);
      } catch (const std::exception&) {
        meta["zeta_true"] = nullptr;
      }
    } else {
      const DetectableResult det = detectable_count(params.C, params.pi, params.theta.phi());
      json zetas = json::array();
      for (std::size_t p = 1; p < det.tau.size(); ++p) {
        if (std::abs(det.tau[p]) > 1e-12 * std::max(1.0, det.c))
          zetas.push_back(det.c / det.tau[p]);
        else
          zetas.push_back(nullptr);
      }
      meta["zeta_true"] = std::move(zetas);
      meta["detectable_classes"] = det.count;
    }
    {
      std::ofstream meta_out(dir / "meta.json");
      if (!meta_out) throw std::runtime_error("cannot write meta.json");
      meta_out << meta.dump(2) << '\n';
    }

    out << "wrote " << (dir / "edges.txt").string() << " (" << sample.graph.num_nodes()
        << " nodes, " << sample.graph.num_edges() << " edges)\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err) {
  const std::optional<Graph> g = load_graph_or_report(args.graph_path, args.one_indexed, err);
  if (!g) return kExitUnreadable;

  std::optional<int> forced_k;
  if (args.k != "auto") {
    try {
      std::size_t consumed = 0;
      const int parsed = std::stoi(args.k, &consumed);
      if (consumed != args.k.size()) throw std::invalid_argument(args.k);
      forced_k = parsed;
    } catch (const std::exception&) {
      err << "error: --k expects 'auto' or an integer, got '" << args.k << "'\n";
      return kExitError;
    }
    if (*forced_k < 1 || *forced_k > g->num_nodes()) {
      err << "error: infeasible class count " << *forced_k << " for " << g->num_nodes()
          << " nodes\n";
      return kExitInfeasibleK;
    }
  }

  // The labels file is indexed by original node id; clustering results are
  // indexed by compact id, so remap before comparing.
  std::optional<std::vector<int>> truth;
  if (!args.labels_path.empty()) {
    LabelVector file_labels;
    try {
      file_labels = load_labels(args.labels_path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUnreadable;
    }
    truth.emplace(static_cast<std::size_t>(g->num_nodes()));
    for (NodeId u = 0; u < g->num_nodes(); ++u) {
      const std::int64_t original = g->original_id(u);
      if (original < 0 || original >= static_cast<std::int64_t>(file_labels.labels.size())) {
        err << "error: label file has " << file_labels.labels.size()
            << " lines; no label for node id " << original << '\n';
        return kExitError;
      }
      (*truth)[u] = file_labels.labels[static_cast<std::size_t>(original)];
    }
  }

  try {
    ClusteringResult result;
    if (args.method == "algorithm1") {
      ClusterOptions opts;
      opts.forced_k = forced_k;
      opts.seed = args.seed;
      opts.zeta_tol = args.tol;
      result = algorithm1(*g, opts);
    } else {
      const BaselineMethod method = baseline_from_name(args.method);
      int k = forced_k ? *forced_k : estimate_k(*g);
      if (k < 2) {
        err << "error: infeasible class count " << k << " for method " << args.method << '\n';
        return kExitInfeasibleK;
      }
      BaselineOptions opts;
      opts.seed = args.seed;
      if (method == BaselineMethod::rw_oracle_best) {
        if (!truth) {
          err << "error: method rw_oracle_best requires --labels\n";
          return kExitError;
        }
        opts.truth = &*truth;
      }
      result = baseline_cluster(*g, method, k, opts);
    }

    json doc = result_json(result, *g);
    doc["seed"] = args.seed;
    if (truth) {
      doc["overlap"] = overlap(result.labels, *truth);
      doc["modularity"] = modularity(*g, result.labels);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    // Invalid-argument failures from the pipeline are k-infeasibility
    // (k-means with more clusters than distinct rows and the like).
    err << "error: " << e.what() << '\n';
    return kExitInfeasibleK;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream spec_in(args.spec_path);
  if (!spec_in) {
    err << "error: cannot open experiment spec: " << args.spec_path << '\n';
    return kExitUnreadable;
  }
  std::ostringstream buf;
  buf << spec_in.rdbuf();

  try {
    ExperimentSpec spec = parse_experiment_spec(buf.str());
    if (!args.output_override.empty()) spec.output_dir = args.output_override;

    const std::vector<SweepRow> rows = run_sweep(spec, args.jobs);

    if (args.as_json) {
      json arr = json::array();
      for (const SweepRow& row : rows) {
        json item;
        item["c_in"] = row.c_in;
        item["c_out"] = row.c_out;
        item["n"] = row.n;
        item["phi"] = row.phi;
        item["alpha"] = row.alpha;
        item["alpha_c"] = row.alpha_c;
        item["method"] = row.method;
        item["seed"] = row.seed;
        item["overlap"] = row.overlap ? json(*row.overlap) : json();
        item["predicted_overlap"] = row.predicted_overlap ? json(*row.predicted_overlap) : json();
        item["zeta_hat"] = row.zeta_hat ? json(*row.zeta_hat) : json();
        item["zeta_true"] = row.zeta_true ? json(*row.zeta_true) : json();
        item["k_hat"] = row.k_hat ? json(*row.k_hat) : json();
        item["wall_ms"] = row.wall_ms ? json(*row.wall_ms) : json();
        item["error"] = row.error;
        arr.push_back(std::move(item));
      }
      out << arr.dump(2) << '\n';
      return kExitOk;
    }

    if (spec.output_dir.empty()) {
      write_sweep_csv(rows, out);
    } else {
      const std::filesystem::path dir(spec.output_dir);
      std::filesystem::create_directories(dir);
      const std::filesystem::path csv_path = dir / (spec.name + ".csv");
      std::ofstream csv_out(csv_path);
      if (!csv_out) throw std::runtime_error("cannot write " + csv_path.string());
      write_sweep_csv(rows, csv_out);
      err << "wrote " << csv_path.string() << " (" << rows.size() << " rows)\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

namespace {

// "lo:hi:steps" with either bound allowed to be the token sqrt(rho),
// resolved against the loaded graph.
std::vector<double> parse_scan(const std::string& scan, const Graph& g) {
  const auto first = scan.find(':');
  const auto second = scan.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("--scan expects lo:hi:steps, got '" + scan + "'");

  const auto resolve = [&](std::string text) {
    if (text == "sqrt(rho)") return std::sqrt(estimate_rho_B(g));
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size())
      throw std::invalid_argument("--scan: cannot parse bound '" + text + "'");
    return value;
  };

  const double lo = resolve(scan.substr(0, first));
  const double hi = resolve(scan.substr(first + 1, second - first - 1));
  const int steps = std::stoi(scan.substr(second + 1));
  if (steps < 1) throw std::invalid_argument("--scan: steps must be >= 1");

  std::vector<double> values;
  if (steps == 1) {
    values.push_back(lo);
  } else {
    for (int i = 0; i < steps; ++i)
      values.push_back(lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
  }
  return values;
}

}  // namespace

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err) {
  const std::optional<Graph> g = load_graph_or_report(args.graph_path, args.one_indexed, err);
  if (!g) return kExitUnreadable;

  try {
    if (args.r.has_value() == !args.scan.empty()) {
      err << "error: exactly one of --r and --scan is required\n";
      return kExitError;
    }
    if (args.p < 1 || args.p > g->num_nodes()) {
      err << "error: --p must be between 1 and the node count\n";
      return kExitError;
    }
    if (!args.dump_matrix.empty() && !args.r) {
      err << "error: --dump-matrix needs a single --r\n";
      return kExitError;
    }

    std::vector<double> r_values =
        args.r ? std::vector<double>{*args.r} : parse_scan(args.scan, *g);

    if (!args.dump_matrix.empty())
      build_bethe_hessian(*g, *args.r).save_matrix_market(args.dump_matrix);

    out << "r";
    for (int i = 1; i <= args.p; ++i) out << ",nu_" << i;
    out << ",det_sign,n_negative\n";

    BetheCurve curve(*g, args.eig_tol, args.seed);
    for (double r : r_values) {
      const std::vector<EigenPair>& pairs = curve.eval(r, args.p);
      const FactorizationResult factor = log_abs_det_H(*g, r);
      out << format_g17(r);
      for (int i = 0; i < args.p; ++i) out << ',' << format_g17(pairs[static_cast<std::size_t>(i)].value);
      out << ',' << factor.sign << ',' << factor.n_negative << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace bhc::cli
