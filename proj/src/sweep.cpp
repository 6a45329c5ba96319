#include "bhc/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "bhc/metrics.hpp"
#include "bhc/rng.hpp"
#include "bhc/zeta.hpp"
#include "json_detail.hpp"

namespace bhc {

namespace {

using nlohmann::json;

constexpr std::uint64_t kGraphStream = 0x67726964;    // per-grid-point sampling stream
constexpr std::uint64_t kPredictStream = 0x70726564;  // expected-degree theta stream
constexpr std::uint64_t kMethodStream = 0x6d657468;   // per-method clustering stream

bool is_known_method(const std::string& name) {
  if (name == "algorithm1") return true;
  try {
    baseline_from_name(name);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<double> parse_axis(const json& j, const char* key) {
  const json& axis = j.at(key);
  std::vector<double> values;
  if (axis.is_array()) {
    for (const auto& v : axis) values.push_back(v.get<double>());
  } else if (axis.is_number()) {
    values.push_back(axis.get<double>());
  } else if (axis.is_object()) {
    const double from = axis.at("from").get<double>();
    const double to = axis.at("to").get<double>();
    const int steps = axis.at("steps").get<int>();
    if (steps < 1) throw std::invalid_argument("experiment spec: steps must be >= 1");
    if (steps == 1) {
      values.push_back(from);
    } else {
      for (int i = 0; i < steps; ++i)
        values.push_back(from + (to - from) * static_cast<double>(i) / (steps - 1));
    }
  } else {
    throw std::invalid_argument(std::string("experiment spec: ") + key +
                                " must be a number, list, or {from,to,steps}");
  }
  return values;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string opt_num(const std::optional<double>& v) { return v ? format_g17(*v) : std::string(); }

// Everything shared by the methods at one (grid point, seed) cell.
struct CellContext {
  double c_in = 0.0;
  TheoryParams params;
  std::optional<SampleResult> sample;
  std::optional<double> zeta_true;
  std::optional<double> predicted;  // under the spec's policy
  std::string error;                // sampling failure, inherited by every method row
};

CellContext prepare_cell(const ExperimentSpec& spec, std::size_t grid_index,
                         std::uint64_t seed_value) {
  CellContext cell;
  cell.c_in = spec.c_in_values[grid_index];
  cell.params = TheoryParams{cell.c_in, spec.c_out, spec.theta.phi()};

  std::vector<double> pi = spec.pi;
  if (pi.empty()) pi.assign(static_cast<std::size_t>(spec.k), 1.0 / spec.k);

  try {
    Rng rng(derive_seed(seed_value, kGraphStream + grid_index));
    DcsbmParams params;
    params.n = spec.n;
    params.k = spec.k;
    params.pi = pi;
    params.C = build_affinity(spec.k, cell.c_in, spec.c_out, spec.f, pi, rng);
    params.theta = spec.theta;

    // zeta per class from the affinity actually sampled: c / tau_2.  For a
    // balanced 2-class grid this is exactly (c_in + c_out)/(c_in - c_out).
    const DetectableResult det = detectable_count(params.C, pi, spec.theta.phi());
    if (det.tau.size() >= 2 && std::abs(det.tau[1]) > 1e-12 * std::max(1.0, det.c))
      cell.zeta_true = det.c / det.tau[1];

    cell.sample = sample_dcsbm(params, rng);

    if (spec.k == 2) {
      if (spec.prediction == PredictionPolicy::realized) {
        std::vector<NodeId> degrees(static_cast<std::size_t>(spec.n));
        for (NodeId u = 0; u < spec.n; ++u) degrees[u] = cell.sample->graph.degree(u);
        cell.predicted = predicted_overlap(degrees, cell.params);
      } else {
        // Seeded by the grid point alone so the column is seed-independent.
        Rng theta_rng(derive_seed(kPredictStream, grid_index));
        std::vector<double> expected = spec.theta.sample(static_cast<std::size_t>(spec.n), theta_rng);
        const double c = params.expected_degree();
        for (double& d : expected) d *= c;
        cell.predicted = predicted_overlap(expected, cell.params);
      }
    }
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

SweepRow run_method(const ExperimentSpec& spec, const CellContext& cell, std::uint64_t seed_value,
                    std::size_t grid_index, std::size_t method_index) {
  const std::string& method = spec.methods[method_index];
  SweepRow row;
  row.c_in = cell.c_in;
  row.c_out = spec.c_out;
  row.n = spec.n;
  row.phi = spec.theta.phi();
  row.alpha = cell.params.alpha();
  row.alpha_c = cell.params.alpha_c();
  row.method = method;
  row.seed = seed_value;
  row.zeta_true = cell.zeta_true;
  row.predicted_overlap = cell.predicted;

  if (!cell.error.empty()) {
    row.error = cell.error;
    return row;
  }

  const Graph& g = cell.sample->graph;
  const std::vector<int>& truth = cell.sample->labels.labels;
  const std::uint64_t method_seed =
      derive_seed(derive_seed(seed_value, kMethodStream + grid_index), method_index);

  const auto start = std::chrono::steady_clock::now();
  try {
    ClusteringResult result;
    if (method == "algorithm1") {
      ClusterOptions opts;
      if (!spec.estimate_classes) opts.forced_k = spec.k;
      opts.seed = method_seed;
      opts.zeta_tol = spec.zeta_tol;
      opts.grid_points = spec.grid_points;
      result = algorithm1(g, opts);
      if (!result.zetas.empty()) row.zeta_hat = result.zetas.front();
    } else {
      const BaselineMethod baseline = baseline_from_name(method);
      BaselineOptions opts;
      opts.seed = method_seed;
      if (baseline == BaselineMethod::rw_oracle_best) opts.truth = &truth;
      result = baseline_cluster(g, baseline, spec.k, opts);
      if (baseline == BaselineMethod::bethe_fixed_r) row.zeta_hat = std::sqrt(result.rho_hat);
    }
    row.k_hat = result.k_hat;
    row.overlap = overlap(result.labels, truth);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

}  // namespace

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ExperimentSpec::validate() const {
  if (c_in_values.empty()) throw std::invalid_argument("experiment spec: empty c_in grid");
  if (n < 2) throw std::invalid_argument("experiment spec: n must be at least 2");
  if (k < 1) throw std::invalid_argument("experiment spec: k must be at least 1");
  if (seeds.empty()) throw std::invalid_argument("experiment spec: empty seed list");
  if (methods.empty()) throw std::invalid_argument("experiment spec: empty method list");
  for (const std::string& m : methods)
    if (!is_known_method(m))
      throw std::invalid_argument("experiment spec: unknown method '" + m + "'");
  if (!pi.empty() && pi.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("experiment spec: pi length must equal k");
  if (c_out < 0.0) throw std::invalid_argument("experiment spec: c_out must be nonnegative");
  if (f < 0.0) throw std::invalid_argument("experiment spec: f must be nonnegative");
}

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("experiment spec: invalid JSON: ") + e.what());
  }

  ExperimentSpec spec;
  try {
    spec.name = j.value("name", std::string("sweep"));
    const json& sweep = j.at("sweep");
    spec.c_in_values = parse_axis(sweep, "c_in");
    spec.c_out = sweep.at("c_out").get<double>();
    spec.n = sweep.at("n").get<NodeId>();
    spec.k = sweep.value("k", 2);
    spec.f = sweep.value("f", 0.0);
    if (sweep.contains("pi")) spec.pi = sweep.at("pi").get<std::vector<double>>();
    spec.theta = detail::theta_from_json(sweep.contains("theta") ? sweep.at("theta") : json());
    spec.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    spec.methods = j.at("methods").get<std::vector<std::string>>();
    spec.output_dir = j.value("output", std::string());

    const std::string policy = j.value("prediction", std::string("realized"));
    if (policy == "realized") {
      spec.prediction = PredictionPolicy::realized;
    } else if (policy == "expected-degree") {
      spec.prediction = PredictionPolicy::expected_degree;
    } else {
      throw std::invalid_argument("experiment spec: prediction must be 'realized' or 'expected-degree'");
    }

    const std::string k_mode = j.value("k_mode", std::string("known"));
    if (k_mode == "known") {
      spec.estimate_classes = false;
    } else if (k_mode == "auto") {
      spec.estimate_classes = true;
    } else {
      throw std::invalid_argument("experiment spec: k_mode must be 'known' or 'auto'");
    }

    spec.zeta_tol = j.value("tol", -1.0);
    spec.grid_points = j.value("grid_points", 32);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("experiment spec: ") + e.what());
  }

  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open experiment spec: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_spec(buf.str());
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec, int jobs) {
  spec.validate();
  const std::size_t n_grid = spec.c_in_values.size();
  const std::size_t n_seeds = spec.seeds.size();
  const std::size_t n_methods = spec.methods.size();
  const std::size_t n_cells = n_grid * n_seeds;

  std::vector<SweepRow> rows(n_cells * n_methods);
  std::atomic<std::size_t> next_cell{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t cell_index = next_cell.fetch_add(1);
      if (cell_index >= n_cells) return;
      const std::size_t gi = cell_index / n_seeds;
      const std::size_t si = cell_index % n_seeds;
      const std::uint64_t seed_value = spec.seeds[si];
      const CellContext cell = prepare_cell(spec, gi, seed_value);
      for (std::size_t mi = 0; mi < n_methods; ++mi)
        rows[cell_index * n_methods + mi] = run_method(spec, cell, seed_value, gi, mi);
    }
  };

  const int n_workers = std::max(1, jobs);
  if (n_workers == 1 || n_cells <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

std::string sweep_csv_header() {
  return "c_in,c_out,n,phi,alpha,alpha_c,method,seed,overlap,predicted_overlap,"
         "zeta_hat,zeta_true,k_hat,wall_ms,error";
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << sweep_csv_header() << '\n';
  for (const SweepRow& row : rows) {
    out << format_g17(row.c_in) << ',' << format_g17(row.c_out) << ',' << row.n << ','
        << format_g17(row.phi) << ',' << format_g17(row.alpha) << ',' << format_g17(row.alpha_c)
        << ',' << row.method << ',' << row.seed << ',' << opt_num(row.overlap) << ','
        << opt_num(row.predicted_overlap) << ',' << opt_num(row.zeta_hat) << ','
        << opt_num(row.zeta_true) << ',' << (row.k_hat ? std::to_string(*row.k_hat) : std::string())
        << ',' << opt_num(row.wall_ms) << ',' << csv_escape(row.error) << '\n';
  }
}

}  // namespace bhc
