// Copyright 2026 The projevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// projevo: batch front end for the search and product-formula experiments.
//
//   projevo trajectory   --n 16 --samples 101
//   projevo equivalence  --n 4,16,64 --points 20
//   projevo trotter-scan --model ring --length 8 --dt 0.2,0.1,0.05,0.025
//   projevo decompose    --lattice honeycomb --lx 3 --ly 4 --periodic --out terms.json
//   projevo grover       --n 1024 --runs 5 --trials 1000000 --seed 7
//   projevo cost         --n 1024 --eps 1e-9
//
// Exit codes: 0 ok, 2 invalid input, 3 a checked identity or bound failed,
// 4 file I/O.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "projevo/projevo.hpp"

namespace {

using namespace projevo;

constexpr int kExitValidation = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitIo = 4;

class AssertionFailure : public Error {
public:
  using Error::Error;
};

struct Common {
  std::string out;
  std::string format = "csv";
  std::string config;
  std::uint64_t seed = 0;
  unsigned threads = default_thread_count();

  [[nodiscard]] bool json() const { return format == "json"; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output file (default: stdout)");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--threads", c.threads, "Worker threads (default: $PROJEVO_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--config", c.config, "Flat key = value file; command-line flags take precedence");
}

/// Fills options the command line left unset from a flat key = value file.
/// Keys are option names without the leading dashes.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open config file");
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    const std::string key = item.fullname();
    CLI::Option* opt = key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw ValidationError(path + ": unknown key '" + key + "' for " + sub->get_name());
    if (opt->count() > 0) continue;
    try {
      opt->add_result(item.inputs);
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw ValidationError(path + ": key '" + key + "': " + e.what());
    }
  }
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(c.out, text);
  }
}

Json vec_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

// ---------------------------------------------------------------- trajectory

struct TrajectoryArgs {
  std::uint64_t n = 16;
  std::uint64_t samples = 101;
};

int run_trajectory(const Common& c, const TrajectoryArgs& a) {
  require(a.n >= 2, "trajectory: N must be >= 2");
  require(a.samples >= 2, "trajectory: samples must be >= 2");
  const SearchInstance inst(a.n);
  const double big_t = inst.search_time();
  const double q_total = step_params(inst).q_total;
  struct Row {
    double t;
    Vec3 c, g;
  };
  std::vector<Row> rows(a.samples);
  parallel_for(a.samples, c.threads, [&](std::size_t i) {
    // Hit T exactly on the last sample.
    const double t = i + 1 == a.samples ? big_t : big_t * double(i) / double(a.samples - 1);
    const Vector2 psi_c = evolve_continuous(inst, t) * inst.source_state();
    const Vector2 psi_g = grover_power(inst, q_total * t / big_t) * inst.source_state();
    rows[i] = {t, bloch_point(psi_c), bloch_point(psi_g)};
  });

  const Vec3 start = bloch_point(inst.source_state());
  const Vec3 finish = bloch_point(inst.target_state());
  double sphere = 0.0;
  for (const auto& r : rows) sphere = std::max({sphere, std::abs(r.c.norm() - 1.0), std::abs(r.g.norm() - 1.0)});
  const double endpoint = std::max({(rows.front().c - start).norm(), (rows.front().g - start).norm(),
                                    (rows.back().c - finish).norm(), (rows.back().g - finish).norm()});

  if (c.json()) {
    Json doc{{"N", a.n}, {"T", big_t}, {"Q_T", q_total}, {"endpoint_error", endpoint}, {"sphere_error", sphere}};
    doc["rows"] = Json::array();
    for (const auto& r : rows) doc["rows"].push_back({{"t", r.t}, {"continuous", vec_json(r.c)}, {"grover", vec_json(r.g)}});
    emit(c, doc.dump(2) + "\n");
  } else {
    CsvWriter w({"t", "x_C", "y_C", "z_C", "x_G", "y_G", "z_G"});
    for (const auto& r : rows) {
      w.cell(r.t).cell(r.c.x()).cell(r.c.y()).cell(r.c.z()).cell(r.g.x()).cell(r.g.y()).cell(r.g.z());
      w.end_row();
    }
    emit(c, w.str());
  }
  if (endpoint > 1e-9 || sphere > 1e-9)
    throw AssertionFailure("trajectory: endpoint error " + format_double(endpoint) + ", sphere error " +
                           format_double(sphere));
  return 0;
}

// --------------------------------------------------------------- equivalence

struct EquivalenceArgs {
  std::vector<std::uint64_t> sizes{4, 16, 64, 256, 1024};
  std::uint64_t points = 20;
  std::vector<double> times;  // explicit t values; overrides points
  double tolerance = 1e-9;
};

int run_equivalence(const Common& c, const EquivalenceArgs& a) {
  require(!a.sizes.empty(), "equivalence: need at least one N");
  for (auto n : a.sizes) require(n >= 2, "equivalence: N must be >= 2");
  require(a.times.empty() ? a.points >= 1 : true, "equivalence: points must be >= 1");
  for (double t : a.times) require(t >= 0.0 && std::isfinite(t), "equivalence: t must be finite and >= 0");

  struct Row {
    std::uint64_t n;
    double t;
    std::optional<EquivalenceParams> params;
    double residual = 0.0;
  };
  std::vector<std::vector<Row>> blocks(a.sizes.size());
  parallel_for(a.sizes.size(), c.threads, [&](std::size_t k) {
    const SearchInstance inst(a.sizes[k]);
    std::vector<double> ts = a.times;
    if (ts.empty()) {
      for (std::uint64_t i = 0; i < a.points; ++i)
        ts.push_back(a.points == 1 ? inst.search_time()
                                   : inst.search_time() * double(i) / double(a.points - 1));
    }
    for (double t : ts) {
      Row r{a.sizes[k], t, std::nullopt};
      if (t <= inst.search_time() * (1.0 + kSearchTimeSlack)) {
        r.params = equivalence_params(inst, t);
        r.residual = equivalence_residual(inst, t);
      }
      blocks[k].push_back(r);
    }
  });

  std::size_t out_of_range = 0;
  double worst = 0.0;
  for (const auto& b : blocks)
    for (const auto& r : b) {
      if (!r.params) {
        ++out_of_range;
        std::cerr << "equivalence: N=" << r.n << " t=" << format_double(r.t) << " is beyond T, row not evaluated\n";
      } else {
        worst = std::max(worst, r.residual);
      }
    }

  if (c.json()) {
    Json rows = Json::array();
    for (const auto& b : blocks)
      for (const auto& r : b) {
        if (r.params)
          rows.push_back({{"N", r.n}, {"t", r.t}, {"Q_t", r.params->qt}, {"beta", r.params->beta}, {"residual", r.residual}});
        else
          rows.push_back({{"N", r.n}, {"t", r.t}, {"error", "t beyond T"}});
      }
    emit(c, Json{{"rows", rows}, {"max_residual", worst}, {"tolerance", a.tolerance}}.dump(2) + "\n");
  } else {
    CsvWriter w({"N", "t", "Q_t", "beta", "residual"});
    for (const auto& b : blocks)
      for (const auto& r : b) {
        w.cell(r.n).cell(r.t);
        if (r.params)
          w.cell(r.params->qt).cell(r.params->beta).cell(r.residual);
        else
          w.cell("").cell("").cell("t>T");
        w.end_row();
      }
    emit(c, w.str());
  }
  if (out_of_range > 0) throw ValidationError("equivalence: " + std::to_string(out_of_range) + " row(s) with t > T");
  if (worst > a.tolerance)
    throw AssertionFailure("equivalence: max residual " + format_double(worst) + " exceeds " + format_double(a.tolerance));
  return 0;
}

// -------------------------------------------------------------- trotter-scan

struct ScanArgs {
  std::string model = "hc";
  std::uint64_t n = 16;
  std::int64_t length = 8;
  std::string terms_file;
  double t = 2.0;
  std::vector<double> grid{0.2, 0.1, 0.05, 0.025};
  std::uint64_t max_steps = 10'000'000;
};

int run_trotter_scan(const Common& c, const ScanArgs& a) {
  require(a.grid.size() >= 4, "trotter-scan: need at least 4 step sizes");
  for (double dt : a.grid) require(dt > 0.0 && std::isfinite(dt), "trotter-scan: step sizes must be > 0");
  require(a.t > 0.0 && std::isfinite(a.t), "trotter-scan: t must be > 0");
  std::optional<HermitianTermSet> terms;
  if (a.model == "hc") {
    require(a.n >= 2, "trotter-scan: N must be >= 2");
    terms = search_projector_terms(SearchInstance(a.n));
  } else if (a.model == "ring") {
    terms = ring_even_odd_terms(a.length);
  } else {
    require(!a.terms_file.empty(), "trotter-scan: --model file needs --terms");
    terms = term_set_from_json(parse_json(read_text_file(a.terms_file), a.terms_file));
  }
  PlannerOptions opts;
  opts.max_steps = a.max_steps;
  const ScanResult scan = trotter_scan(*terms, a.t, a.grid, opts, c.threads);
  const bool commuting = scan.estimate.norm_e2 <= opts.commuting_tolerance;

  Json footer{{"slope", scan.slope},
              {"norm_e2", scan.estimate.norm_e2},
              {"t", a.t},
              {"model", a.model},
              {"slack", opts.slack},
              {"terms", terms->labels()}};
  if (c.json()) {
    Json pts = Json::array();
    for (const auto& p : scan.points)
      pts.push_back({{"dt", p.dt}, {"requested_dt", p.requested_dt}, {"n", p.steps}, {"error", p.error}, {"bound", p.bound}});
    footer["points"] = pts;
    emit(c, footer.dump(2) + "\n");
  } else {
    CsvWriter w({"dt", "n", "error", "bound"});
    for (const auto& p : scan.points) {
      w.cell(p.dt).cell(p.steps).cell(p.error).cell(p.bound);
      w.end_row();
    }
    w.comment(footer.dump());
    emit(c, w.str());
  }

  if (commuting) {
    for (const auto& p : scan.points)
      if (p.error > 1e-10) throw AssertionFailure("trotter-scan: commuting terms but error " + format_double(p.error));
    return 0;
  }
  for (const auto& p : scan.points)
    if (p.error > p.bound)
      throw AssertionFailure("trotter-scan: error " + format_double(p.error) + " exceeds bound " +
                             format_double(p.bound) + " at dt=" + format_double(p.dt));
  if (a.model != "file" && !(scan.slope >= 0.9 && scan.slope <= 1.1))
    throw AssertionFailure("trotter-scan: fitted slope " + format_double(scan.slope) + " outside [0.9, 1.1]");
  return 0;
}

// ----------------------------------------------------------------- decompose

struct DecomposeArgs {
  std::string lattice = "ring";
  std::int64_t length = 8;
  std::int64_t lx = 3;
  std::int64_t ly = 4;
  bool periodic = false;
  std::string graph_file;
  std::string coloring = "auto";
  std::string report;
};

constexpr Vertex kMaxDenseVertices = 4096;

int run_decompose(const Common& c, const DecomposeArgs& a) {
  std::optional<LatticeHamiltonian> lat;
  bool chain_like = false;
  bool periodic = a.periodic;
  if (!a.graph_file.empty()) {
    const InteractionGraph g = graph_from_json(parse_json(read_text_file(a.graph_file), a.graph_file));
    require(g.vertex_count() <= kMaxDenseVertices, "decompose: graph too large for the dense check");
    lat = LatticeHamiltonian{graph_laplacian(g), g};
  } else if (a.lattice == "chain" || a.lattice == "ring") {
    periodic = a.lattice == "ring";
    require(a.length <= kMaxDenseVertices, "decompose: chain too long for the dense check");
    lat = laplacian_chain(a.length, periodic);
    chain_like = true;
  } else if (a.lattice == "honeycomb") {
    require(a.lx >= 1 && a.ly >= 1 && 2 * a.lx * a.ly <= kMaxDenseVertices, "decompose: honeycomb size out of range");
    lat = honeycomb(a.lx, a.ly, a.periodic);
  } else {
    throw ValidationError("decompose: unknown lattice '" + a.lattice + "'");
  }

  EdgeColoring coloring;
  const bool parity_ok = chain_like && !(periodic && a.length % 2 == 1);
  if (a.coloring == "parity" || (a.coloring == "auto" && parity_ok)) {
    require(chain_like, "decompose: parity coloring needs a chain or ring");
    coloring = chain_parity_coloring(lat->graph, periodic);
  } else {
    coloring = color_edges(lat->graph, {.bipartite_fast_path = a.coloring != "misra-gries"});
  }
  if (!coloring.is_proper(lat->graph)) throw AssertionFailure("decompose: edge coloring is not proper");

  const Decomposition dec = decompose(lat->h, lat->graph, coloring);
  const HermitianTermSet terms = dec.term_set();
  const double reconstruction = terms.reconstruction_error(lat->h);

  // Each block is 2|h| times a rank-one projector, so B^2 = 2 diag(B) B.
  Json term_report = Json::array();
  double worst_square = 0.0;
  for (const auto& b : dec.blocks) {
    const Matrix d = b.matrix.diagonal().asDiagonal();
    const double r = (b.matrix * b.matrix - 2.0 * d * b.matrix).cwiseAbs().maxCoeff();
    worst_square = std::max(worst_square, r);
    term_report.push_back({{"label", b.label}, {"blocks", b.blocks.size()}, {"square_residual", r}});
  }

  std::string spectrum = "skipped";
  double spectrum_error = 0.0;
  if (chain_like) {
    const Eigen::SelfAdjointEigenSolver<Matrix> es(lat->h, Eigen::EigenvaluesOnly);
    std::vector<double> expect;
    const auto len = static_cast<double>(a.length);
    // Open ends keep the diagonal 2, i.e. Dirichlet boundaries.
    for (std::int64_t j = 0; j < a.length; ++j) {
      const double s = periodic ? std::sin(std::numbers::pi * double(j) / len)
                                : std::sin(std::numbers::pi * double(j + 1) / (2.0 * (len + 1.0)));
      expect.push_back(4.0 * s * s);
    }
    std::sort(expect.begin(), expect.end());
    for (std::size_t j = 0; j < expect.size(); ++j)
      spectrum_error = std::max(spectrum_error, std::abs(es.eigenvalues()(Eigen::Index(j)) - expect[j]));
    spectrum = spectrum_error <= 1e-10 ? "pass" : "fail";
  }

  const std::string method = coloring.method == ColoringMethod::kChainParity ? "parity"
                             : coloring.method == ColoringMethod::kBipartite  ? "bipartite"
                                                                              : "misra-gries";
  if (!c.out.empty()) write_text_file(c.out, term_set_to_json(terms).dump(2) + "\n");

  Json rep{{"vertices", lat->graph.vertex_count()},
           {"edges", lat->graph.edge_count()},
           {"max_degree", lat->graph.max_degree()},
           {"color_count", coloring.color_count},
           {"method", method},
           {"diagonal_term", dec.diagonal.has_value()},
           {"reconstruction_error", reconstruction},
           {"terms", term_report},
           {"spectrum", spectrum},
           {"spectrum_error", spectrum_error}};
  std::string text;
  if (c.json()) {
    text = rep.dump(2) + "\n";
  } else {
    CsvWriter w({"term", "label", "blocks", "square_residual"});
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      w.cell(std::uint64_t(i)).cell(dec.blocks[i].label).cell(std::uint64_t(dec.blocks[i].blocks.size()));
      w.cell(term_report[i]["square_residual"].get<double>());
      w.end_row();
    }
    Json summary = rep;
    summary.erase("terms");
    w.comment(summary.dump());
    text = w.str();
  }
  if (a.report.empty())
    std::cout << text;
  else
    write_text_file(a.report, text);

  if (reconstruction > 1e-12) throw AssertionFailure("decompose: reconstruction error " + format_double(reconstruction));
  if (worst_square > 1e-12) throw AssertionFailure("decompose: block squaring residual " + format_double(worst_square));
  if (spectrum == "fail") throw AssertionFailure("decompose: spectrum error " + format_double(spectrum_error));
  return 0;
}

// -------------------------------------------------------------------- grover

struct GroverArgs {
  std::uint64_t n = 16;
  std::uint64_t max_steps = 0;  // 0: twice the optimal count
  std::uint64_t target = 0;
  std::uint64_t runs = 0;       // 0: no amplification table
  std::uint64_t trials = 1'000'000;
  std::optional<double> per_run_error;
};

int run_grover(const Common& c, const GroverArgs& a) {
  require(a.n >= 2 && a.n <= kMaxFullStateSize, "grover: N must lie in [2, 2^22]");
  require(a.target < a.n, "grover: target index out of range");
  const SearchInstance inst(a.n);
  const std::uint64_t q = optimal_steps(inst);
  const std::uint64_t max_steps = a.max_steps > 0 ? a.max_steps : std::max<std::uint64_t>(1, 2 * q);
  const double p = a.per_run_error.value_or(1.0 / double(a.n));
  if (a.runs > 0) {
    require_odd_runs(a.runs);
    AmplificationPlan{p, a.runs, a.trials, c.seed}.validate();
  }

  const auto curve = success_curve(a.n, max_steps, a.target);
  const CurvePoint peak = curve_peak(curve);

  std::vector<AmplificationRow> table;
  for (std::uint64_t r = 1; a.runs > 0 && r <= a.runs; r += 2) {
    const auto est = simulate_majority({p, r, a.trials, c.seed}, c.threads);
    table.push_back({r, grover_majority_bound(a.n, r), binomial_tail(p, r), est});
  }

  if (c.json()) {
    Json doc{{"N", a.n}, {"target", a.target}, {"optimal_steps", q}, {"per_run_error", p},
             {"peak", {{"step", peak.step}, {"probability", peak.probability}}}};
    Json pts = Json::array();
    for (const auto& pt : curve) pts.push_back({{"step", pt.step}, {"probability", pt.probability}});
    doc["curve"] = pts;
    if (!table.empty()) {
      Json amp = Json::array();
      for (const auto& row : table)
        amp.push_back({{"R", row.runs}, {"bound", row.bound}, {"exact", row.exact},
                       {"empirical", row.empirical.rate}, {"ci95", row.empirical.ci95()}});
      doc["amplification"] = amp;
      doc["trials"] = a.trials;
      doc["seed"] = c.seed;
    }
    emit(c, doc.dump(2) + "\n");
  } else {
    CsvWriter w({"step", "probability"});
    for (const auto& pt : curve) {
      w.cell(pt.step).cell(pt.probability);
      w.end_row();
    }
    if (!table.empty()) {
      w.blank_line();
      w.row_strings({"R", "bound", "exact", "empirical", "ci95"});
      for (const auto& row : table) {
        w.cell(row.runs).cell(row.bound).cell(row.exact).cell(row.empirical.rate).cell(row.empirical.ci95());
        w.end_row();
      }
    }
    emit(c, w.str());
  }
  if (peak.probability < 1.0 - 1.0 / double(a.n))
    throw AssertionFailure("grover: peak probability " + format_double(peak.probability) + " below 1 - 1/N");
  return 0;
}

// ---------------------------------------------------------------------- cost

struct CostArgs {
  std::uint64_t n = 1024;
  std::optional<double> t;  // default T
  double eps = 1e-6;
  std::optional<double> norm_e2;  // default: H_C projector split
  std::uint64_t terms = 2;
  int degree = 1;
  double trotter_queries = 2.0;
  double grover_queries = 1.0;
};

int run_cost(const Common& c, const CostArgs& a) {
  require(a.n >= 2, "cost: N must be >= 2");
  const SearchInstance inst(a.n);
  const double t = a.t.value_or(inst.search_time());
  const double e2 = a.norm_e2 ? *a.norm_e2 : commutator_error(search_projector_terms(inst)).norm_e2;
  CostModel cm{.t = t, .eps = a.eps, .n = a.n, .terms = a.terms, .degree = a.degree};
  cm.convention = {a.trotter_queries, a.grover_queries};
  require(a.trotter_queries > 0.0 && a.grover_queries > 0.0, "cost: query counts must be > 0");
  const CostComparison cmp = compare_costs(cm, e2);

  Json grover{{"steps_per_run", cmp.grover.steps_per_run},
              {"R", cmp.grover.runs},
              {"R_exact_search", majority_runs_exact(a.n, a.eps)},
              {"b", cmp.grover_register.bits},
              {"C", cmp.grover_register.step_cost},
              {"queries", cmp.grover.queries},
              {"cost", cmp.grover.cost}};
  grover["Q_t"] = cmp.grover.qt ? Json(*cmp.grover.qt) : Json(nullptr);
  Json doc{{"inputs", {{"N", a.n}, {"t", t}, {"eps", a.eps}, {"l", a.terms}, {"d", a.degree}}},
           {"trotter",
            {{"norm_e2", e2},
             {"n", cmp.trotter.steps},
             {"n_exact", cmp.trotter.steps_exact},
             {"dt", cmp.trotter.dt},
             {"b", cmp.trotter_register.bits},
             {"C", cmp.trotter_register.step_cost},
             {"queries", cmp.trotter.queries},
             {"cost", cmp.trotter.cost}}},
           {"grover", grover},
           {"ratio", cmp.ratio()},
           {"convention", {{"queries_per_trotter_step", a.trotter_queries}, {"queries_per_grover_step", a.grover_queries}}}};
  if (c.json()) {
    emit(c, doc.dump(2) + "\n");
  } else {
    CsvWriter w({"key", "value"});
    for (const auto& [section, body] : doc.items()) {
      if (!body.is_object()) {
        w.cell(section).cell(body.get<double>());
        w.end_row();
        continue;
      }
      for (const auto& [k, v] : body.items()) {
        w.cell(section + "." + k);
        if (v.is_null())
          w.cell("");
        else
          w.cell(v.get<double>());
        w.end_row();
      }
    }
    emit(c, w.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search-evolution and product-formula experiments", "projevo"};
  app.require_subcommand(1, 1);

  Common common;

  TrajectoryArgs traj;
  auto* s_traj = app.add_subcommand("trajectory", "Bloch trajectories of the continuous and discrete searches");
  s_traj->add_option("--n", traj.n, "Database size N");
  s_traj->add_option("--samples", traj.samples, "Sample count on [0, T]");

  EquivalenceArgs eq;
  auto* s_eq = app.add_subcommand("equivalence", "Residual of the continuous/discrete equivalence identity");
  s_eq->add_option("--n", eq.sizes, "Database sizes")->delimiter(',');
  s_eq->add_option("--points", eq.points, "Uniform t samples on [0, T] per N");
  s_eq->add_option("--t", eq.times, "Explicit t values (replace --points)")->delimiter(',');
  s_eq->add_option("--tolerance", eq.tolerance, "Residual threshold")->check(CLI::PositiveNumber);

  ScanArgs scan;
  auto* s_scan = app.add_subcommand("trotter-scan", "First-order product-formula error against step size");
  s_scan->add_option("--model", scan.model, "Term set")->check(CLI::IsMember({"hc", "ring", "file"}));
  s_scan->add_option("--n", scan.n, "N for the search Hamiltonian split");
  s_scan->add_option("--length", scan.length, "Ring length for the even/odd Laplacian split");
  s_scan->add_option("--terms", scan.terms_file, "Term-set JSON for --model file");
  s_scan->add_option("--t", scan.t, "Evolution time");
  s_scan->add_option("--dt", scan.grid, "Step-size grid")->delimiter(',');
  s_scan->add_option("--max-steps", scan.max_steps, "Step-count cap");

  DecomposeArgs dec;
  auto* s_dec = app.add_subcommand("decompose", "Split a lattice Hamiltonian into block-diagonal terms");
  s_dec->add_option("--lattice", dec.lattice, "Lattice kind")->check(CLI::IsMember({"chain", "ring", "honeycomb"}));
  s_dec->add_option("--length", dec.length, "Chain or ring length");
  s_dec->add_option("--lx", dec.lx, "Honeycomb cells along x");
  s_dec->add_option("--ly", dec.ly, "Honeycomb cells along y");
  s_dec->add_flag("--periodic", dec.periodic, "Periodic honeycomb");
  s_dec->add_option("--graph", dec.graph_file, "Graph JSON {vertices, edges}; uses its weighted Laplacian");
  s_dec->add_option("--coloring", dec.coloring, "Edge coloring")
      ->check(CLI::IsMember({"auto", "parity", "general", "misra-gries"}));
  s_dec->add_option("--report", dec.report, "Report file (default: stdout)");

  GroverArgs gr;
  auto* s_gr = app.add_subcommand("grover", "State-vector success curve and majority amplification");
  s_gr->add_option("--n", gr.n, "Database size N");
  s_gr->add_option("--max-steps", gr.max_steps, "Curve length (default: twice the optimal count)");
  s_gr->add_option("--target", gr.target, "Marked index");
  s_gr->add_option("--runs", gr.runs, "Largest odd R for the amplification table");
  s_gr->add_option("--trials", gr.trials, "Monte Carlo trials per R");
  s_gr->add_option("--per-run-error", gr.per_run_error, "Per-run error p (default: 1/N)");

  CostArgs cost;
  auto* s_cost = app.add_subcommand("cost", "Trotter against Grover resource estimate");
  s_cost->add_option("--n", cost.n, "Database size N");
  s_cost->add_option("--t", cost.t, "Evolution time (default: T)");
  s_cost->add_option("--eps", cost.eps, "Target error");
  s_cost->add_option("--norm-e2", cost.norm_e2, "Commutator norm (default: search Hamiltonian split)");
  s_cost->add_option("--terms", cost.terms, "Number of Hamiltonian terms l");
  s_cost->add_option("--degree", cost.degree, "Graph degree d");
  s_cost->add_option("--trotter-queries", cost.trotter_queries, "Queries per Trotter step");
  s_cost->add_option("--grover-queries", cost.grover_queries, "Queries per Grover step");

  for (auto* sub : {s_traj, s_eq, s_scan, s_dec, s_gr, s_cost}) add_common(sub, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!common.config.empty()) apply_config(sub, common.config);
    if (sub == s_traj) return run_trajectory(common, traj);
    if (sub == s_eq) return run_equivalence(common, eq);
    if (sub == s_scan) return run_trotter_scan(common, scan);
    if (sub == s_dec) return run_decompose(common, dec);
    if (sub == s_gr) return run_grover(common, gr);
    return run_cost(common, cost);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const AssertionFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
