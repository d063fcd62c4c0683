// aeq: enumerate abstract almost-equidistant graphs, build and verify
// the classical point-set constructions, probe graph realizability
// numerically, and print the known bounds table.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aeq/canonical.hpp"
#include "aeq/certify.hpp"
#include "aeq/constructions.hpp"
#include "aeq/embed.hpp"
#include "aeq/enumerate.hpp"
#include "aeq/geometry.hpp"
#include "aeq/graph6.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBudgetTruncated = 2;
constexpr int kExitInputError = 3;

int default_jobs() {
  if (const char* env = std::getenv("AEQ_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

struct Manifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  bool complete = true;
};

void write_manifest(const std::string& data_path, const Manifest& m) {
  std::ofstream out(data_path + ".manifest.json");
  out << "{\n  \"subcommand\": \"" << m.subcommand << "\",\n  \"parameters\": {";
  for (std::size_t i = 0; i < m.parameters.size(); ++i) {
    if (i) out << ", ";
    out << '"' << m.parameters[i].first << "\": " << m.parameters[i].second;
  }
  char wall[64];
  std::snprintf(wall, sizeof wall, "%.6f", m.wall_time_s);
  out << "},\n  \"seed\": " << m.seed << ",\n  \"wall_time_s\": " << wall
      << ",\n  \"complete\": " << (m.complete ? "true" : "false") << ",\n  \"version\": \""
      << kVersion << "\"\n}\n";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_report(std::ostream& out, const aeq::VerificationReport& report) {
  if (report.ok) {
    out << "ok: almost-equidistant (" << report.unit_pairs << " unit pairs, "
        << report.triples_checked << " triples checked)\n";
  } else {
    const auto& w = *report.witness;
    out << "FAILED: triple (" << w[0] << ", " << w[1] << ", " << w[2]
        << ") has no unit-distance pair\n";
  }
}

int run_enumerate(int dim, int max_n, const std::string& mode_name,
                  const std::string& emit_graphs, std::optional<double> budget, int jobs,
                  const std::string& csv_path) {
  aeq::SearchConfig cfg;
  cfg.d = dim;
  cfg.n_max = max_n;
  cfg.mode = mode_name == "minimal" ? aeq::CountMode::Minimal : aeq::CountMode::All;
  cfg.jobs = jobs;
  cfg.time_budget_s = budget;

  Stopwatch watch;
  std::ofstream graph_file;
  aeq::GraphSink sink;
  if (!emit_graphs.empty()) {
    graph_file.open(emit_graphs);
    if (!graph_file) {
      std::cerr << "error: cannot open " << emit_graphs << "\n";
      return kExitInputError;
    }
    sink = [&graph_file](const aeq::Graph& g) { graph_file << aeq::to_graph6(g) << '\n'; };
  }

  const aeq::EnumerationResult result = aeq::enumerate_aeq(cfg, sink);
  const std::string csv = result.table.to_csv(cfg.mode);

  Manifest manifest;
  manifest.subcommand = "enumerate";
  manifest.parameters = {{"dim", std::to_string(dim)},
                         {"max_n", std::to_string(max_n)},
                         {"mode", '"' + mode_name + '"'},
                         {"jobs", std::to_string(jobs)}};
  if (budget) manifest.parameters.emplace_back("time_budget_s", std::to_string(*budget));
  manifest.wall_time_s = watch.seconds();
  manifest.complete = result.complete;

  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(csv_path);
    out << csv;
    write_manifest(csv_path, manifest);
  }
  if (!emit_graphs.empty()) write_manifest(emit_graphs, manifest);
  return result.complete ? kExitOk : kExitBudgetTruncated;
}

int run_construct(const std::string& name, int two_simplex_dim, int larman_dim,
                  const std::string& out_path, const std::string& graph_out) {
  std::optional<aeq::PointSet> points;
  std::optional<aeq::Graph> graph;
  std::string selector;

  if (!name.empty()) {
    selector = "name=" + name;
    const aeq::NamedFixture fixture = aeq::named_fixture(name);
    points = fixture.points;
    graph = fixture.graph;
  } else if (two_simplex_dim > 0) {
    selector = "two_simplex=" + std::to_string(two_simplex_dim);
    points = aeq::two_simplex_construction(two_simplex_dim);
  } else {
    selector = "larman_rogers=" + std::to_string(larman_dim);
    points = aeq::larman_rogers(larman_dim);
  }

  Stopwatch watch;
  Manifest manifest;
  manifest.subcommand = "construct";
  manifest.parameters = {{"selector", '"' + selector + '"'}};

  if (graph && !graph_out.empty()) {
    std::ofstream out(graph_out);
    if (!out) {
      std::cerr << "error: cannot open " << graph_out << "\n";
      return kExitInputError;
    }
    out << aeq::to_graph6(*graph) << '\n';
    manifest.wall_time_s = watch.seconds();
    write_manifest(graph_out, manifest);
  }

  if (points) {
    if (out_path.empty()) {
      aeq::write_pointset_json(std::cout, *points);
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return kExitInputError;
      }
      aeq::write_pointset_json(out, *points);
      manifest.wall_time_s = watch.seconds();
      write_manifest(out_path, manifest);
    }
    const aeq::VerificationReport report = aeq::is_almost_equidistant(*points);
    print_report(std::cerr, report);
    return report.ok ? kExitOk : kExitVerificationFailed;
  }

  if (graph && graph_out.empty()) {
    // Graph-only fixture with no --graph-out: emit the graph6 line.
    if (out_path.empty()) {
      std::cout << aeq::to_graph6(*graph) << '\n';
    } else {
      std::ofstream out(out_path);
      out << aeq::to_graph6(*graph) << '\n';
      manifest.wall_time_s = watch.seconds();
      write_manifest(out_path, manifest);
    }
  }
  return kExitOk;
}

int run_verify(const std::string& points_path) {
  const aeq::PointSet ps = aeq::read_pointset_json_file(points_path);
  const aeq::VerificationReport report = aeq::is_almost_equidistant(ps);
  print_report(std::cout, report);
  return report.ok ? kExitOk : kExitVerificationFailed;
}

int run_embed(const std::string& graph_path, int dim, int restarts, std::uint64_t seed,
              int max_iters, double threshold, int jobs, const std::string& out_path) {
  const std::vector<aeq::Graph> graphs = aeq::read_graph6_file(graph_path);
  if (graphs.empty()) {
    std::cerr << "error: " << graph_path << " holds no graphs\n";
    return kExitInputError;
  }
  if (graphs.size() > 1)
    std::cerr << "note: " << graph_path << " holds " << graphs.size()
              << " graphs; embedding the first\n";

  aeq::EmbedConfig cfg;
  cfg.dimension = dim;
  cfg.restarts = restarts;
  cfg.rng_seed = seed;
  cfg.max_iters = max_iters;
  cfg.success_threshold = threshold;
  cfg.jobs = jobs;

  Stopwatch watch;
  const aeq::EmbeddingResult result = aeq::embed(graphs.front(), cfg);

  Manifest manifest;
  manifest.subcommand = "embed";
  manifest.parameters = {{"graph", '"' + graph_path + '"'},
                         {"dim", std::to_string(dim)},
                         {"restarts", std::to_string(restarts)},
                         {"max_iters", std::to_string(max_iters)},
                         {"jobs", std::to_string(jobs)}};
  manifest.seed = seed;
  manifest.wall_time_s = watch.seconds();

  if (out_path.empty()) {
    aeq::write_embedding_json(std::cout, result);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitInputError;
    }
    aeq::write_embedding_json(out, result);
    write_manifest(out_path, manifest);
  }
  std::cerr << (result.realized ? "realized" : "inconclusive") << ", best residual "
            << result.best_residual << "\n";
  return kExitOk;
}

int run_bounds(int dim, int table_max, bool as_json) {
  if (table_max > 0) {
    if (as_json) {
      for (int d = 1; d <= table_max; ++d) aeq::write_bounds_json(std::cout, aeq::known_bounds(d));
    } else {
      aeq::write_bounds_table(std::cout, table_max);
    }
  } else {
    const aeq::BoundsReport report = aeq::known_bounds(dim);
    if (as_json) {
      aeq::write_bounds_json(std::cout, report);
    } else {
      std::cout << "d = " << report.d << ": lower " << report.lower << ", upper " << report.upper
                << ", ramsey_upper " << report.ramsey_upper
                << (report.ramsey_is_estimate ? " (estimate)" : "") << ", asymptotic_upper "
                << report.asymptotic_upper << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"almost-equidistant set toolkit"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "count abstract almost-equidistant graphs");
  int dim = 2, max_n = 9;
  std::string mode = "all", emit_graphs, csv_path;
  double budget = 0.0;
  int jobs = default_jobs();
  enumerate->add_option("--dim", dim, "dimension d")->required()->check(CLI::Range(2, 63));
  enumerate->add_option("--max-n", max_n, "largest order to enumerate")
      ->required()
      ->check(CLI::Range(1, 64));
  enumerate->add_option("--mode", mode, "all or minimal")
      ->check(CLI::IsMember({"all", "minimal"}));
  enumerate->add_option("--emit-graphs", emit_graphs, "write representatives as graph6 lines");
  enumerate->add_option("--time-budget", budget, "wall-clock cap in seconds");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--csv", csv_path, "write the count table to a file instead of stdout");

  // construct
  auto* construct = app.add_subcommand("construct", "build a named point set or fixture graph");
  std::string name, out_path, graph_out;
  int two_simplex_dim = 0, larman_dim = 0;
  auto* name_opt = construct->add_option("--name", name, "fixture name");
  auto* two_opt = construct->add_option("--two-simplex", two_simplex_dim,
                                        "two-simplex construction in dimension d (>= 3)");
  auto* lr_opt =
      construct->add_option("--larman-rogers", larman_dim, "Larman-Rogers set for d in 5..8");
  name_opt->excludes(two_opt)->excludes(lr_opt);
  two_opt->excludes(lr_opt);
  construct->add_option("--out", out_path, "point JSON output path (default stdout)");
  construct->add_option("--graph-out", graph_out, "graph6 output path for the fixture graph");

  // verify
  auto* verify = app.add_subcommand("verify", "check a point JSON file");
  std::string points_path;
  verify->add_option("--points", points_path, "point JSON file")->required();

  // embed
  auto* embed = app.add_subcommand("embed", "search for an approximate unit-distance realization");
  std::string graph_path, embed_out;
  int embed_dim = 2, restarts = 100, max_iters = 20000;
  std::uint64_t seed = 1;
  double threshold = 1e-10;
  int embed_jobs = default_jobs();
  embed->add_option("--graph", graph_path, "graph6 file")->required();
  embed->add_option("--dim", embed_dim, "target dimension")->required()->check(CLI::PositiveNumber);
  embed->add_option("--restarts", restarts, "independent restarts")->check(CLI::PositiveNumber);
  embed->add_option("--seed", seed, "rng seed");
  embed->add_option("--max-iters", max_iters, "iteration cap per restart");
  embed->add_option("--threshold", threshold, "residual below which a realization is declared");
  embed->add_option("--jobs", embed_jobs, "worker threads")->check(CLI::PositiveNumber);
  embed->add_option("--out", embed_out, "result JSON path (default stdout)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "known bounds on the maximum set size");
  int bounds_dim = 0, table_max = 0;
  bool bounds_json = false;
  auto* bd = bounds->add_option("--dim", bounds_dim, "single dimension");
  auto* bt = bounds->add_option("--table", table_max, "table for d = 1..MAXD");
  bd->excludes(bt);
  bounds->add_flag("--json", bounds_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed())
      return run_enumerate(dim, max_n, mode, emit_graphs,
                           budget > 0 ? std::optional<double>(budget) : std::nullopt, jobs,
                           csv_path);
    if (construct->parsed()) {
      if (name.empty() && two_simplex_dim == 0 && larman_dim == 0) {
        std::cerr << "error: pick one of --name, --two-simplex, --larman-rogers\n";
        return kExitInputError;
      }
      return run_construct(name, two_simplex_dim, larman_dim, out_path, graph_out);
    }
    if (verify->parsed()) return run_verify(points_path);
    if (embed->parsed())
      return run_embed(graph_path, embed_dim, restarts, seed, max_iters, threshold, embed_jobs,
                       embed_out);
    if (bounds->parsed()) {
      if (bounds_dim == 0 && table_max == 0) {
        std::cerr << "error: pick --dim or --table\n";
        return kExitInputError;
      }
      return run_bounds(bounds_dim, table_max, bounds_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
