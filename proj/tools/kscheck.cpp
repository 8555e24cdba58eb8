// kscheck: command-line front end for the ks_core library.
//
// Exit codes: 0 success or verified, 1 semantic negative, 2 input error,
// 3 budget or convergence failure.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ks/catalog.hpp"
#include "ks/classify.hpp"
#include "ks/contextuality.hpp"
#include "ks/error.hpp"
#include "ks/graph6.hpp"
#include "ks/inequality.hpp"
#include "ks/report_json.hpp"
#include "ks/theta.hpp"

using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

struct RunConfig {
  double tol = 1e-6;
  std::uint64_t budget = ks::kMaxAssignmentBudget;
  int workers = 1;
  std::uint64_t seed = 0;
  int states = 1;
  std::string format = "json";
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ks::InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

ks::ContextSet load_context_set(const std::string& input) {
  if (input == "builtin" || input == "seven-context") return ks::builtin_seven_context();
  return ks::parse_vector_set(slurp(input));
}

// A graph argument is a built-in name, a graph6 file (first graph), "-" for
// stdin, or a literal graph6 string.
ks::Graph load_graph(const std::string& arg) {
  if (arg == "builtin") return *ks::builtin_graph("seven-context");
  if (auto g = ks::builtin_graph(arg)) return *g;
  if (arg == "-" || std::filesystem::exists(arg)) {
    std::istringstream in(slurp(arg));
    for (auto& rec : ks::read_graph6_stream(in)) {
      if (!rec.graph) throw ks::InputError(arg + ":" + std::to_string(rec.line) + ": " + rec.error);
      return *rec.graph;
    }
    throw ks::InputError("'" + arg + "' contains no graph");
  }
  return ks::from_graph6(arg);
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); })) {
    out << prefix << ":";
    for (const auto& e : j) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
    out << '\n';
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

// Text mode prints the summary line followed by the flattened report.
void emit(const RunConfig& cfg, const json& report, const std::string& summary) {
  if (cfg.format == "text") {
    std::cout << summary << '\n';
    flatten(report, "", std::cout);
  } else {
    std::cout << report.dump(2) << '\n';
  }
}

int cmd_verify_ks(const RunConfig& cfg, const std::string& input) {
  const ks::ContextSet cs = load_context_set(input);
  const ks::ContextSetReport structure = ks::validate_context_set(cs);
  json report = ks::to_json(structure);
  report["schema"] = ks::kReportSchema;
  report["input"] = input;

  const auto assignment = ks::ks_colorable(cs);
  report["colorable"] = assignment.has_value();
  if (assignment) {
    std::vector<int> ones;
    for (std::size_t r = 0; r < assignment->values.size(); ++r) {
      if (assignment->values[r]) ones.push_back(static_cast<int>(r));
    }
    report["assignment_ones"] = ones;
  }
  const ks::ParityCheck declared = ks::context_parity(cs);
  report["context_parity"] = declared.parity_proof;
  if (cs.ray_count() <= static_cast<std::size_t>(ks::Graph::kMaxVertices)) {
    const ks::ParityCheck graph = ks::is_parity_proof(ks::orthogonality_graph(cs).graph);
    report["parity"] = graph.parity_proof;
    report["max_cliques"] = graph.clique_count;
    report["contexts_are_maximum_cliques"] = ks::contexts_are_maximum_cliques(cs);
  } else {
    report["parity"] = nullptr;
  }
  report["verified"] = !assignment.has_value();
  emit(cfg, report, assignment ? "colorable: not a KS set" : "verified KS set");
  return assignment ? kNegative : kOk;
}

int cmd_classify(const RunConfig& cfg, const std::vector<std::string>& inputs) {
  struct Source {
    std::string name;
    std::size_t line = 0;
    std::string error;
    int graph = -1;  // index into graphs
  };
  std::vector<Source> sources;
  std::vector<ks::Graph> graphs;
  for (const auto& input : inputs) {
    if (input == "builtin" || ks::builtin_graph(input)) {
      sources.push_back({input, 0, "", static_cast<int>(graphs.size())});
      graphs.push_back(load_graph(input));
      continue;
    }
    std::istringstream in(slurp(input));
    for (auto& rec : ks::read_graph6_stream(in)) {
      Source s{input, rec.line, rec.error, -1};
      if (rec.graph) {
        s.graph = static_cast<int>(graphs.size());
        graphs.push_back(std::move(*rec.graph));
      }
      sources.push_back(std::move(s));
    }
  }

  ks::ClassifyOptions opts;
  opts.tol = cfg.tol;
  opts.workers = cfg.workers;
  const ks::CorpusScan scan = ks::corpus_scan(graphs, opts);

  json results = json::array();
  bool any_error = false;
  bool all_fc = true;
  int fc_count = 0;
  for (const auto& s : sources) {
    json item{{"source", s.name}};
    if (s.line) item["line"] = s.line;
    if (!s.error.empty()) {
      item["error"] = s.error;
      any_error = true;
    } else if (const auto& entry = scan.entries[s.graph]; entry.report) {
      item["report"] = ks::to_json(*entry.report);
      all_fc = all_fc && entry.report->fully_contextual;
      fc_count += entry.report->fully_contextual ? 1 : 0;
    } else {
      // Filtered out (e.g. disconnected); reported but not an input error.
      item["skipped"] = entry.error;
      all_fc = false;
    }
    results.push_back(std::move(item));
  }
  json census = json::array();
  for (const auto& row : scan.table) census.push_back(ks::to_json(row));
  const json report{{"schema", ks::kReportSchema},
                    {"graphs", results},
                    {"census", census},
                    {"ks_sets", "not evaluated"}};
  emit(cfg, report,
       std::to_string(fc_count) + " of " + std::to_string(results.size()) + " graphs fully contextual");
  for (const auto& s : sources) {
    if (!s.error.empty()) std::cerr << s.name << ":" << s.line << ": " << s.error << '\n';
  }
  if (any_error) return kInput;
  return all_fc ? kOk : kNegative;
}

int cmd_inequality(const RunConfig& cfg, const std::string& input) {
  const ks::ContextSet cs = load_context_set(input);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < cfg.states; ++i) seeds.push_back(cfg.seed + i);
  const auto r = ks::inequality_report(cs, seeds, {.budget = cfg.budget, .workers = cfg.workers});
  json report = ks::to_json(r);
  report["input"] = input;

  bool violated = false;
  if (r.quantum_value) {
    violated = *r.quantum_value > r.classical_max;
  } else {
    for (const auto& [seed, s] : r.state_samples) violated = violated || s > r.classical_max + 1e-9;
  }
  report["violated"] = violated;
  const std::string q = r.quantum_value ? ks::to_string(*r.quantum_value) : "state dependent";
  emit(cfg, report, "classical max " + std::to_string(r.classical_max) + ", quantum " + q);
  return violated ? kOk : kNegative;
}

int cmd_theta(const RunConfig& cfg, const std::string& arg) {
  const ks::Graph g = load_graph(arg);
  const ks::ThetaResult r = ks::lovasz_theta(g, {.tol = cfg.tol});
  json report = ks::to_json(r);
  report["n"] = g.n();
  char buf[64];
  std::snprintf(buf, sizeof buf, "theta %.9f", r.value);
  emit(cfg, report, buf);
  return kOk;
}

std::string to_dot(const ks::Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << " [label=\"" << labels[v] << "\"];\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

int cmd_export(const std::string& arg, const std::string& as) {
  const ks::Graph g = load_graph(arg);
  if (as == "graph6") {
    std::cout << ks::to_graph6(g) << '\n';
    return kOk;
  }
  std::vector<std::string> labels;
  if (arg == "builtin" || arg == "seven-context") {
    // vertex_of_ray is the identity, so ray labels are vertex labels.
    labels = ks::ray_labels(ks::builtin_seven_context());
  } else {
    for (int v = 0; v < g.n(); ++v) labels.push_back(std::to_string(v));
  }
  std::cout << to_dot(g, labels);
  return kOk;
}

int cmd_dim_bound(const RunConfig& cfg, int k) {
  const auto b = ks::johnson_dim_bound(k);
  emit(cfg, ks::to_json(b), "minimum dimension " + std::to_string(b.min_dimension));
  return kOk;
}

int cmd_three_clique(const RunConfig& cfg, int n, int omega) {
  const auto c = ks::no_three_clique_symmetric_parity(n, omega);
  emit(cfg, ks::to_json(c), c.feasible ? "feasible" : "infeasible: " + c.violated);
  return kOk;
}

int cmd_render(const std::string& input) {
  std::cout << ks::render_vector_set(load_context_set(input));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kochen-Specker set and contextuality toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "Theta solver tolerance")
      ->envname("KSCHECK_TOL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Largest number of sign assignments to enumerate")
      ->envname("KSCHECK_BUDGET")
      ->check(CLI::Range(std::uint64_t{1}, ks::kMaxAssignmentBudget))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")
      ->envname("KSCHECK_WORKERS")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "First random state seed")->envname("KSCHECK_SEED")->capture_default_str();
  app.add_option("--format", cfg.format, "Report format")
      ->envname("KSCHECK_FORMAT")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string input = "builtin";
  std::vector<std::string> inputs;
  std::string graph_arg;
  std::string export_as = "dot";
  int k = 1;
  int n = 0;
  int omega = 0;

  auto* verify = app.add_subcommand("verify-ks", "Check that a vector set admits no KS assignment");
  verify->add_option("input", input, "builtin, a vector-set file, or - for stdin")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify graphs (graph6 files or built-in names)");
  classify->add_option("inputs", inputs, "Graph6 files, built-in graph names, or -")->required();

  auto* inequality = app.add_subcommand("inequality", "Classical and quantum values of the context inequality");
  inequality->add_option("input", input, "builtin, a vector-set file, or - for stdin")->capture_default_str();
  inequality->add_option("--states", cfg.states, "Number of random states, seeds from --seed upward")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();

  auto* theta = app.add_subcommand("theta", "Lovasz theta of a graph");
  theta->add_option("graph", graph_arg, "Built-in name, graph6 file, - or a graph6 string")->required();

  auto* exporter = app.add_subcommand("export", "Write a graph as DOT or graph6");
  exporter->add_option("graph", graph_arg, "Built-in name, graph6 file, - or a graph6 string")->required();
  exporter->add_option("--as", export_as, "Output format")
      ->check(CLI::IsMember({"dot", "graph6"}))
      ->capture_default_str();

  auto* dim = app.add_subcommand("dim-bound", "Dimension bound for the k-fold Johnson construction");
  dim->add_option("k", k, "Multiplicity k >= 1")->required();

  auto* three = app.add_subcommand("three-clique", "Check the three-clique symmetric parity inequality");
  three->add_option("n", n, "Vertex count")->required();
  three->add_option("omega", omega, "Clique number")->required();

  auto* render = app.add_subcommand("render", "Print a vector set in the text format");
  render->add_option("input", input, "builtin, a vector-set file, or - for stdin")->capture_default_str();

  auto* builtins = app.add_subcommand("builtins", "List built-in graph names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*verify) return cmd_verify_ks(cfg, input);
    if (*classify) return cmd_classify(cfg, inputs);
    if (*inequality) return cmd_inequality(cfg, input);
    if (*theta) return cmd_theta(cfg, graph_arg);
    if (*exporter) return cmd_export(graph_arg, export_as);
    if (*dim) return cmd_dim_bound(cfg, k);
    if (*three) return cmd_three_clique(cfg, n, omega);
    if (*render) return cmd_render(input);
    if (*builtins) {
      for (const auto& name : ks::builtin_graph_names()) std::cout << name << '\n';
      return kOk;
    }
  } catch (const ks::BudgetError& e) {
    std::cerr << "kscheck: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    // InputError, DomainError and parse failures are all caller mistakes.
    std::cerr << "kscheck: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
