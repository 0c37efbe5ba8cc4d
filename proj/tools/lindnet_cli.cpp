#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lindnet/error.hpp"
#include "lindnet/graphs.hpp"
#include "lindnet/json_io.hpp"
#include "lindnet/network.hpp"
#include "lindnet/sim.hpp"
#include "lindnet/svar.hpp"

namespace {

using namespace lindnet;

constexpr int kOk = 0;
constexpr int kHypothesisViolation = 1;
constexpr int kParseError = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::parse_error, "cannot write \"" + path + "\"");
  }
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open \"" + path + "\"");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const Network& require_network(const ModelFile& file) {
  if (!file.network) {
    throw Error(Errc::parse_error, "this command expects a network payload");
  }
  return *file.network;
}

const SvarModel& require_svar(const ModelFile& file) {
  if (!file.svar) {
    throw Error(Errc::parse_error, "this command expects an svar payload");
  }
  return *file.svar;
}

int cmd_analyze(const std::string& path, bool as_json) {
  const Network& net = require_network(load_model_file(path));
  const KernelRep whole = interconnect(net);
  const std::size_t p = output_cardinality(whole);
  const int n = mcmillan_degree(whole);
  const IncidenceMatrix s = incidence(net);
  const bool regular = is_regular(net);
  const bool regular_feedback = is_regular_feedback(net);

  if (as_json) {
    Json components = Json::array();
    for (std::size_t i = 0; i < net.size(); ++i) {
      components.push_back(
          Json{{"name", net.names()[i]},
               {"p", output_cardinality(net.components()[i])},
               {"n", mcmillan_degree(net.components()[i])}});
    }
    Json signals = Json::array();
    for (const auto& b : net.space().blocks()) {
      signals.push_back(b.name);
    }
    const Json report{{"signals", std::move(signals)},
                      {"components", std::move(components)},
                      {"interconnection", Json{{"p", p}, {"n", n}}},
                      {"incidence", incidence_to_json(s)},
                      {"regular", regular},
                      {"regular_feedback", regular_feedback}};
    std::cout << report.dump(2) << "\n";
    return kOk;
  }

  std::cout << "signals:";
  for (const auto& b : net.space().blocks()) {
    std::cout << " " << b.name;
    if (b.dim > 1) {
      std::cout << "(" << b.dim << ")";
    }
  }
  std::cout << "  (q=" << net.space().q() << ")\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    std::cout << "component " << net.names()[i]
              << ": p=" << output_cardinality(net.components()[i])
              << " n=" << mcmillan_degree(net.components()[i]) << "\n";
  }
  std::cout << "interconnection: p=" << p << " n=" << n << "\n";
  std::cout << "incidence:\n" << s.to_text();
  std::cout << "regular: " << (regular ? "true" : "false") << "\n";
  std::cout << "regular_feedback: " << (regular_feedback ? "true" : "false")
            << "\n";
  return kOk;
}

int cmd_graph(const std::string& path, const std::string& kind,
              const std::string& format, const std::string& out) {
  const ModelFile file = load_model_file(path);
  std::string text;
  if (kind == "svar") {
    const DiGraph g = svar_digraph(require_svar(file));
    text = format == "dot" ? to_dot(g) : digraph_to_json(g).dump(2) + "\n";
  } else {
    // signal/system graphs apply to svar payloads through their induced
    // network
    const Network net = file.network ? *file.network : to_network(*file.svar);
    const Hypergraph g = kind == "signal" ? signal_graph(net) : system_graph(net);
    text = format == "dot" ? to_dot(g) : hypergraph_to_json(g).dump(2) + "\n";
  }
  write_output(out, text);
  return kOk;
}

int cmd_svar(const std::string& path, const std::string& direction,
             const std::string& out) {
  const ModelFile file = load_model_file(path);
  if (direction == "to") {
    const Network net = to_network(require_svar(file));
    write_output(out, model_file_json(net).dump(2) + "\n");
    return kOk;
  }
  const SvarConversion conv = from_network(require_network(file));
  Json j = model_file_json(conv.model);
  Json permutation = Json::array();
  const std::vector<std::string> names =
      require_network(file).space().column_names();
  for (std::size_t col : conv.permutation) {
    permutation.push_back(Json{{"column", col}, {"name", names[col]}});
  }
  j["permutation"] = std::move(permutation);
  write_output(out, j.dump(2) + "\n");
  return kOk;
}

int cmd_merge(const std::string& path, const std::string& mode_name, bool as_json) {
  const Network& net = require_network(load_model_file(path));
  const RegularityMode mode = mode_name == "regular"
                                  ? RegularityMode::regular
                                  : RegularityMode::regular_feedback;
  const RegularizingSearch result = regularizing_partition(net, mode);
  const Network merged = merge(net, result.partition);

  if (as_json) {
    Json groups = Json::array();
    for (const auto& group : result.partition.groups) {
      Json names = Json::array();
      for (std::size_t idx : group) {
        names.push_back(net.names()[idx]);
      }
      groups.push_back(std::move(names));
    }
    const Json report{{"mode", mode_name},
                      {"partition", std::move(groups)},
                      {"groups", result.partition.groups.size()},
                      {"exhaustive", result.exhaustive},
                      {"merged_regular", is_regular(merged)},
                      {"merged_regular_feedback", is_regular_feedback(merged)}};
    std::cout << report.dump(2) << "\n";
    return kOk;
  }

  std::cout << "mode: " << mode_name << "\n";
  std::cout << "partition:";
  for (const auto& group : result.partition.groups) {
    std::cout << " {";
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (k > 0) std::cout << ",";
      std::cout << net.names()[group[k]];
    }
    std::cout << "}";
  }
  std::cout << "\n";
  std::cout << "groups: " << result.partition.groups.size() << "\n";
  std::cout << "exhaustive: " << (result.exhaustive ? "true" : "false") << "\n";
  std::cout << "merged regular: " << (is_regular(merged) ? "true" : "false")
            << "\n";
  std::cout << "merged regular_feedback: "
            << (is_regular_feedback(merged) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_simulate(const std::string& path, const std::string& input_path,
                 const std::string& init_path, std::size_t horizon,
                 const std::string& out) {
  const Network& net = require_network(load_model_file(path));
  const KernelRep whole = interconnect(net);
  const IOPartition part = io_partition(whole);
  const std::vector<std::string> col_names = net.space().column_names();

  std::vector<std::string> input_names, output_names;
  for (std::size_t c : part.input_cols) input_names.push_back(col_names[c]);
  for (std::size_t c : part.output_cols) output_names.push_back(col_names[c]);

  std::vector<std::vector<Rational>> input;
  if (!part.input_cols.empty()) {
    if (input_path.empty()) {
      std::string expect;
      for (const auto& name : input_names) expect += " " + name;
      throw Error(Errc::parse_error,
                  "--input is required; expected columns:" + expect);
    }
    input = columns_by_name(csv_from_text(read_file(input_path)), input_names);
  } else {
    input.assign(horizon, {});
  }

  int tau = 0;
  for (std::size_t i = 0; i < part.p_part.rows(); ++i) {
    tau = std::max(tau, part.p_part.row_degree(i));
  }
  std::vector<std::vector<Rational>> initial;
  if (tau > 0) {
    if (init_path.empty()) {
      std::string expect;
      for (const auto& name : output_names) expect += " " + name;
      throw Error(Errc::parse_error,
                  "--init is required (" + std::to_string(tau) +
                      " samples); expected columns:" + expect);
    }
    initial = columns_by_name(csv_from_text(read_file(init_path)), output_names);
  }

  const Trajectory traj = simulate(part, net.space(), input, initial, horizon);
  write_output(out, trajectory_to_csv(traj));
  return kOk;
}

int cmd_check(const std::string& path, const std::string& traj_path) {
  const Network& net = require_network(load_model_file(path));
  const KernelRep whole = interconnect(net);
  const Trajectory traj =
      trajectory_from_csv(read_file(traj_path), net.space());
  const RatMatrix res = residual(whole, traj);
  for (std::size_t t = 0; t < res.rows(); ++t) {
    for (std::size_t i = 0; i < res.cols(); ++i) {
      if (res.at(t, i) != 0) {
        std::cout << "violation at time " << t << " (row " << i + 1
                  << "): residual " << format_rational(res.at(t, i)) << "\n";
        return kHypothesisViolation;
      }
    }
  }
  std::cout << "member\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structural analysis of linear dynamical networks"};
  app.require_subcommand(1);

  std::string path, out, kind, format = "dot", direction, mode = "regular_feedback";
  std::string input_path, init_path, traj_path;
  std::size_t horizon = 0;
  bool as_json = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Structural invariants, incidence matrix, regularity verdicts");
  analyze->add_option("file", path, "network model file")->required();
  analyze->add_flag("--json", as_json, "emit a JSON report");

  CLI::App* graph = app.add_subcommand("graph", "Export a graph of the model");
  graph->add_option("file", path, "model file")->required();
  graph->add_option("--kind", kind, "signal | system | svar")
      ->required()
      ->check(CLI::IsMember({"signal", "system", "svar"}));
  graph->add_option("--format", format, "dot | json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("-o,--output", out, "output file (default stdout)");

  CLI::App* svar = app.add_subcommand(
      "svar", "Convert between svar models and behavioral networks");
  svar->add_option("file", path, "model file")->required();
  svar->add_option("--direction", direction, "to (svar->network) | from (network->svar)")
      ->required()
      ->check(CLI::IsMember({"to", "from"}));
  svar->add_option("-o,--output", out, "output file (default stdout)");

  CLI::App* merge_cmd = app.add_subcommand(
      "merge", "Search a component partition whose merge is regular");
  merge_cmd->add_option("file", path, "network model file")->required();
  merge_cmd->add_option("--mode", mode, "regular | regular_feedback")
      ->check(CLI::IsMember({"regular", "regular_feedback"}));
  merge_cmd->add_flag("--json", as_json, "emit a JSON report");

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Simulate the interconnected system");
  simulate_cmd->add_option("file", path, "network model file")->required();
  simulate_cmd->add_option("--input", input_path, "csv of input columns");
  simulate_cmd->add_option("--init", init_path, "csv of the initial output window");
  simulate_cmd->add_option("--horizon", horizon, "number of samples")->required();
  simulate_cmd->add_option("-o,--output", out, "output file (default stdout)");

  CLI::App* check = app.add_subcommand(
      "check", "Test membership of a trajectory in the network behavior");
  check->add_option("file", path, "network model file")->required();
  check->add_option("--trajectory", traj_path, "csv of all signal columns")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, as_json);
    if (graph->parsed()) return cmd_graph(path, kind, format, out);
    if (svar->parsed()) return cmd_svar(path, direction, out);
    if (merge_cmd->parsed()) return cmd_merge(path, mode, as_json);
    if (simulate_cmd->parsed())
      return cmd_simulate(path, input_path, init_path, horizon, out);
    if (check->parsed()) return cmd_check(path, traj_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? kParseError : kHypothesisViolation;
  }
  return kOk;
}
