#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lindnet/graphs.hpp"
#include "lindnet/network.hpp"
#include "lindnet/sim.hpp"
#include "lindnet/svar.hpp"

namespace lindnet {

using Json = nlohmann::ordered_json;

// Polynomials serialize as coefficient arrays, constant term first; each
// coefficient is a JSON integer or a "num/den" string. Values that do not
// fit a JSON-safe integer are emitted as strings. Floating-point input is
// rejected: the format is exact by construction.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const std::string& context = "polynomial");

Json poly_matrix_to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j, const std::string& context = "matrix");

Json signal_space_to_json(const SignalSpace& space);
SignalSpace signal_space_from_json(const Json& j);

// { "signals": [...], "rows": [[poly...]...] }
Json kernel_rep_to_json(const KernelRep& k);
KernelRep kernel_rep_from_json(const Json& j);

// { "signals": [...], "components": [{"name", "signals"?, "rows"}...] };
// a component may name a subset of blocks and give rows over those columns
// only; omitted blocks are zero-filled.
Json network_to_json(const Network& net);
Network network_from_json(const Json& j);

// { "X": [...], "Q": [...], "outputs": [...], "inputs": [...] }; Q and the
// name lists may be omitted (no inputs, default names).
Json svar_to_json(const SvarModel& model);
SvarModel svar_from_json(const Json& j);

Json incidence_to_json(const IncidenceMatrix& s);
Json hypergraph_to_json(const Hypergraph& g);
Json digraph_to_json(const DiGraph& g);

// Versioned model file holding exactly one payload under "network" or
// "svar".
struct ModelFile {
  std::optional<Network> network;
  std::optional<SvarModel> svar;
};

ModelFile model_file_from_json(const Json& j);
ModelFile parse_model_file(const std::string& text);
ModelFile load_model_file(const std::string& path);
Json model_file_json(const Network& net);
Json model_file_json(const SvarModel& model);

// CSV of exact rationals with a header line. Values are "num" or "num/den".
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<Rational>> rows;
};

CsvTable csv_from_text(const std::string& text);
std::string csv_to_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<Rational>>& rows);

// Header = signal component names, one row per time sample.
std::string trajectory_to_csv(const Trajectory& traj);
Trajectory trajectory_from_csv(const std::string& text, const SignalSpace& space);

// Reorders table columns to the requested names; throws Error(parse_error)
// listing what is missing or unexpected.
std::vector<std::vector<Rational>> columns_by_name(
    const CsvTable& table, const std::vector<std::string>& names);

}  // namespace lindnet
