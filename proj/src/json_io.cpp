#include "lindnet/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

const BigInt kJsonSafeBound = BigInt(1) << 53;

[[noreturn]] void schema_error(const std::string& context, const std::string& what) {
  throw Error(Errc::parse_error, context + ": " + what);
}

Rational coefficient_from_json(const Json& j, const std::string& context) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long long>(j.get<std::int64_t>()));
  }
  if (j.is_number_unsigned()) {
    return Rational(BigInt(j.get<std::uint64_t>()));
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_float()) {
    schema_error(context, "floating-point coefficients are not accepted; "
                          "write an integer or a \"num/den\" string");
  }
  schema_error(context, "expected an integer or a \"num/den\" string");
}

Json coefficient_to_json(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt num = numerator(value);
    if (num < kJsonSafeBound && num > -kJsonSafeBound) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(format_rational(value));
}

const Json& require_member(const Json& j, const std::string& key,
                           const std::string& context) {
  if (!j.is_object()) {
    schema_error(context, "expected an object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    schema_error(context, "missing \"" + key + "\"");
  }
  return *it;
}

std::vector<std::string> string_list_from_json(const Json& j,
                                               const std::string& context) {
  if (!j.is_array()) {
    schema_error(context, "expected an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      schema_error(context, "expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) {
    arr.push_back(coefficient_to_json(c));
  }
  return arr;
}

Poly poly_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) {
    schema_error(context, "expected a coefficient array (constant term first)");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    coeffs.push_back(
        coefficient_from_json(j[k], context + "[" + std::to_string(k) + "]"));
  }
  return Poly(std::move(coeffs));
}

Json poly_matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(poly_to_json(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix poly_matrix_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) {
    schema_error(context, "expected an array of rows");
  }
  std::vector<std::vector<Poly>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    const std::string row_ctx = context + "[" + std::to_string(i) + "]";
    if (!row.is_array()) {
      schema_error(row_ctx, "expected an array of polynomials");
    }
    std::vector<Poly> out_row;
    out_row.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      out_row.push_back(
          poly_from_json(row[c], row_ctx + "[" + std::to_string(c) + "]"));
    }
    rows.push_back(std::move(out_row));
  }
  if (!rows.empty()) {
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) {
        schema_error(context, "rows have differing lengths");
      }
    }
  }
  return PolyMatrix(rows);
}

Json signal_space_to_json(const SignalSpace& space) {
  Json arr = Json::array();
  for (const auto& b : space.blocks()) {
    arr.push_back(Json{{"name", b.name}, {"dim", b.dim}});
  }
  return arr;
}

SignalSpace signal_space_from_json(const Json& j) {
  if (!j.is_array()) {
    schema_error("signals", "expected an array of {name, dim} objects");
  }
  std::vector<SignalBlock> blocks;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ctx = "signals[" + std::to_string(i) + "]";
    const Json& name = require_member(j[i], "name", ctx);
    if (!name.is_string()) {
      schema_error(ctx, "\"name\" must be a string");
    }
    std::size_t dim = 1;
    if (j[i].contains("dim")) {
      const Json& d = j[i]["dim"];
      if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<std::int64_t>() > 0)) {
        schema_error(ctx, "\"dim\" must be a positive integer");
      }
      dim = d.get<std::size_t>();
      if (dim == 0) {
        schema_error(ctx, "\"dim\" must be a positive integer");
      }
    }
    blocks.push_back({name.get<std::string>(), dim});
  }
  try {
    return SignalSpace(std::move(blocks));
  } catch (const Error& e) {
    schema_error("signals", e.what());
  }
}

Json kernel_rep_to_json(const KernelRep& k) {
  return Json{{"signals", signal_space_to_json(k.space)},
              {"rows", poly_matrix_to_json(k.r)}};
}

KernelRep kernel_rep_from_json(const Json& j) {
  const SignalSpace space = signal_space_from_json(require_member(j, "signals", "kernel"));
  PolyMatrix rows = poly_matrix_from_json(require_member(j, "rows", "kernel"), "rows");
  if (rows.rows() == 0) {
    rows = PolyMatrix(0, space.q());
  }
  if (rows.cols() != space.q()) {
    schema_error("kernel", "rows have " + std::to_string(rows.cols()) +
                               " columns for a signal space of dimension " +
                               std::to_string(space.q()));
  }
  return KernelRep(space, std::move(rows));
}

Json network_to_json(const Network& net) {
  Json components = Json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    components.push_back(Json{{"name", net.names()[i]},
                              {"rows", poly_matrix_to_json(net.components()[i].r)}});
  }
  return Json{{"signals", signal_space_to_json(net.space())},
              {"components", std::move(components)}};
}

Network network_from_json(const Json& j) {
  const SignalSpace space =
      signal_space_from_json(require_member(j, "signals", "network"));
  const Json& comps = require_member(j, "components", "network");
  if (!comps.is_array() || comps.empty()) {
    schema_error("components", "expected a nonempty array");
  }
  std::vector<KernelRep> components;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string ctx = "components[" + std::to_string(i) + "]";
    const Json& name = require_member(comps[i], "name", ctx);
    if (!name.is_string()) {
      schema_error(ctx, "\"name\" must be a string");
    }
    PolyMatrix rows = poly_matrix_from_json(require_member(comps[i], "rows", ctx),
                                            ctx + ".rows");
    if (comps[i].contains("signals")) {
      // rows cover only the named blocks, in the given order; everything
      // else is unconstrained and zero-filled
      const std::vector<std::string> used =
          string_list_from_json(comps[i]["signals"], ctx + ".signals");
      std::vector<std::size_t> cols;
      for (const auto& blk : used) {
        std::size_t b;
        try {
          b = space.block_index(blk);
        } catch (const Error& e) {
          schema_error(ctx + ".signals", e.what());
        }
        for (std::size_t c = 0; c < space.blocks()[b].dim; ++c) {
          cols.push_back(space.block_offset(b) + c);
        }
      }
      if (rows.cols() != cols.size()) {
        schema_error(ctx, "rows have " + std::to_string(rows.cols()) +
                              " columns for " + std::to_string(cols.size()) +
                              " named signal columns");
      }
      PolyMatrix full(rows.rows(), space.q());
      for (std::size_t r = 0; r < rows.rows(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          full.at(r, cols[c]) = rows.at(r, c);
        }
      }
      rows = std::move(full);
    }
    if (rows.rows() == 0) {
      rows = PolyMatrix(0, space.q());
    }
    if (rows.cols() != space.q()) {
      schema_error(ctx, "rows have " + std::to_string(rows.cols()) +
                            " columns for a signal space of dimension " +
                            std::to_string(space.q()));
    }
    components.emplace_back(space, std::move(rows));
    names.push_back(name.get<std::string>());
  }
  try {
    return Network(space, std::move(components), std::move(names));
  } catch (const Error& e) {
    schema_error("network", e.what());
  }
}

Json svar_to_json(const SvarModel& model) {
  return Json{{"X", poly_matrix_to_json(model.x())},
              {"Q", poly_matrix_to_json(model.q())},
              {"outputs", model.output_names()},
              {"inputs", model.input_names()}};
}

SvarModel svar_from_json(const Json& j) {
  PolyMatrix x = poly_matrix_from_json(require_member(j, "X", "svar"), "X");
  PolyMatrix q(x.rows(), 0);
  if (j.contains("Q")) {
    q = poly_matrix_from_json(j["Q"], "Q");
    if (q.cols() == 0) {
      q = PolyMatrix(x.rows(), 0);
    }
  }
  std::vector<std::string> outputs, inputs;
  if (j.contains("outputs")) {
    outputs = string_list_from_json(j["outputs"], "outputs");
  }
  if (j.contains("inputs")) {
    inputs = string_list_from_json(j["inputs"], "inputs");
  }
  return SvarModel::validate(std::move(x), std::move(q), std::move(outputs),
                             std::move(inputs));
}

Json incidence_to_json(const IncidenceMatrix& s) {
  Json rows = Json::array();
  for (const auto& row : s.s) {
    rows.push_back(row);
  }
  return rows;
}

Json hypergraph_to_json(const Hypergraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json members = Json::array();
    for (std::size_t m : e.members) {
      members.push_back(g.vertices[m]);
    }
    edges.push_back(Json{{"label", e.label}, {"members", std::move(members)}});
  }
  return Json{{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

Json digraph_to_json(const DiGraph& g) {
  Json edges = Json::array();
  for (const auto& [from, to] : g.edges) {
    edges.push_back(Json{{"from", g.vertices[from]}, {"to", g.vertices[to]}});
  }
  return Json{{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

ModelFile model_file_from_json(const Json& j) {
  if (!j.is_object()) {
    schema_error("model file", "expected an object");
  }
  const Json& version = require_member(j, "version", "model file");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1) {
    schema_error("model file", "unsupported version (expected 1)");
  }
  const bool has_network = j.contains("network");
  const bool has_svar = j.contains("svar");
  if (has_network == has_svar) {
    schema_error("model file",
                 "exactly one of \"network\" or \"svar\" must be present");
  }
  ModelFile out;
  if (has_network) {
    out.network = network_from_json(j["network"]);
  } else {
    out.svar = svar_from_json(j["svar"]);
  }
  return out;
}

ModelFile parse_model_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return model_file_from_json(j);
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::parse_error, "cannot open \"" + path + "\"");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model_file(buffer.str());
}

Json model_file_json(const Network& net) {
  return Json{{"version", 1}, {"network", network_to_json(net)}};
}

Json model_file_json(const SvarModel& model) {
  return Json{{"version", 1}, {"svar", svar_to_json(model)}};
}

CsvTable csv_from_text(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) {
      // trim surrounding blanks
      const auto begin = field.find_first_not_of(" \t");
      const auto end = field.find_last_not_of(" \t");
      fields.push_back(begin == std::string::npos
                           ? std::string()
                           : field.substr(begin, end - begin + 1));
    }
    if (first) {
      table.header = std::move(fields);
      first = false;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw Error(Errc::parse_error,
                  "csv line " + std::to_string(line_no) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(table.header.size()));
    }
    std::vector<Rational> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      row.push_back(parse_rational(f));
    }
    table.rows.push_back(std::move(row));
  }
  if (first) {
    throw Error(Errc::parse_error, "csv input has no header line");
  }
  return table;
}

std::string csv_to_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<Rational>>& rows) {
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j > 0) out += ',';
    out += header[j];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += format_rational(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_to_csv(const Trajectory& traj) {
  return csv_to_text(traj.space.column_names(), traj.values);
}

Trajectory trajectory_from_csv(const std::string& text, const SignalSpace& space) {
  const CsvTable table = csv_from_text(text);
  Trajectory traj{space, columns_by_name(table, space.column_names())};
  if (traj.values.empty()) {
    throw Error(Errc::parse_error, "trajectory csv has no samples");
  }
  return traj;
}

std::vector<std::vector<Rational>> columns_by_name(
    const CsvTable& table, const std::vector<std::string>& names) {
  std::vector<std::size_t> index;
  index.reserve(names.size());
  for (const auto& name : names) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
      throw Error(Errc::parse_error, "csv is missing column \"" + name + "\"");
    }
    index.push_back(static_cast<std::size_t>(it - table.header.begin()));
  }
  if (table.header.size() != names.size()) {
    for (const auto& h : table.header) {
      if (std::find(names.begin(), names.end(), h) == names.end()) {
        throw Error(Errc::parse_error, "csv has unexpected column \"" + h + "\"");
      }
    }
  }
  std::vector<std::vector<Rational>> out(table.rows.size(),
                                         std::vector<Rational>(names.size()));
  for (std::size_t t = 0; t < table.rows.size(); ++t) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      out[t][j] = table.rows[t][index[j]];
    }
  }
  return out;
}

}  // namespace lindnet
