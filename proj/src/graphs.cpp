#include "lindnet/graphs.hpp"

#include <utility>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Hypergraph hypergraph_of(const IncidenceMatrix& s,
                         std::vector<std::string> vertex_labels,
                         std::vector<std::string> edge_labels) {
  if (vertex_labels.size() != s.cols() || edge_labels.size() != s.rows()) {
    throw Error(Errc::dimension_mismatch,
                "incidence matrix shape does not match the label counts");
  }
  Hypergraph g;
  g.vertices = std::move(vertex_labels);
  g.edges.reserve(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    HyperEdge e;
    e.label = edge_labels[i];
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (s.s[i][j]) e.members.push_back(j);
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

Hypergraph dual(const Hypergraph& h) {
  Hypergraph g;
  g.vertices.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    g.vertices.push_back(e.label);
  }
  g.edges.reserve(h.vertices.size());
  for (std::size_t v = 0; v < h.vertices.size(); ++v) {
    HyperEdge e;
    e.label = h.vertices[v];
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      for (std::size_t member : h.edges[i].members) {
        if (member == v) {
          e.members.push_back(i);
          break;
        }
      }
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

Hypergraph signal_graph(const Network& net) {
  std::vector<std::string> vertex_labels;
  for (const auto& b : net.space().blocks()) {
    vertex_labels.push_back(b.name);
  }
  return hypergraph_of(incidence(net), std::move(vertex_labels), net.names());
}

Hypergraph system_graph(const Network& net) { return dual(signal_graph(net)); }

DiGraph svar_digraph(const SvarModel& model) {
  const std::size_t n = model.output_count();
  const std::size_t m = model.input_count();
  DiGraph g;
  g.vertices = model.output_names();
  g.vertices.insert(g.vertices.end(), model.input_names().begin(),
                    model.input_names().end());
  // rows n..n+m-1 of the adjacency pattern are zero, so inputs never
  // receive an edge
  for (std::size_t from = 0; from < n + m; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (from == to) continue;
      const Poly& entry = from < n ? model.x().at(to, from)
                                   : model.q().at(to, from - n);
      if (!entry.is_zero()) {
        g.edges.emplace_back(from, to);
      }
    }
  }
  return g;
}

std::string to_dot(const Hypergraph& g) {
  std::string out = "graph {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(g.vertices[v]) +
           "\"];\n";
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const HyperEdge& e = g.edges[i];
    if (e.members.size() == 2) {
      out += "  v" + std::to_string(e.members[0]) + " -- v" +
             std::to_string(e.members[1]) + " [label=\"" + dot_escape(e.label) +
             "\"];\n";
      continue;
    }
    const std::string net_id = "net" + std::to_string(i);
    out += "  " + net_id + " [label=\"" + dot_escape(e.label) +
           "\", shape=square];\n";
    for (std::size_t member : e.members) {
      out += "  " + net_id + " -- v" + std::to_string(member) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_dot(const DiGraph& g) {
  std::string out = "digraph {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(g.vertices[v]) +
           "\"];\n";
  }
  for (const auto& [from, to] : g.edges) {
    out += "  v" + std::to_string(from) + " -> v" + std::to_string(to) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace lindnet
