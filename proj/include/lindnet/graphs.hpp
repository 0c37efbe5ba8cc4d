#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lindnet/network.hpp"
#include "lindnet/svar.hpp"

namespace lindnet {

// An edge of a hypergraph: an unordered member set plus a label that keeps
// duplicated member sets distinguishable. Members are stored ascending.
struct HyperEdge {
  std::string label;
  std::vector<std::size_t> members;

  friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

// Vertex list plus an edge multiset: identical member sets may repeat under
// distinct labels.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<HyperEdge> edges;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Directed graph without self-loops; edges are (from, to) vertex indices.
struct DiGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;
};

// One vertex per column, one edge per row with members at the 1 entries;
// repeated rows yield repeated member sets.
Hypergraph hypergraph_of(const IncidenceMatrix& s,
                         std::vector<std::string> vertex_labels,
                         std::vector<std::string> edge_labels);

// The hypergraph of the transposed incidence matrix: edges become vertices.
Hypergraph dual(const Hypergraph& h);

// Signals as vertices, components as edges.
Hypergraph signal_graph(const Network& net);

// Components as vertices, signals as edges (the dual).
Hypergraph system_graph(const Network& net);

// Directed graph of a model: vertices are the outputs then the inputs, and
// i -> j exactly when entry (j, i) of the adjacency sparsity pattern of
// [[X -Q], [0 0]] is nonzero with i != j. Inputs have no incoming edges.
DiGraph svar_digraph(const SvarModel& model);

// Deterministic GraphViz output. Two-member hyperedges render as plain
// undirected edges; other arities render through an auxiliary square net
// node connected to each member.
std::string to_dot(const Hypergraph& g);
std::string to_dot(const DiGraph& g);

}  // namespace lindnet
