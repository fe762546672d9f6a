#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeideal/ideal.hpp"
#include "edgeideal/varset.hpp"

namespace edgeideal {

struct Vertex {
  std::string id;
  long long weight = 1;
};

// A vertex-weighted oriented graph: no loops, no repeated edges, and no
// anti-parallel pairs (at most one orientation between two vertices).
// Vertex order is the declaration order and doubles as the polynomial
// variable order.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph(std::vector<Vertex> vertices,
                        std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  std::optional<int> find_vertex(std::string_view id) const;

  std::vector<int> in_degrees() const;
  std::vector<int> out_degrees() const;

  // Vertex ids as the ambient polynomial variables, in declaration order.
  const VarSetPtr& variable_set() const noexcept { return vars_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  VarSetPtr vars_;
};

enum class FamilyKind { OrientedCycle, OutStar, InStar, MixedStar, RootedForest, Other };

std::string family_name(FamilyKind kind);

struct FamilyTag {
  FamilyKind kind = FamilyKind::Other;
  // True when underlying acyclic with all in-degrees <= 1 (every component a
  // tree oriented away from a unique root).  Also set for star shapes that
  // happen to be such trees.
  bool rooted_forest = false;
  int components = 0;           // connected components, isolated vertices included
  std::vector<int> roots;       // in-degree-0 vertices when rooted_forest
  std::vector<std::string> notes;  // human-readable classification rationale
};

// Decides which closed-form family (if any) the graph belongs to.
// Precedence when patterns overlap: cycle, then star, then rooted forest.
FamilyTag classify(const WeightedOrientedGraph& graph);

struct NormalizeResult {
  WeightedOrientedGraph graph;
  std::vector<std::string> warnings;  // one per adjusted source vertex
};

// Sets the weight of every source (in-degree 0) vertex to 1.  Source weights
// never occur in the edge ideal, so this only affects bookkeeping and the
// closed formulas' weight sums.
NormalizeResult normalize_source_weights(const WeightedOrientedGraph& graph);

struct EdgeIdealResult {
  MonomialIdeal ideal;
  std::vector<std::string> warnings;  // isolated vertices, dropped generators
};

// The edge ideal: one generator x_u * x_v^{w(v)} per edge u -> v, in the
// polynomial ring on all vertices (isolated ones included; they matter for
// depth).  Throws ValidationError if the graph has no edges.
EdgeIdealResult edge_ideal(const WeightedOrientedGraph& graph);

// Accepts either the JSON object format or the edge-list text format
// (sniffed on the first non-space byte).  Throws ParseError with a byte
// offset on syntax errors, ValidationError on structural ones.
WeightedOrientedGraph parse_graph(std::string_view text);
WeightedOrientedGraph parse_graph_json(std::string_view text);
WeightedOrientedGraph parse_edge_list(std::string_view text);

// Canonical printers; both round-trip through the matching parser.
std::string to_json_string(const WeightedOrientedGraph& graph);
std::string to_edge_list(const WeightedOrientedGraph& graph);

}  // namespace edgeideal
