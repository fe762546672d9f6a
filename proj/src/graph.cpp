#include "edgeideal/graph.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "json.hpp"

#include "edgeideal/errors.hpp"

namespace edgeideal {

WeightedOrientedGraph::WeightedOrientedGraph(
    std::vector<Vertex> vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) {
    throw ValidationError("graph needs at least one vertex");
  }
  std::vector<std::string> names;
  names.reserve(vertices_.size());
  for (const Vertex& v : vertices_) {
    if (!VarSet::valid_name(v.id)) {
      throw ValidationError("vertex id '" + v.id +
                            "' is not usable as a variable name");
    }
    if (v.weight < 1) {
      throw ValidationError("vertex '" + v.id + "' has weight " +
                            std::to_string(v.weight) + "; weights must be >= 1");
    }
    names.push_back(v.id);
  }
  vars_ = VarSet::make(std::move(names));  // also rejects duplicate ids

  std::set<std::pair<int, int>> seen;
  const int n = vertex_count();
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ValidationError("edge endpoint index out of range");
    }
    if (u == v) {
      throw ValidationError("loop at vertex '" + vertices_[u].id +
                            "' is not allowed");
    }
    if (!seen.insert({u, v}).second) {
      throw ValidationError("duplicate edge " + vertices_[u].id + " -> " +
                            vertices_[v].id);
    }
    if (seen.count({v, u})) {
      throw ValidationError("anti-parallel pair between '" + vertices_[u].id +
                            "' and '" + vertices_[v].id +
                            "' is not allowed in an oriented graph");
    }
  }
}

std::optional<int> WeightedOrientedGraph::find_vertex(std::string_view id) const {
  return vars_->find(id);
}

std::vector<int> WeightedOrientedGraph::in_degrees() const {
  std::vector<int> d(vertex_count(), 0);
  for (const auto& [u, v] : edges_) {
    (void)u;
    ++d[v];
  }
  return d;
}

std::vector<int> WeightedOrientedGraph::out_degrees() const {
  std::vector<int> d(vertex_count(), 0);
  for (const auto& [u, v] : edges_) {
    (void)v;
    ++d[u];
  }
  return d;
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::OrientedCycle:
      return "oriented-cycle";
    case FamilyKind::OutStar:
      return "out-star";
    case FamilyKind::InStar:
      return "in-star";
    case FamilyKind::MixedStar:
      return "mixed-star";
    case FamilyKind::RootedForest:
      return "rooted-forest";
    case FamilyKind::Other:
      return "other";
  }
  return "other";
}

namespace {

// Union-find over vertex indices.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FamilyTag classify(const WeightedOrientedGraph& g) {
  FamilyTag tag;
  const int n = g.vertex_count();
  const int e = g.edge_count();

  DisjointSets ds(n);
  for (const auto& [u, v] : g.edges()) ds.unite(u, v);
  std::set<int> comps;
  for (int i = 0; i < n; ++i) comps.insert(ds.find(i));
  tag.components = static_cast<int>(comps.size());

  if (e == 0) {
    tag.kind = FamilyKind::Other;
    tag.notes.push_back("graph has no edges; no family applies");
    return tag;
  }

  std::vector<int> in = g.in_degrees();
  std::vector<int> out = g.out_degrees();

  // Rooted forest: underlying acyclic (|E| = |V| - #components) and every
  // in-degree at most 1.  Each component then has exactly one in-degree-0
  // root with all edges oriented away from it.
  bool forest = (e == n - tag.components) &&
                std::all_of(in.begin(), in.end(), [](int d) { return d <= 1; });
  if (forest) {
    tag.rooted_forest = true;
    for (int i = 0; i < n; ++i) {
      if (in[i] == 0) tag.roots.push_back(i);
    }
  }

  // Oriented cycle: one component, every vertex with in- and out-degree 1.
  if (tag.components == 1 &&
      std::all_of(in.begin(), in.end(), [](int d) { return d == 1; }) &&
      std::all_of(out.begin(), out.end(), [](int d) { return d == 1; })) {
    tag.kind = FamilyKind::OrientedCycle;
    tag.notes.push_back("every vertex has in-degree 1 and out-degree 1 on a single component");
    return tag;
  }

  // Star shapes need at least two edges, every vertex on the star, and a
  // single component.
  if (e >= 2 && e == n - 1 && tag.components == 1) {
    for (int c = 0; c < n; ++c) {
      if (out[c] == n - 1 && in[c] == 0) {
        tag.kind = FamilyKind::OutStar;
        tag.notes.push_back("all edges point from center '" + g.vertex(c).id + "' outward");
        return tag;
      }
      if (in[c] == n - 1 && out[c] == 0) {
        tag.kind = FamilyKind::InStar;
        tag.notes.push_back("all edges point into center '" + g.vertex(c).id + "'");
        return tag;
      }
      // Mixed star: one edge a -> c, and c -> every other vertex.
      if (in[c] == 1 && out[c] == n - 2) {
        bool leaves_ok = true;
        int a = -1;
        for (const auto& [u, v] : g.edges()) {
          if (v == c) a = u;
        }
        for (int i = 0; i < n && leaves_ok; ++i) {
          if (i == c) continue;
          if (i == a) {
            leaves_ok = (in[i] == 0 && out[i] == 1);
          } else {
            leaves_ok = (in[i] == 1 && out[i] == 0);
          }
        }
        if (leaves_ok) {
          tag.kind = FamilyKind::MixedStar;
          tag.notes.push_back("center '" + g.vertex(c).id +
                              "' has one incoming edge and edges to all other vertices");
          if (tag.rooted_forest) {
            tag.notes.push_back("also a rooted tree; star formula takes precedence");
          }
          return tag;
        }
      }
    }
  }

  if (forest) {
    tag.kind = FamilyKind::RootedForest;
    std::string roots = "roots:";
    for (int r : tag.roots) roots += " " + g.vertex(r).id;
    tag.notes.push_back("underlying forest with all edges oriented away from " + roots);
    return tag;
  }

  tag.kind = FamilyKind::Other;
  tag.notes.push_back("no closed-form family matches");
  return tag;
}

NormalizeResult normalize_source_weights(const WeightedOrientedGraph& g) {
  std::vector<int> in = g.in_degrees();
  std::vector<Vertex> vertices = g.vertices();
  std::vector<std::string> warnings;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (in[i] == 0 && vertices[i].weight != 1) {
      warnings.push_back("source vertex '" + vertices[i].id + "' weight " +
                         std::to_string(vertices[i].weight) +
                         " normalized to 1 (source weights never enter the edge ideal)");
      vertices[i].weight = 1;
    }
  }
  return NormalizeResult{WeightedOrientedGraph(std::move(vertices), g.edges()),
                         std::move(warnings)};
}

EdgeIdealResult edge_ideal(const WeightedOrientedGraph& g) {
  if (g.edge_count() == 0) {
    throw ValidationError("graph has no edges; its edge ideal is zero");
  }
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges()) {
    long long w = g.vertex(v).weight;
    if (w > std::numeric_limits<int>::max()) {
      throw ValidationError("weight of '" + g.vertex(v).id +
                            "' too large for an exponent");
    }
    std::vector<int> exps(n, 0);
    exps[u] += 1;
    exps[v] += static_cast<int>(w);
    gens.emplace_back(std::move(exps));
  }
  std::size_t before = gens.size();
  MonomialIdeal ideal(g.variable_set(), std::move(gens));

  std::vector<std::string> warnings;
  std::vector<bool> covered(n, false);
  for (const auto& [u, v] : g.edges()) covered[u] = covered[v] = true;
  for (int i = 0; i < n; ++i) {
    if (!covered[i]) {
      warnings.push_back("isolated vertex '" + g.vertex(i).id +
                         "' stays in the ambient ring (lowers projective "
                         "dimension pressure on depth)");
    }
  }
  if (ideal.generators().size() != before) {
    warnings.push_back("minimalization dropped " +
                       std::to_string(before - ideal.generators().size()) +
                       " redundant edge generator(s)");
  }
  return EdgeIdealResult{std::move(ideal), std::move(warnings)};
}

namespace {

using nlohmann::json;

long long require_weight(const json& w, const std::string& id) {
  if (!w.is_number_integer()) {
    throw ValidationError("weight of vertex '" + id + "' must be an integer");
  }
  return w.get<long long>();
}

WeightedOrientedGraph graph_from_parts(
    std::vector<Vertex> vertices,
    const std::vector<std::pair<std::string, std::string>>& edge_ids) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!index.emplace(vertices[i].id, i).second) {
      throw ValidationError("duplicate vertex id '" + vertices[i].id + "'");
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_ids.size());
  for (const auto& [u, v] : edge_ids) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end()) {
      throw ValidationError("edge references unknown vertex '" + u + "'");
    }
    if (iv == index.end()) {
      throw ValidationError("edge references unknown vertex '" + v + "'");
    }
    edges.emplace_back(iu->second, iv->second);
  }
  return WeightedOrientedGraph(std::move(vertices), std::move(edges));
}

}  // namespace

WeightedOrientedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    std::size_t pos = err.byte > 0 ? err.byte - 1 : 0;
    throw ParseError(std::string("invalid JSON: ") + err.what(), pos);
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw ValidationError(
        "graph JSON must be an object with 'vertices' and 'edges'");
  }
  if (!doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw ValidationError("'vertices' and 'edges' must be arrays");
  }
  std::vector<Vertex> vertices;
  for (const json& v : doc["vertices"]) {
    if (v.is_string()) {
      vertices.push_back(Vertex{v.get<std::string>(), 1});
      continue;
    }
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) {
      throw ValidationError("each vertex must be {\"id\": ..., \"w\": ...}");
    }
    Vertex vert{v["id"].get<std::string>(), 1};
    if (v.contains("w")) vert.weight = require_weight(v["w"], vert.id);
    for (const auto& [key, _] : v.items()) {
      if (key != "id" && key != "w") {
        throw ValidationError("unknown vertex key '" + key +
                              "' (expected \"id\" and optional \"w\")");
      }
    }
    vertices.push_back(std::move(vert));
  }
  std::vector<std::pair<std::string, std::string>> edge_ids;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ValidationError("each edge must be a two-element array of vertex ids");
    }
    edge_ids.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return graph_from_parts(std::move(vertices), edge_ids);
}

namespace {

struct EdgeListBuilder {
  std::vector<Vertex> vertices;
  std::map<std::string, int> index;
  std::set<std::string> weight_declared;
  std::vector<std::pair<std::string, std::string>> edges;

  int declare(const std::string& id, std::size_t pos) {
    if (!VarSet::valid_name(id)) {
      throw ParseError("invalid vertex id '" + id + "'", pos);
    }
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    int i = static_cast<int>(vertices.size());
    vertices.push_back(Vertex{id, 1});
    index.emplace(id, i);
    return i;
  }
};

struct StmtCursor {
  std::string_view text;  // full input
  std::size_t pos;
  std::size_t end;

  void skip_ws() {
    while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= end;
  }
  char peek() const { return pos < end ? text[pos] : '\0'; }

  std::string read_name() {
    std::size_t start = pos;
    while (pos < end) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos;
      } else {
        break;
      }
    }
    if (start == pos) throw ParseError("expected a name", start);
    return std::string(text.substr(start, pos - start));
  }

  long long read_integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected an integer", pos);
    }
    long long v = 0;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > std::numeric_limits<int>::max()) {
        throw ParseError("weight too large", start);
      }
      ++pos;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }
};

void parse_statement(std::string_view text, std::size_t start, std::size_t end,
                     EdgeListBuilder& b) {
  StmtCursor cur{text, start, end};
  if (cur.done()) return;
  std::size_t name_pos = cur.pos;
  std::string first = cur.read_name();

  // Weight statement: w ( vertex ) = integer
  if (first == "w") {
    cur.skip_ws();
    if (cur.peek() == '(') {
      ++cur.pos;
      cur.skip_ws();
      std::size_t vpos = cur.pos;
      std::string id = cur.read_name();
      cur.expect(')');
      cur.expect('=');
      long long w = cur.read_integer();
      if (!cur.done()) {
        throw ParseError("unexpected trailing characters in statement", cur.pos);
      }
      if (w < 1) {
        throw ParseError("weight of '" + id + "' must be >= 1", vpos);
      }
      int vi = b.declare(id, vpos);
      if (!b.weight_declared.insert(id).second) {
        throw ParseError("weight of '" + id + "' declared twice", vpos);
      }
      b.vertices[vi].weight = w;
      return;
    }
  }

  if (cur.done()) {
    b.declare(first, name_pos);  // bare vertex declaration
    return;
  }

  // Edge statement: u -> v
  cur.skip_ws();
  if (cur.peek() == '-') {
    ++cur.pos;
    if (cur.peek() != '>') {
      throw ParseError("expected '->'", cur.pos);
    }
    ++cur.pos;
    cur.skip_ws();
    std::size_t tpos = cur.pos;
    std::string target = cur.read_name();
    if (!cur.done()) {
      throw ParseError("unexpected trailing characters in statement", cur.pos);
    }
    b.declare(first, name_pos);
    b.declare(target, tpos);
    if (first == target) {
      throw ParseError("loop at vertex '" + first + "' is not allowed", name_pos);
    }
    for (const auto& [u, v] : b.edges) {
      if (u == first && v == target) {
        throw ParseError("duplicate edge " + first + " -> " + target, name_pos);
      }
      if (u == target && v == first) {
        throw ParseError("anti-parallel pair between '" + first + "' and '" +
                             target + "' is not allowed",
                         name_pos);
      }
    }
    b.edges.emplace_back(first, target);
    return;
  }
  throw ParseError("expected '->', 'w(...)=...', or end of statement", cur.pos);
}

}  // namespace

WeightedOrientedGraph parse_edge_list(std::string_view text) {
  // Strip comments: '#' to end of line (offsets preserved by substitution).
  std::string clean(text);
  bool in_comment = false;
  for (char& c : clean) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (in_comment) c = ' ';
  }

  EdgeListBuilder b;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= clean.size(); ++i) {
    if (i == clean.size() || clean[i] == '\n' || clean[i] == ';') {
      parse_statement(clean, start, i, b);
      start = i + 1;
    }
  }
  if (b.vertices.empty()) {
    throw ValidationError("graph needs at least one vertex");
  }
  return graph_from_parts(std::move(b.vertices), b.edges);
}

WeightedOrientedGraph parse_graph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_graph_json(text);
    break;
  }
  return parse_edge_list(text);
}

std::string to_json_string(const WeightedOrientedGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const Vertex& v : g.vertices()) {
    doc["vertices"].push_back({{"id", v.id}, {"w", v.weight}});
  }
  doc["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) {
    doc["edges"].push_back({g.vertex(u).id, g.vertex(v).id});
  }
  return doc.dump(2) + "\n";
}

std::string to_edge_list(const WeightedOrientedGraph& g) {
  std::string out;
  for (const Vertex& v : g.vertices()) {
    if (v.weight == 1) {
      out += v.id;
    } else {
      out += "w(" + v.id + ")=" + std::to_string(v.weight);
    }
    out += '\n';
  }
  for (const auto& [u, v] : g.edges()) {
    out += g.vertex(u).id + " -> " + g.vertex(v).id + "\n";
  }
  return out;
}

}  // namespace edgeideal
