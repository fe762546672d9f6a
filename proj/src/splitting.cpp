#include "edgeideal/splitting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "edgeideal/errors.hpp"
#include "edgeideal/polarize.hpp"
#include "edgeideal/textio.hpp"

namespace edgeideal {

std::string cert_kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::Principal:
      return "principal";
    case CertKind::Oracle:
      return "oracle";
    case CertKind::Disjoint:
      return "disjoint-sum";
    case CertKind::Coprime:
      return "coprime-scale";
    case CertKind::Split:
      return "split";
  }
  return "?";
}

std::optional<std::pair<Monomial, int>> find_split(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.size() < 2) {
    throw ValidationError("find_split needs at least two generators");
  }
  for (int v = 0; v < ideal.nvars(); ++v) {
    int count = 0;
    int which = -1;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      if (gens[g].exponent(v) > 0) {
        ++count;
        which = g;
        if (count > 1) break;
      }
    }
    if (count == 1) {
      return std::make_pair(gens[which], v);
    }
  }
  return std::nullopt;
}

SplittingCheck verify_splitting(const MonomialIdeal& I, const MonomialIdeal& J,
                                const MonomialIdeal& K, const OracleOptions& opts) {
  if (!same_ambient(I.ambient(), J.ambient()) ||
      !same_ambient(I.ambient(), K.ambient())) {
    throw ValidationError("verify_splitting: ideals live in different ambients");
  }
  std::vector<Monomial> merged = J.generators();
  merged.insert(merged.end(), K.generators().begin(), K.generators().end());
  std::sort(merged.begin(), merged.end(), degree_lex_less);
  if (merged != I.generators()) {
    throw ValidationError(
        "verify_splitting: generators of J and K must partition those of I");
  }

  BettiTable ti = betti_table(I, opts);
  BettiTable tj = betti_table(J, opts);
  BettiTable tk = betti_table(K, opts);
  BettiTable tm = betti_table(intersect_ideal(J, K), opts);

  std::set<std::pair<long long, long long>> keys;
  for (const auto& [k, c] : ti.entries) {
    (void)c;
    keys.insert(k);
  }
  for (const auto& [k, c] : tj.entries) {
    (void)c;
    keys.insert(k);
  }
  for (const auto& [k, c] : tk.entries) {
    (void)c;
    keys.insert(k);
  }
  for (const auto& [k, c] : tm.entries) {
    (void)c;
    keys.insert({k.first + 1, k.second});
  }

  auto lookup = [](const BettiTable& t, long long i, long long j) -> long long {
    auto it = t.entries.find({i, j});
    return it == t.entries.end() ? 0 : it->second;
  };

  SplittingCheck check;
  for (const auto& [i, j] : keys) {
    long long lhs = lookup(ti, i, j);
    long long bj = lookup(tj, i, j);
    long long bk = lookup(tk, i, j);
    long long bm = i >= 1 ? lookup(tm, i - 1, j) : 0;  // beta_{-1,j} = 0
    long long rhs = bj + bk + bm;
    std::ostringstream row;
    row << "beta(" << i << "," << j << "): I=" << lhs << " J=" << bj
        << " K=" << bk << " JnK[i-1]=" << bm << " sum=" << rhs
        << (lhs == rhs ? "" : "  MISMATCH");
    check.rows.push_back(row.str());
    if (lhs != rhs) {
      check.ok = false;
      check.failures.push_back(check.rows.back());
    }
  }
  return check;
}

namespace {

// Partition generator indices into support-connected groups, ordered by
// smallest generator index.
std::vector<std::vector<int>> support_components(const std::vector<Monomial>& gens,
                                                 int nvars) {
  const int m = static_cast<int>(gens.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < nvars; ++v) {
    int first = -1;
    for (int g = 0; g < m; ++g) {
      if (gens[g].exponent(v) > 0) {
        if (first < 0) {
          first = g;
        } else {
          parent[find(g)] = find(first);
        }
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int g = 0; g < m; ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<int>> out;
  std::vector<std::pair<int, int>> order;  // (smallest member, root)
  for (auto& [root, members] : groups) {
    order.emplace_back(members.front(), root);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [first, root] : order) {
    (void)first;
    out.push_back(std::move(groups[root]));
  }
  return out;
}

// The largest monomial dividing every generator such that stripping it
// leaves the stripped variables unused: u has exponent e at v only when
// every generator has exactly exponent e > 0 at v.
Monomial full_common_factor(const std::vector<Monomial>& gens, int nvars) {
  std::vector<int> exps(nvars, 0);
  for (int v = 0; v < nvars; ++v) {
    int e = gens.front().exponent(v);
    if (e == 0) continue;
    bool same = true;
    for (const Monomial& g : gens) {
      if (g.exponent(v) != e) {
        same = false;
        break;
      }
    }
    if (same) exps[v] = e;
  }
  return Monomial(std::move(exps));
}

struct Evaluator {
  const SplitOptions& opts;
  SplittingCertificate cert;
  OracleOptions oracle_opts;

  explicit Evaluator(const SplitOptions& o) : opts(o) {
    oracle_opts.generator_cap = o.generator_cap;
    oracle_opts.field_char = o.field_char;
  }

  std::unique_ptr<CertNode> eval(const MonomialIdeal& ideal, int depth) {
    if (ideal.is_zero()) {
      throw ZeroIdealError("cannot evaluate the zero ideal");
    }
    if (++cert.node_count > opts.node_budget) {
      throw LimitError("splitting recursion exceeded the node budget of " +
                       std::to_string(opts.node_budget));
    }
    cert.height = std::max(cert.height, depth);
    const auto& gens = ideal.generators();

    std::unique_ptr<CertNode> node;
    if (gens.size() == 1) {
      node = std::make_unique<CertNode>(CertKind::Principal, ideal);
      node->pd = 0;
      node->reg = gens.front().degree();
    } else if (auto comps = support_components(gens, ideal.nvars());
               comps.size() > 1) {
      node = std::make_unique<CertNode>(CertKind::Disjoint, ideal);
      long long k = static_cast<long long>(comps.size());
      for (const auto& group : comps) {
        std::vector<Monomial> part;
        for (int gi : group) part.push_back(gens[gi]);
        node->children.push_back(eval(MonomialIdeal(ideal.ambient(), part), depth + 1));
      }
      for (const auto& child : node->children) {
        node->pd += child->pd;
        node->reg += child->reg;
      }
      node->pd += k - 1;
      node->reg -= k - 1;
    } else if (auto split = find_split(ideal)) {
      const auto& [g, v] = *split;
      std::vector<Monomial> rest;
      for (const Monomial& gen : gens) {
        if (!(gen == g)) rest.push_back(gen);
      }
      MonomialIdeal K(ideal.ambient(), rest);
      MonomialIdeal J(ideal.ambient(), {g});
      MonomialIdeal M = intersect_ideal(J, K);

      node = std::make_unique<CertNode>(CertKind::Split, ideal);
      node->split_generator = g;
      node->witness_var = v;
      ++cert.split_count;
      if (opts.verify_splits) {
        SplittingCheck check = verify_splitting(ideal, J, K, oracle_opts);
        ++cert.splits_verified;
        if (!check.ok) {
          std::string msg =
              "splitting identity failed at " + to_string(ideal) + ":";
          for (const std::string& f : check.failures) msg += " " + f;
          cert.verification_failures.push_back(msg);
        }
      }
      node->children.push_back(eval(K, depth + 1));
      node->children.push_back(eval(M, depth + 1));
      node->pd = std::max({0LL, node->children[0]->pd, node->children[1]->pd + 1});
      node->reg = std::max({g.degree(), node->children[0]->reg,
                            node->children[1]->reg - 1});
    } else if (Monomial u = full_common_factor(gens, ideal.nvars());
               !u.is_constant()) {
      std::vector<Monomial> stripped;
      for (const Monomial& gen : gens) stripped.push_back(gen.divided_by(u));
      node = std::make_unique<CertNode>(CertKind::Coprime, ideal);
      node->coprime_factor = u;
      node->children.push_back(
          eval(MonomialIdeal(ideal.ambient(), stripped), depth + 1));
      node->pd = node->children[0]->pd;
      node->reg = node->children[0]->reg + u.degree();
    } else {
      node = std::make_unique<CertNode>(CertKind::Oracle, ideal);
      BettiTable table = betti_table(ideal, oracle_opts);
      node->pd = table.pd();
      node->reg = table.reg();
      ++cert.oracle_fallbacks;
    }

    if (opts.verify_nodes) {
      BettiTable table = betti_table(ideal, oracle_opts);
      ++cert.nodes_verified;
      if (table.pd() != node->pd || table.reg() != node->reg) {
        cert.verification_failures.push_back(
            "node values (pd=" + std::to_string(node->pd) +
            ", reg=" + std::to_string(node->reg) + ") disagree with oracle (pd=" +
            std::to_string(table.pd()) + ", reg=" + std::to_string(table.reg()) +
            ") at " + to_string(ideal));
      }
    }
    return node;
  }
};

}  // namespace

SplittingCertificate split_eval(const MonomialIdeal& ideal, const SplitOptions& opts) {
  if (opts.node_budget <= 0 || opts.generator_cap <= 0) {
    throw ValidationError("node budget and generator cap must be positive");
  }
  Evaluator ev(opts);
  ev.cert.root = ev.eval(ideal, 1);
  return std::move(ev.cert);
}

std::vector<const CertNode*> certificate_spine(const SplittingCertificate& cert) {
  std::vector<const CertNode*> spine;
  const CertNode* node = cert.root.get();
  while (node && node->kind == CertKind::Split) {
    spine.push_back(node);
    node = node->children[1].get();
  }
  return spine;
}

namespace {

// Reorders a cycle's vertices to follow the edges starting from the first
// declared vertex, so the evaluator's variable-order tie-breaks walk the
// cycle in order.
WeightedOrientedGraph cycle_ordered(const WeightedOrientedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> succ(n, -1);
  for (const auto& [u, v] : g.edges()) succ[u] = v;
  std::vector<int> seq;
  int at = 0;
  for (int i = 0; i < n; ++i) {
    seq.push_back(at);
    at = succ[at];
  }
  std::vector<Vertex> verts;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) verts.push_back(g.vertex(seq[i]));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return WeightedOrientedGraph(std::move(verts), std::move(edges));
}

}  // namespace

SplittingCertificate family_certificate(const WeightedOrientedGraph& graph,
                                        const SplitOptions& opts) {
  FamilyTag tag = classify(graph);
  if (tag.kind == FamilyKind::Other) {
    throw ValidationError(
        "family_certificate handles stars, rooted forests, and oriented cycles only");
  }
  InvariantReport report = formula_invariants(graph);
  if (!report.hypothesis_ok) {
    throw ValidationError(
        "family_certificate requires the theorem hypotheses: normalized "
        "source weights and all other weights >= 2");
  }

  const bool is_cycle = tag.kind == FamilyKind::OrientedCycle;
  WeightedOrientedGraph ordered = is_cycle ? cycle_ordered(graph) : graph;

  MonomialIdeal ideal = edge_ideal(ordered).ideal;
  PolarizedIdeal poly = polarize(ideal);
  SplittingCertificate cert = split_eval(poly.ideal, opts);

  std::vector<std::string> diffs;
  auto expect = [&diffs](long long got, long long want, const std::string& what) {
    if (got != want) {
      diffs.push_back(what + ": certificate " + std::to_string(got) +
                      " != expected " + std::to_string(want));
    }
  };

  expect(cert.root->pd, report.pd, "root pd");
  expect(cert.root->reg, report.reg, "root reg");

  const long long e = ordered.edge_count();
  if (tag.rooted_forest && tag.components == 1 && e >= 2) {
    if (cert.root->kind != CertKind::Split) {
      diffs.push_back("tree root expected a split node, got " +
                      cert_kind_name(cert.root->kind));
    } else {
      expect(cert.root->children[0]->pd, e - 2, "tree top-split K child pd");
      expect(cert.root->children[1]->pd, e - 2, "tree top-split JnK child pd");
    }
  }

  if (is_cycle) {
    const int n = ordered.vertex_count();
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) w[i] = ordered.vertex(i).weight;
    std::vector<long long> suffix(n + 1, 0);  // suffix[i] = w_i + ... + w_{n-1} (0-based)
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + w[i];

    std::vector<const CertNode*> spine = certificate_spine(cert);
    expect(static_cast<long long>(spine.size()), n - 1, "cycle spine split count");
    long long prev_deg = 0;
    for (std::size_t k = 0; k < spine.size(); ++k) {
      const long long i = static_cast<long long>(k) + 1;  // 1-based chain index
      const CertNode* node = spine[k];
      std::string at = "spine node " + std::to_string(i);
      const long long gdeg = node->split_generator->degree();
      expect(gdeg - prev_deg, i == 1 ? w[0] + 1 : w[k], at + " fresh generator degree");
      expect(node->pd, n - i, at + " pd");
      if (i >= 2) {
        // reg(L_i) = w_i + ... + w_n - (n - i + 1), shifted by the degree of
        // the factor accumulated along the chain.
        expect(node->reg, suffix[k] - (n - i + 1) + prev_deg, at + " reg");
      }
      if (!node->children.empty()) {
        expect(node->children[0]->pd, n - i - 1, at + " K child pd");
      }
      prev_deg = gdeg;
    }
    if (!spine.empty()) {
      const CertNode* tail = spine.back()->children[1].get();
      if (tail->kind != CertKind::Principal) {
        diffs.push_back("cycle spine must end in a principal leaf, got " +
                        cert_kind_name(tail->kind));
      }
    }
  }

  if (!diffs.empty()) {
    std::string msg = "certificate disagrees with the closed formulas:";
    for (const std::string& d : diffs) msg += "\n  - " + d;
    throw CertificateMismatchError(msg);
  }
  return cert;
}

namespace {

void render_node(const CertNode& node, const std::string& indent,
                 const std::string& label, std::string& out) {
  out += indent + label + cert_kind_name(node.kind) +
         "  pd=" + std::to_string(node.pd) + "  reg=" + std::to_string(node.reg) +
         "  " + to_string(node.ideal) + "\n";
  const VarSet& vars = *node.ideal.ambient();
  std::string inner = indent + "  ";
  if (node.kind == CertKind::Split) {
    out += inner + "g = " + to_string(*node.split_generator, vars) +
           ", witness = " + vars.name(node.witness_var) + "\n";
    render_node(*node.children[0], inner, "[K] ", out);
    render_node(*node.children[1], inner, "[JnK] ", out);
  } else if (node.kind == CertKind::Coprime) {
    out += inner + "factor = " + to_string(*node.coprime_factor, vars) + "\n";
    render_node(*node.children[0], inner, "[core] ", out);
  } else if (node.kind == CertKind::Disjoint) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      render_node(*node.children[i], inner,
                  "[part " + std::to_string(i + 1) + "] ", out);
    }
  }
}

}  // namespace

std::string render_certificate_text(const SplittingCertificate& cert) {
  std::string out = "splitting certificate: nodes=" + std::to_string(cert.node_count) +
                    " splits=" + std::to_string(cert.split_count) +
                    " oracle-fallbacks=" + std::to_string(cert.oracle_fallbacks) +
                    " height=" + std::to_string(cert.height);
  std::vector<const CertNode*> spine = certificate_spine(cert);
  if (!spine.empty()) {
    out += " spine-splits=" + std::to_string(spine.size());
  }
  out += "\n";
  if (cert.splits_verified > 0 || cert.nodes_verified > 0) {
    out += "verification: splits-checked=" + std::to_string(cert.splits_verified) +
           " nodes-checked=" + std::to_string(cert.nodes_verified) + " failures=" +
           std::to_string(cert.verification_failures.size()) + "\n";
    for (const std::string& f : cert.verification_failures) {
      out += "  FAIL " + f + "\n";
    }
  }
  render_node(*cert.root, "", "", out);
  return out;
}

}  // namespace edgeideal
