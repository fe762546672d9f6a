#include "edgeideal/sweep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "edgeideal/betti.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/splitting.hpp"

namespace edgeideal {

std::vector<std::vector<int>> rooted_trees(int nodes) {
  std::vector<std::vector<int>> out;
  if (nodes <= 0) return out;
  if (nodes == 1) {
    out.push_back({-1});
    return out;
  }
  // Level-sequence enumeration: start from the path and repeatedly flatten
  // the last vertex deeper than level 2 onto a shallower copy of its prefix.
  std::vector<int> level(nodes);
  std::iota(level.begin(), level.end(), 1);  // 1, 2, ..., n
  auto emit = [&]() {
    std::vector<int> parent(nodes, -1);
    for (int i = 1; i < nodes; ++i) {
      for (int j = i - 1; j >= 0; --j) {
        if (level[j] == level[i] - 1) {
          parent[i] = j;
          break;
        }
      }
    }
    out.push_back(std::move(parent));
  };
  emit();
  while (true) {
    int p = -1;
    for (int i = nodes - 1; i >= 1; --i) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (level[i] == level[p] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < nodes; ++i) level[i] = level[i - (p - q)];
    emit();
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> rooted_forests(int edges) {
  std::vector<std::vector<std::vector<int>>> out;
  if (edges <= 0) return out;
  // Catalog of component candidates: all trees with 1..edges edges.
  std::vector<std::vector<int>> catalog;
  std::vector<int> catalog_edges;
  for (int e = 1; e <= edges; ++e) {
    for (auto& tree : rooted_trees(e + 1)) {
      catalog.push_back(std::move(tree));
      catalog_edges.push_back(e);
    }
  }
  // Multisets: non-decreasing catalog indices summing to `edges`.
  std::vector<std::vector<int>> current;
  std::function<void(std::size_t, int)> descend = [&](std::size_t start, int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < catalog.size(); ++i) {
      if (catalog_edges[i] > left) continue;
      current.push_back(catalog[i]);
      descend(i, left - catalog_edges[i]);
      current.pop_back();
    }
  };
  descend(0, edges);
  return out;
}

WeightedOrientedGraph make_cycle(const std::vector<long long>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  std::vector<Vertex> verts;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    verts.push_back(Vertex{"x" + std::to_string(i + 1), weights[i]});
    edges.emplace_back(i, (i + 1) % n);
  }
  return WeightedOrientedGraph(std::move(verts), std::move(edges));
}

WeightedOrientedGraph make_star(FamilyKind kind, int n,
                                const std::vector<long long>& w) {
  if (n < 3) throw ValidationError("a star needs at least 3 vertices");
  std::vector<Vertex> verts;
  std::vector<std::pair<int, int>> edges;
  auto name = [](int i) { return "x" + std::to_string(i + 1); };
  switch (kind) {
    case FamilyKind::OutStar: {
      if (static_cast<int>(w.size()) != n - 1) {
        throw ValidationError("out-star expects one weight per leaf");
      }
      verts.push_back(Vertex{name(0), 1});
      for (int i = 1; i < n; ++i) {
        verts.push_back(Vertex{name(i), w[i - 1]});
        edges.emplace_back(0, i);
      }
      break;
    }
    case FamilyKind::InStar: {
      if (w.size() != 1) {
        throw ValidationError("in-star expects exactly the center weight");
      }
      verts.push_back(Vertex{name(0), w[0]});
      for (int i = 1; i < n; ++i) {
        verts.push_back(Vertex{name(i), 1});
        edges.emplace_back(i, 0);
      }
      break;
    }
    case FamilyKind::MixedStar: {
      if (static_cast<int>(w.size()) != n - 1) {
        throw ValidationError(
            "mixed star expects weights for the center and each outer leaf");
      }
      verts.push_back(Vertex{name(0), 1});        // source leaf
      verts.push_back(Vertex{name(1), w[0]});     // center
      edges.emplace_back(0, 1);
      for (int i = 2; i < n; ++i) {
        verts.push_back(Vertex{name(i), w[i - 1]});
        edges.emplace_back(1, i);
      }
      break;
    }
    default:
      throw ValidationError("make_star expects a star family kind");
  }
  return WeightedOrientedGraph(std::move(verts), std::move(edges));
}

WeightedOrientedGraph forest_graph(const std::vector<std::vector<int>>& trees,
                                   const std::vector<long long>& nonroot_weights) {
  std::vector<Vertex> verts;
  std::vector<std::pair<int, int>> edges;
  std::size_t wi = 0;
  int offset = 0;
  for (const auto& parent : trees) {
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
      long long weight = 1;
      if (parent[i] >= 0) {
        if (wi >= nonroot_weights.size()) {
          throw ValidationError("forest_graph: one weight per non-root needed");
        }
        weight = nonroot_weights[wi++];
        edges.emplace_back(offset + parent[i], offset + i);
      }
      verts.push_back(Vertex{"x" + std::to_string(offset + i + 1), weight});
    }
    offset += static_cast<int>(parent.size());
  }
  if (wi != nonroot_weights.size()) {
    throw ValidationError("forest_graph: too many weights supplied");
  }
  return WeightedOrientedGraph(std::move(verts), std::move(edges));
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealOptions& opts) {
  const int nvars = 1 + static_cast<int>(rng() % opts.max_vars);
  const int ngens = 1 + static_cast<int>(rng() % opts.max_gens);
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  std::vector<Monomial> gens;
  for (int g = 0; g < ngens; ++g) {
    std::vector<int> exps(nvars);
    for (int v = 0; v < nvars; ++v) {
      exps[v] = static_cast<int>(rng() % (opts.max_exp + 1));
    }
    Monomial m{std::move(exps)};
    if (m.is_constant()) {
      int v = static_cast<int>(rng() % nvars);
      int e = 1 + static_cast<int>(rng() % opts.max_exp);
      m = Monomial::variable(nvars, v, e);
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(VarSet::make(std::move(names)), std::move(gens));
}

namespace {

// Odometer over weight tuples; calls fn for every element of weights^k.
void for_each_tuple(const std::vector<long long>& weights, int k,
                    const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> tuple(k, weights.front());
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    fn(tuple);
    int pos = k - 1;
    while (pos >= 0) {
      if (++idx[pos] < weights.size()) {
        tuple[pos] = weights[idx[pos]];
        break;
      }
      idx[pos] = 0;
      tuple[pos] = weights.front();
      --pos;
    }
    if (pos < 0) break;
  }
}

std::string weights_string(const WeightedOrientedGraph& g) {
  std::string s = "(";
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.vertex(i).weight);
  }
  return s + ")";
}

struct SweepRunner {
  const SweepOptions& opts;
  SweepResult result;

  explicit SweepRunner(const SweepOptions& o) : opts(o) {}

  void note_counterexample(const std::string& text) {
    if (static_cast<int>(result.counterexamples.size()) < opts.counterexample_limit) {
      result.counterexamples.push_back(text);
    }
  }

  void visit(const WeightedOrientedGraph& g, const std::string& label) {
    ++result.instances;
    InvariantReport formula = formula_invariants(g);
    OracleOptions oracle_opts{opts.generator_cap, opts.field_char};
    BettiTable table = betti_table(edge_ideal(g).ideal, oracle_opts);
    Invariants oracle = invariants_from_table(table);
    bool match = formula.pd == oracle.pd && formula.reg == oracle.reg &&
                 formula.depth == oracle.depth;
    if (!formula.hypothesis_ok) ++result.hypothesis_instances;
    if (match) {
      ++result.matches;
    } else {
      std::ostringstream msg;
      msg << label << " w=" << weights_string(g) << ": formula pd=" << formula.pd
          << " reg=" << formula.reg << " depth=" << formula.depth
          << ", oracle pd=" << oracle.pd << " reg=" << oracle.reg
          << " depth=" << oracle.depth;
      if (formula.hypothesis_ok) {
        ++result.mismatches;
      } else {
        ++result.hypothesis_mismatches;
        msg << " [outside theorem hypotheses]";
      }
      note_counterexample(msg.str());
    }
    if (opts.certify && formula.hypothesis_ok) {
      SplitOptions split_opts;
      split_opts.node_budget = opts.node_budget;
      split_opts.generator_cap = opts.generator_cap;
      split_opts.field_char = opts.field_char;
      split_opts.verify_splits = true;
      try {
        SplittingCertificate cert = family_certificate(g, split_opts);
        ++result.certificates;
        result.split_nodes_checked += cert.splits_verified;
        long long fails = static_cast<long long>(cert.verification_failures.size());
        result.split_failures += fails;
        if (fails > 0) {
          note_counterexample(label + " w=" + weights_string(g) + ": " +
                              cert.verification_failures.front());
        }
      } catch (const CertificateMismatchError& err) {
        ++result.certificate_failures;
        note_counterexample(label + " w=" + weights_string(g) + ": " + err.what());
      }
    }
  }

  void run() {
    switch (opts.family) {
      case SweepFamily::Cycle: {
        for (int n = opts.n_min; n <= opts.n_max; ++n) {
          for_each_tuple(opts.weights, n, [&](const std::vector<long long>& w) {
            visit(make_cycle(w), "cycle n=" + std::to_string(n));
          });
        }
        break;
      }
      case SweepFamily::Star: {
        for (int n = opts.n_min; n <= opts.n_max; ++n) {
          for (FamilyKind kind :
               {FamilyKind::OutStar, FamilyKind::InStar, FamilyKind::MixedStar}) {
            int k = kind == FamilyKind::InStar ? 1 : n - 1;
            for_each_tuple(opts.weights, k, [&](const std::vector<long long>& w) {
              visit(make_star(kind, n, w),
                    family_name(kind) + " n=" + std::to_string(n));
            });
          }
        }
        break;
      }
      case SweepFamily::Forest: {
        for (int e = 1; e <= opts.max_edges; ++e) {
          auto shapes = rooted_forests(e);
          for (std::size_t s = 0; s < shapes.size(); ++s) {
            for_each_tuple(opts.weights, e, [&](const std::vector<long long>& w) {
              visit(forest_graph(shapes[s], w),
                    "forest e=" + std::to_string(e) + " shape=" + std::to_string(s));
            });
          }
        }
        break;
      }
    }
  }
};

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
  if (opts.weights.empty()) {
    throw ValidationError("sweep needs a non-empty weight set");
  }
  for (long long w : opts.weights) {
    if (w < 1) throw ValidationError("sweep weights must be >= 1");
  }
  if (opts.family != SweepFamily::Forest && opts.n_min < 3) {
    throw ValidationError("cycles and stars need n >= 3");
  }
  if (opts.family == SweepFamily::Forest && opts.max_edges < 1) {
    throw ValidationError("forest sweep needs max edges >= 1");
  }
  if (opts.family == SweepFamily::Forest && opts.max_edges > opts.generator_cap) {
    throw ValidationError("forest sweep bound exceeds the generator cap");
  }
  if (opts.family != SweepFamily::Forest && opts.n_max > opts.generator_cap) {
    throw ValidationError("sweep bound exceeds the generator cap");
  }
  SweepRunner runner(opts);
  runner.run();
  return runner.result;
}

}  // namespace edgeideal
