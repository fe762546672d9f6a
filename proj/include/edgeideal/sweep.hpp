#pragma once

#include <random>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/ideal.hpp"

namespace edgeideal {

enum class SweepFamily { Forest, Cycle, Star };

struct SweepOptions {
  SweepFamily family = SweepFamily::Cycle;
  int n_min = 3;      // cycles and stars: vertex count range
  int n_max = 5;
  int max_edges = 5;  // forests: all shapes with 1..max_edges edges
  std::vector<long long> weights = {2, 3};
  bool allow_hypothesis_fail = false;
  // Additionally build a splitting certificate per in-hypothesis instance
  // and verify the graded splitting identity at each of its split nodes.
  bool certify = false;
  long long field_char = 0;
  int generator_cap = 20;
  long long node_budget = 10000;
  int counterexample_limit = 10;
};

struct SweepResult {
  long long instances = 0;
  long long matches = 0;
  long long mismatches = 0;             // formula != oracle within hypotheses
  long long hypothesis_instances = 0;   // instances outside the theorems
  long long hypothesis_mismatches = 0;  // ... of which disagree with the oracle
  long long certificates = 0;
  long long certificate_failures = 0;
  long long split_nodes_checked = 0;
  long long split_failures = 0;
  std::vector<std::string> counterexamples;

  // Mismatches within the hypotheses always fail; outside them only when
  // `allow_hypothesis_fail` was not requested.
  bool ok(bool allow_hypothesis_fail) const {
    return mismatches == 0 && certificate_failures == 0 && split_failures == 0 &&
           (allow_hypothesis_fail || hypothesis_mismatches == 0);
  }
};

SweepResult run_sweep(const SweepOptions& opts);

// --- enumeration building blocks (exposed for tests) ---

// All unlabeled rooted trees with `nodes` vertices as parent arrays
// (index 0 is the root with parent -1), in canonical level-sequence order.
std::vector<std::vector<int>> rooted_trees(int nodes);

// All unlabeled rooted forests with exactly `edges` edges whose components
// each have at least one edge: multisets of trees, each tree a parent array.
std::vector<std::vector<std::vector<int>>> rooted_forests(int edges);

// Realizations with vertices x1, x2, ... in component order; roots and other
// sources get weight 1.
WeightedOrientedGraph make_cycle(const std::vector<long long>& weights);
WeightedOrientedGraph make_star(FamilyKind kind, int n,
                                const std::vector<long long>& nonsource_weights);
WeightedOrientedGraph forest_graph(const std::vector<std::vector<int>>& trees,
                                   const std::vector<long long>& nonroot_weights);

// Seeded random monomial ideal over x1..xk; generation draws straight from
// the engine so results are identical across platforms.
struct RandomIdealOptions {
  int max_vars = 4;
  int max_gens = 6;
  int max_exp = 3;
};
MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealOptions& opts = {});

}  // namespace edgeideal
