#pragma once

#include <string>
#include <vector>

#include "edgeideal/graph.hpp"
#include "edgeideal/ideal.hpp"

namespace edgeideal {

// Closed-form resolution invariants for a recognized family.  When
// hypothesis_ok is false the values are the formulas' extrapolations and are
// not backed by a theorem; callers must not treat them as proven.
struct InvariantReport {
  long long pd = 0;
  long long reg = 0;
  long long depth = 0;
  FamilyTag family;
  bool hypothesis_ok = true;
  std::vector<std::string> formula_refs;
};

// Star orientations (out-star, in-star, mixed star), weights normalized.
// Requires classify(D) to be one of the star kinds.
InvariantReport star_formula(const WeightedOrientedGraph& graph);

// Rooted forests, weights normalized.  Depth is #components + 1;
// single trees give 2.
InvariantReport forest_formula(const WeightedOrientedGraph& graph);

// Oriented cycles (no sources, so no normalization concerns).
InvariantReport cycle_formula(const WeightedOrientedGraph& graph);

// Dispatches on classify(D).  Throws ValidationError for family "other" or
// an edgeless graph.
InvariantReport formula_invariants(const WeightedOrientedGraph& graph);

// Variable-disjoint sums: pd = sum + (k-1), reg = sum - (k-1), depth by
// counting all ambient variables once.  `nvars` are the parts' ambient
// variable counts.  When `supports` is provided (one sorted index list per
// part, in a shared indexing) pairwise disjointness is enforced.
InvariantReport disjoint_combine(const std::vector<InvariantReport>& reports,
                                 const std::vector<long long>& nvars,
                                 const std::vector<std::vector<int>>* supports = nullptr);

// Scaling by a monomial u with support disjoint from the ideal's:
// pd unchanged, reg grows by deg u.
InvariantReport coprime_scale(const InvariantReport& report, const Monomial& u,
                              const MonomialIdeal& ideal);

}  // namespace edgeideal
