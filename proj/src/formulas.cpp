#include "edgeideal/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

// Shared arithmetic of all three family theorems: pd = |E| - 1 and
// reg = sum of weights over edge-covered vertices - |E| + 1, with the
// understanding that source weights have been normalized to 1.  Families
// differ only in their depth bookkeeping and hypothesis wording.
void fill_common(const WeightedOrientedGraph& g, InvariantReport& r,
                 const std::string& family_label) {
  const long long e = g.edge_count();
  std::vector<bool> covered(g.vertex_count(), false);
  for (const auto& [u, v] : g.edges()) covered[u] = covered[v] = true;
  long long weight_sum = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (covered[i]) weight_sum += g.vertex(i).weight;
  }
  r.pd = e - 1;
  r.reg = weight_sum - e + 1;
  r.depth = g.vertex_count() - r.pd;
  r.formula_refs.push_back("pd = |E| - 1 (" + family_label + ")");
  r.formula_refs.push_back("reg = sum(w) - |E| + 1 over edge-covered vertices (" +
                           family_label + ")");
  r.formula_refs.push_back("depth = |V| - pd (" + family_label + ")");
}

// Theorem hypothesis: sources (in-degree 0) carry weight 1, every other
// vertex weight >= 2.
void check_hypothesis(const WeightedOrientedGraph& g, InvariantReport& r) {
  std::vector<int> in = g.in_degrees();
  for (int i = 0; i < g.vertex_count(); ++i) {
    long long w = g.vertex(i).weight;
    if (in[i] == 0) {
      if (w != 1) {
        r.hypothesis_ok = false;
        r.formula_refs.push_back("hypothesis violated: source '" +
                                 g.vertex(i).id + "' has weight " +
                                 std::to_string(w) + " (expected 1; normalize)");
      }
    } else if (w < 2) {
      r.hypothesis_ok = false;
      r.formula_refs.push_back("hypothesis violated: non-source '" +
                               g.vertex(i).id + "' has weight " +
                               std::to_string(w) + " (formulas assume w >= 2)");
    }
  }
}

}  // namespace

InvariantReport star_formula(const WeightedOrientedGraph& g) {
  InvariantReport r;
  r.family = classify(g);
  if (r.family.kind != FamilyKind::OutStar && r.family.kind != FamilyKind::InStar &&
      r.family.kind != FamilyKind::MixedStar) {
    throw ValidationError("star_formula requires a star-shaped graph");
  }
  fill_common(g, r, family_name(r.family.kind));
  check_hypothesis(g, r);
  return r;
}

InvariantReport forest_formula(const WeightedOrientedGraph& g) {
  InvariantReport r;
  r.family = classify(g);
  if (!r.family.rooted_forest) {
    throw ValidationError("forest_formula requires a rooted forest");
  }
  fill_common(g, r, "rooted-forest");
  check_hypothesis(g, r);
  const int t = r.family.components;
  r.formula_refs.push_back("depth = #components + 1 = " + std::to_string(t + 1));
  if (t > 1) {
    r.formula_refs.push_back(
        "note: multi-component forest; the single-tree depth value 2 "
        "generalizes to #components + 1");
  }
  return r;
}

InvariantReport cycle_formula(const WeightedOrientedGraph& g) {
  InvariantReport r;
  r.family = classify(g);
  if (r.family.kind != FamilyKind::OrientedCycle) {
    throw ValidationError("cycle_formula requires an oriented cycle");
  }
  fill_common(g, r, "oriented-cycle");
  check_hypothesis(g, r);
  r.formula_refs.push_back("depth = 1 (oriented cycle)");
  return r;
}

InvariantReport formula_invariants(const WeightedOrientedGraph& g) {
  FamilyTag tag = classify(g);
  switch (tag.kind) {
    case FamilyKind::OrientedCycle:
      return cycle_formula(g);
    case FamilyKind::OutStar:
    case FamilyKind::InStar:
    case FamilyKind::MixedStar:
      return star_formula(g);
    case FamilyKind::RootedForest:
      return forest_formula(g);
    case FamilyKind::Other:
      break;
  }
  throw ValidationError(
      "no closed formula applies to this graph (family: other)");
}

InvariantReport disjoint_combine(const std::vector<InvariantReport>& reports,
                                 const std::vector<long long>& nvars,
                                 const std::vector<std::vector<int>>* supports) {
  if (reports.empty()) {
    throw ValidationError("disjoint_combine needs at least one report");
  }
  if (reports.size() != nvars.size()) {
    throw ValidationError("disjoint_combine: one variable count per report required");
  }
  if (supports) {
    if (supports->size() != reports.size()) {
      throw ValidationError("disjoint_combine: one support per report required");
    }
    std::set<int> seen;
    for (const auto& sup : *supports) {
      for (int v : sup) {
        if (!seen.insert(v).second) {
          throw ValidationError(
              "disjoint_combine: parts share a variable; supports must be disjoint");
        }
      }
    }
  }
  const long long k = static_cast<long long>(reports.size());
  InvariantReport out;
  long long total_vars = 0;
  out.hypothesis_ok = true;
  bool all_forests = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (nvars[i] <= 0) {
      throw ValidationError("disjoint_combine: variable counts must be positive");
    }
    out.pd += reports[i].pd;
    out.reg += reports[i].reg;
    total_vars += nvars[i];
    out.hypothesis_ok = out.hypothesis_ok && reports[i].hypothesis_ok;
    all_forests = all_forests && reports[i].family.rooted_forest;
    out.family.components += std::max(1, reports[i].family.components);
  }
  out.pd += k - 1;
  out.reg -= k - 1;
  out.depth = total_vars - out.pd;
  out.family.kind = all_forests ? FamilyKind::RootedForest : FamilyKind::Other;
  out.family.rooted_forest = all_forests;
  out.formula_refs.push_back("pd(sum) = sum(pd_i) + (k-1) for variable-disjoint parts");
  out.formula_refs.push_back("reg(sum) = sum(reg_i) - (k-1) for variable-disjoint parts");
  out.formula_refs.push_back("depth = total variables - pd");
  return out;
}

InvariantReport coprime_scale(const InvariantReport& report, const Monomial& u,
                              const MonomialIdeal& ideal) {
  if (u.nvars() != ideal.nvars()) {
    throw ValidationError("scaling monomial lives in a different variable count");
  }
  for (int v : ideal.support()) {
    if (u.exponent(v) > 0) {
      throw ValidationError(
          "coprime_scale requires supp(u) disjoint from supp(I); variable '" +
          ideal.ambient()->name(v) + "' is shared");
    }
  }
  InvariantReport out = report;
  out.reg += u.degree();
  out.formula_refs.push_back("pd(u*I) = pd(I) for coprime u");
  out.formula_refs.push_back("reg(u*I) = reg(I) + deg(u) = reg(I) + " +
                             std::to_string(u.degree()));
  return out;
}

}  // namespace edgeideal
