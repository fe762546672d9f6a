#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/ideal.hpp"

namespace edgeideal {

enum class CertKind { Principal, Oracle, Disjoint, Coprime, Split };

std::string cert_kind_name(CertKind kind);

// One node of a splitting certificate.  Children:
//   Split    -> [certificate for K, certificate for J
//                intersected with K], with J = (split_generator)
//   Coprime  -> [certificate for the ideal divided by coprime_factor]
//   Disjoint -> one child per support-connected part, in generator order
//   Principal, Oracle -> none
struct CertNode {
  CertKind kind = CertKind::Oracle;
  MonomialIdeal ideal;
  long long pd = 0;
  long long reg = 0;
  std::optional<Monomial> split_generator;  // Split only: g
  int witness_var = -1;                     // Split only: v divides only g
  std::optional<Monomial> coprime_factor;   // Coprime only: stripped u
  std::vector<std::unique_ptr<CertNode>> children;

  CertNode(CertKind k, MonomialIdeal i) : kind(k), ideal(std::move(i)) {}
};

struct SplittingCertificate {
  std::unique_ptr<CertNode> root;
  long long node_count = 0;
  long long split_count = 0;
  long long oracle_fallbacks = 0;
  int height = 0;
  // Populated in the verification modes:
  long long splits_verified = 0;
  long long nodes_verified = 0;
  std::vector<std::string> verification_failures;
};

struct SplitOptions {
  long long node_budget = 10000;
  int generator_cap = 20;
  long long field_char = 0;
  // Re-check every node's (pd, reg) against a fresh oracle run.
  bool verify_nodes = false;
  // Re-check the graded splitting identity at every Split node.
  bool verify_splits = false;
};

// Finds a generator g and a variable v such that v divides g and no other
// minimal generator; then J = (g), K = the rest is a Betti splitting
// (a principal ideal trivially has a linear resolution).  Deterministic:
// smallest v in ambient order, which pins g.  Returns nullopt if no variable
// divides exactly one generator.  Throws ValidationError with fewer than two
// generators.
std::optional<std::pair<Monomial, int>> find_split(const MonomialIdeal& ideal);

struct SplittingCheck {
  bool ok = true;
  // One line per graded position (i, j) taking part in the identity.
  std::vector<std::string> rows;
  std::vector<std::string> failures;
};

// Checks the graded identity beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K)
// + beta_{i-1,j}(J n K) for all (i, j), with the i = 0 convention that the
// shifted term vanishes.  Requires the minimal generators of J and K to
// partition those of I.
SplittingCheck verify_splitting(const MonomialIdeal& I, const MonomialIdeal& J,
                                const MonomialIdeal& K,
                                const OracleOptions& opts = {});

// Recursive pd/reg evaluation.  Base cases: principal ideal; variable-
// disjoint decomposition; after splits are exhausted, a coprime common
// factor is stripped; a node with none of these falls back to the oracle.
// Recursive case: find_split, recurse on K and on J intersect K, combine by
//   pd = max(0, pd K, pd JnK + 1),  reg = max(deg g, reg K, reg JnK - 1).
// Deterministic and, with fixed options, byte-identical across runs.
SplittingCertificate split_eval(const MonomialIdeal& ideal,
                                const SplitOptions& opts = {});

// Builds the certificate for a recognized family (stars, rooted forests,
// oriented cycles) from polarize(edge_ideal(D)) and asserts it reproduces
// the closed-form values; for cycles the spine is additionally checked
// node by node, for single trees the top split's children.  Throws
// CertificateMismatchError with a diff on any disagreement.
// For cycles the polynomial variables are ordered along the cycle starting
// from the first declared vertex, so the recursion follows the proof chain.
SplittingCertificate family_certificate(const WeightedOrientedGraph& graph,
                                        const SplitOptions& opts = {});

// The maximal chain of Split nodes reached from the root by following
// "J intersect K" children (the second child).  For an oriented n-cycle
// this has exactly n - 1 nodes and ends just before a principal leaf.
std::vector<const CertNode*> certificate_spine(const SplittingCertificate& cert);

// Indented, deterministic text rendering.
std::string render_certificate_text(const SplittingCertificate& cert);

}  // namespace edgeideal
