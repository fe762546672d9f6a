#pragma once

#include <map>
#include <string>
#include <utility>

#include "edgeideal/ideal.hpp"

namespace edgeideal {

struct OracleOptions {
  // Refuse ideals with more minimal generators than this (subset
  // enumeration is exponential in the generator count).
  int generator_cap = 20;
  // 0 for rational coefficients, otherwise a prime < 2^31.
  long long field_char = 0;
};

// Graded Betti numbers of a resolution: entries[(i, j)] = beta_{i,j},
// homological index i >= 0, internal degree j.  Only nonzero entries are
// stored.  A zero ideal yields an empty table.
struct BettiTable {
  std::map<std::pair<long long, long long>, long long> entries;
  int nvars = 0;
  long long field_char = 0;

  bool empty() const noexcept { return entries.empty(); }

  long long pd() const;     // max i; throws ZeroIdealError when empty
  long long reg() const;    // max j - i; throws ZeroIdealError when empty
  long long depth() const;  // module depth of the ideal: nvars - pd
};

struct Invariants {
  long long pd = 0;
  long long reg = 0;
  long long depth = 0;

  bool operator==(const Invariants&) const = default;
};

// pd / reg / depth read off a Betti table.  Throws ZeroIdealError on the
// empty table.
Invariants invariants_from_table(const BettiTable& table);

// Computes the full graded Betti table of `ideal` by taking homology of the
// multigraded strands of its Taylor complex, one exact-rank computation per
// differential.  Deterministic: generators in canonical order, subsets
// enumerated as ascending bitmasks, strands visited in lexicographic
// multidegree order.
BettiTable betti_table(const MonomialIdeal& ideal, const OracleOptions& opts = {});

// True iff all generators share one degree d and every table entry sits on
// the single diagonal j = i + d.
bool has_linear_resolution(const MonomialIdeal& ideal, const OracleOptions& opts = {});

// Text rendering in the usual grid layout: one column per homological index
// i, one row per diagonal r = j - i, "." for absent entries.
std::string render_betti_grid(const BettiTable& table);

}  // namespace edgeideal
