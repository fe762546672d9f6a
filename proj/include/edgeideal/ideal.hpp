#pragma once

#include <vector>

#include "edgeideal/monomial.hpp"
#include "edgeideal/varset.hpp"

namespace edgeideal {

// Reduces a generating set to its unique minimal one: drops duplicates and
// any monomial divisible by another.  Order-independent; output is in
// canonical (degree, lex) order.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

// A monomial ideal given by its unique minimal generating set over a fixed
// ambient variable set.  Construction minimalizes and sorts the generators,
// so equal ideals always compare equal and print identically.  The zero
// ideal (no generators) is representable.
class MonomialIdeal {
 public:
  // Throws ValidationError if `ambient` is null, a generator is constant, or
  // a generator's variable count differs from the ambient size.
  MonomialIdeal(VarSetPtr ambient, std::vector<Monomial> gens);

  static MonomialIdeal zero(VarSetPtr ambient);

  const VarSetPtr& ambient() const noexcept { return ambient_; }
  int nvars() const noexcept { return ambient_->size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_principal() const noexcept { return gens_.size() == 1; }

  // Membership test: some minimal generator divides m.
  bool contains(const Monomial& m) const;

  // Union of the generators' supports, as sorted variable indices.
  std::vector<int> support() const;

  bool operator==(const MonomialIdeal& other) const;

 private:
  VarSetPtr ambient_;
  std::vector<Monomial> gens_;
};

// Ideal arithmetic.  Each throws ValidationError unless both arguments share
// the same ambient variable set (same names in the same order).
MonomialIdeal sum_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

// Product by a single monomial (principal-ideal scaling).
MonomialIdeal scale_ideal(const Monomial& u, const MonomialIdeal& a);

}  // namespace edgeideal
