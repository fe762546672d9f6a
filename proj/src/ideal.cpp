#include "edgeideal/ideal.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "edgeideal/errors.hpp"

namespace edgeideal {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), degree_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    // Only earlier (lower/equal degree) survivors can divide g.
    for (const Monomial& kept : out) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(VarSetPtr ambient, std::vector<Monomial> gens)
    : ambient_(std::move(ambient)) {
  if (!ambient_) throw ValidationError("ideal requires an ambient variable set");
  for (const Monomial& g : gens) {
    if (g.nvars() != ambient_->size()) {
      throw ValidationError(
          "generator variable count differs from ambient variable set");
    }
    if (g.is_constant()) {
      throw ValidationError("constant generator is not allowed");
    }
  }
  gens_ = minimal_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(VarSetPtr ambient) {
  return MonomialIdeal(std::move(ambient), {});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars()) {
    throw ValidationError("monomial variable count differs from ambient");
  }
  for (const Monomial& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

std::vector<int> MonomialIdeal::support() const {
  std::set<int> s;
  for (const Monomial& g : gens_) {
    for (int v : g.support()) s.insert(v);
  }
  return std::vector<int>(s.begin(), s.end());
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_ambient(ambient_, other.ambient_) && gens_ == other.gens_;
}

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ambient(a.ambient(), b.ambient())) {
    throw ValidationError("ideals live in different ambient variable sets");
  }
}

}  // namespace

MonomialIdeal sum_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  for (const Monomial& ga : a.generators()) {
    for (const Monomial& gb : b.generators()) {
      gens.push_back(ga * gb);
    }
  }
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal intersect_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  for (const Monomial& ga : a.generators()) {
    for (const Monomial& gb : b.generators()) {
      gens.push_back(lcm(ga, gb));
    }
  }
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal scale_ideal(const Monomial& u, const MonomialIdeal& a) {
  if (u.nvars() != a.nvars()) {
    throw ValidationError("scaling monomial variable count differs from ambient");
  }
  std::vector<Monomial> gens;
  for (const Monomial& g : a.generators()) gens.push_back(u * g);
  return MonomialIdeal(a.ambient(), std::move(gens));
}

}  // namespace edgeideal
