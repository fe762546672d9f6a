#include "edgeideal/polarize.hpp"

#include <string>
#include <utility>
#include <vector>

#include "edgeideal/errors.hpp"

namespace edgeideal {

PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) {
    throw ZeroIdealError("cannot polarize the zero ideal");
  }
  const VarSet& src = *ideal.ambient();
  int n = src.size();

  std::vector<int> max_exp(n, 0);
  for (const Monomial& g : ideal.generators()) {
    for (int i = 0; i < n; ++i) {
      max_exp[i] = std::max(max_exp[i], g.exponent(i));
    }
  }

  std::vector<std::string> names;
  std::vector<PolarizedVar> slots;
  std::vector<int> first_slot(n, -1);  // polarized index of slot 1 of x_i
  for (int i = 0; i < n; ++i) {
    if (max_exp[i] == 0) continue;
    first_slot[i] = static_cast<int>(names.size());
    for (int j = 1; j <= max_exp[i]; ++j) {
      names.push_back(src.name(i) + "_" + std::to_string(j));
      slots.push_back(PolarizedVar{i, j});
    }
  }
  VarSetPtr poly_vars = VarSet::make(std::move(names));

  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(poly_vars->size(), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < g.exponent(i); ++j) {
        e[first_slot[i] + j] = 1;
      }
    }
    gens.emplace_back(std::move(e));
  }

  MonomialIdeal poly(poly_vars, std::move(gens));
  if (poly.generators().size() != ideal.generators().size()) {
    // Polarization is injective on minimal generators, so this cannot
    // happen; guard against it anyway.
    throw ValidationError("polarization collapsed generators");
  }
  return PolarizedIdeal{std::move(poly), std::move(slots), ideal.ambient()};
}

}  // namespace edgeideal
