#pragma once

#include <vector>

#include "edgeideal/ideal.hpp"

namespace edgeideal {

// One variable of a polarized ring: slot `slot` (1-based) of the original
// variable with index `source`.
struct PolarizedVar {
  int source = 0;
  int slot = 1;
};

struct PolarizedIdeal {
  MonomialIdeal ideal;              // squarefree, over the slot variables
  std::vector<PolarizedVar> slots;  // indexed by polarized variable
  VarSetPtr source_ambient;         // the original variable set
};

// Standard polarization: each occurrence x_i^a in a generator becomes the
// product of the first `a` slot variables of x_i.  The polarized ring has,
// for each original variable, one slot per unit of its maximal exponent
// across the generators (variables never reaching exponent 1 contribute no
// slots).  Slot variables are named "<original>_<slot>" and ordered by
// (original index, slot).  Throws ZeroIdealError for the zero ideal.
PolarizedIdeal polarize(const MonomialIdeal& ideal);

}  // namespace edgeideal
