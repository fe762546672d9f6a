#pragma once

#include <string>

#include "edgeideal/betti.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/polarize.hpp"
#include "edgeideal/splitting.hpp"
#include "edgeideal/sweep.hpp"

namespace edgeideal {

// JSON renderings of the result types, for the CLI's json output mode and
// the python bindings.  All are deterministic: object keys are emitted in a
// fixed order and arrays follow the canonical orders of the underlying
// structures.  Each returns a serialized object with a trailing newline.

std::string betti_json(const BettiTable& table);
std::string invariants_json(const InvariantReport& report);
std::string polarize_json(const PolarizedIdeal& pol);
std::string certificate_json(const SplittingCertificate& cert);
std::string sweep_json(const SweepOptions& opts, const SweepResult& result);

// Comparison payloads for `invariants --method both` style runs.
std::string invariants_match_json(const InvariantReport& formula,
                                  const Invariants& oracle, bool match);

}  // namespace edgeideal
