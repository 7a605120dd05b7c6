#pragma once

#include "tricobracket/diagram.hpp"
#include "tricobracket/pattern.hpp"

namespace tricob {

// <pattern, diagram>: sign-weighted count of order- and direction-respecting
// embeddings of each term into the diagram, times the term coefficient.
// Requires a Knotted diagram with matching component count. OpenMP-parallel
// over candidate matches; the integer sum is identical to the serial result.
long long evaluate(const Pattern& p, const Diagram& d);

// Same contract, by exhaustive enumeration of ordered arrow tuples with
// direct order checks. Serial reference implementation; the oracle that
// gates evaluate().
long long brute_force_evaluate(const Pattern& p, const Diagram& d);

}  // namespace tricob
