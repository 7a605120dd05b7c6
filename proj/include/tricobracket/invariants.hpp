#pragma once

#include "tricobracket/diagram.hpp"
#include "tricobracket/laurent.hpp"
#include "tricobracket/pattern.hpp"

namespace tricob {

// Affine index polynomial of a closed 1-component knotted diagram:
// sum over crossings c of eps(c) * (t^{C2.C1} - 1) for the single smoothing
// at c. mirror flips the C1/C2 convention (t <-> 1/t).
LaurentPoly affine_index(const Diagram& d, bool mirror = false);

// sgn variant for pointed 1-component flat curves.
LaurentPoly flat_index(const Diagram& d, bool mirror = false);

// Milnor triple linking number of a pointed ordered 3-component diagram.
long long mu123(const Diagram& d);

// Triple-coproduct invariant of a long virtual knot: twice the sum over
// unordered parallel pairs {c_i, c_j} (earlier chord in the c_i role) of
// eps(c_i) eps(c_j) (t^v - 1), v = <pattern, iota(curve of the double
// smoothing)>. The exponent pattern sees the underlying pointed curve of
// the smoothed triple, not the retained over/under data.
LaurentPoly triple_invariant(const Diagram& d, const Pattern& p);

// Same for a pointed 1-component flat curve, with sgn prefactors.
LaurentPoly flat_triple_invariant(const Diagram& d, const Pattern& p);

}  // namespace tricob
