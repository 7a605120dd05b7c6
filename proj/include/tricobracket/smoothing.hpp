#pragma once

#include <array>
#include <vector>

#include "tricobracket/diagram.hpp"

namespace tricob {

enum class PairClass { Parallel, Interleaved };

// Interleaved iff exactly one endpoint of cj lies strictly between the two
// endpoints of ci in the traversal order. Symmetric and total.
PairClass classify_pair(const Diagram& d, int ci, int cj);

struct SmoothingResult {
    Diagram result;                  // components already ordered C1, C2(, C3)
    std::vector<int> smoothedLabels;
    int componentCount = 0;          // of result
};

// Seifert splice at one crossing of a single-component diagram.
// C1 = the component entered immediately after the crossing's first-visit
// endpoint; C2 = the component keeping the original base point. mirror swaps
// the order (the t <-> 1/t convention flip).
SmoothingResult smooth_one(const Diagram& d, int label, bool mirror = false);

// Double splice at a Parallel pair of a single-component diagram; ci takes
// the c_i role. C1 keeps the original base point, C2 is based at ci's splice
// junction, C3 at cj's. Throws ShapeError on an Interleaved pair.
SmoothingResult smooth_pair(const Diagram& d, int ci, int cj);

// Low-level oriented splice at any label set; components come out in
// discovery order (base-point component first). Exposed for property tests.
Diagram splice_all(const Diagram& d, const std::vector<int>& labels);

// Sum over arrows joining components a and b of +-sgn, positive when the
// arrow's first-visit endpoint lies on a. Antisymmetric.
int intersection_number(const Diagram& d, int a, int b);

}  // namespace tricob
