#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "tricobracket/diagram.hpp"
#include "tricobracket/pattern.hpp"

namespace tricob {

// What cmd_fuzz and the acceptance suite drive: N seeded random diagrams,
// k-step random walks (and optionally self-crossing changes), asserting the
// chosen invariant is unchanged.
struct FuzzConfig {
    std::string invariant;   // affine-index | flat-index | mu123 | lambda | nu
                             // | triple | flat-triple
    std::string pattern = "mu123";  // for triple / flat-triple
    Sigma sigma = {1, 2, 3};
    int diagrams = 100;
    int crossings = 8;
    int steps = 20;
    int selfChanges = 0;     // mu123/lambda/nu: crossing changes per diagram
    uint64_t seed = 0;
    bool mirror = false;
    int threads = 0;         // 0 = library default
};

struct FuzzViolation {
    int diagramIndex = 0;
    std::string input;       // canonical code of the starting diagram
    std::string mutated;     // canonical code after the walk / change
    nlohmann::json trace;    // replayable move trace
    std::string before;      // invariant value on input
    std::string after;       // invariant value on mutated
};

struct FuzzReport {
    int checked = 0;
    std::optional<FuzzViolation> violation;
    bool ok() const { return !violation.has_value(); }
};

FuzzReport run_fuzz(const FuzzConfig& cfg);

}  // namespace tricob
