#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricobracket/diagram.hpp"

namespace tricob {

// One endpoint token of a pattern word. Tail matches a diagram over
// endpoint, head an under endpoint. signConstraint: 0 none, else +-1.
struct PatternToken {
    int arrow = 0;  // index into the term's arrow list
    bool head = false;
    int signConstraint = 0;

    friend bool operator==(const PatternToken&, const PatternToken&) = default;
};

struct PatternTerm {
    int coeff = 0;
    int arrowCount = 0;
    std::vector<std::string> arrowNames;            // for diagnostics
    std::vector<std::vector<PatternToken>> words;   // one word per component

    friend bool operator==(const PatternTerm&, const PatternTerm&) = default;
};

struct Pattern {
    std::string name;
    int componentCount = 0;
    std::vector<PatternTerm> terms;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Parses the pattern DSL:
//   pattern := "pattern" name "{" "components" INT ";" term+ "}"
//   term    := "term" SIGNEDINT "{" ("comp" INT ":" token+ ";")+ "}"
//   token   := arrowName ("H"|"T") (":" ("+"|"-"))?
// '#' starts a comment to end of line. Throws ParseError with position info.
Pattern parse_pattern(const std::string& text);

Pattern load_pattern_file(const std::string& path);

using Sigma = std::array<int, 3>;  // images of components 1,2,3

// Shipped patterns, loaded from the pattern directory (see pattern_dir).
// lambda/nu take a permutation sigma relabeling components (i,j,k); lk and
// mu123 ignore it.
Pattern builtin_pattern(const std::string& name, const Sigma& sigma = {1, 2, 3});

// Applies a component relabeling to a loaded pattern.
Pattern apply_sigma(const Pattern& p, const Sigma& sigma);

// TRICOBRACKET_PATTERN_DIR env var, else the compiled-in default.
std::string pattern_dir();

}  // namespace tricob
