#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tricobracket/diagram.hpp"

namespace tricob {

enum class Move { R1a, R1b, R2a, R3a };
enum class Direction { Insert, Delete, LeftToRight, RightToLeft };

// One applicable move location. Inserts carry gap positions plus sign /
// orientation parameters; deletes carry the labels they remove; R3 carries
// the three adjacent slot pairs it swaps.
struct MoveSite {
    Move move = Move::R1a;
    Direction dir = Direction::Insert;

    // R1 insert: gapA + winding; R2 insert: gapA, gapB + sign + overFirstGap.
    EndpointRef gapA, gapB;
    int sign = 0;             // winding w (R1) or epsilon of the first chord (R2)
    bool overFirstGap = true; // R1: over marker at first endpoint; R2: overs on gapA strand

    std::vector<int> labels;  // deletes: chords removed

    // R3: six slots as three adjacent pairs, each swapped by the move
    std::array<std::array<EndpointRef, 2>, 3> pairs{};

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

nlohmann::json to_json(const MoveSite& s);
MoveSite movesite_from_json(const nlohmann::json& j);

// Every applicable generating-move site: R1/R2 inserts at all arc positions,
// R1 deletes at isolated chords, R2a deletes at coherent opposite-sign pairs,
// R3 sites at matching six-endpoint configurations. Deterministic order.
std::vector<MoveSite> enumerate_moves(const Diagram& d);

// Applies s; throws ShapeError when the site does not fit d.
Diagram apply_move(const Diagram& d, const MoveSite& s);

struct Walk {
    Diagram result;
    std::vector<MoveSite> trace;
};

// steps uniformly chosen applicable sites; deterministic in seed.
Walk random_walk(const Diagram& d, int steps, uint64_t seed);

// Replays a recorded trace.
Diagram replay(const Diagram& d, const std::vector<MoveSite>& trace);

// Link-homotopy generator: flips the over marker of an intra-component
// crossing and negates its sign. Knotted diagrams only.
Diagram self_crossing_change(const Diagram& d, int label);

std::vector<int> intra_component_labels(const Diagram& d);

}  // namespace tricob
