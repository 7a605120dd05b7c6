#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricob {

enum class Kind { Flat, Knotted };
enum class Shape { Circle, Line };

// Thrown on malformed Gauss codes or pattern files. CLI maps this to exit 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation gets a diagram of the wrong shape (component
// count, kind, ...). CLI maps this to exit 3.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Slot = one chord endpoint on a component.
// over: -1 for flat diagrams, else 1 if this endpoint is the over branch.
struct Slot {
    int label = 0;
    int8_t over = -1;

    friend bool operator==(const Slot&, const Slot&) = default;
};

struct Component {
    Shape shape = Shape::Circle;
    std::vector<Slot> slots;  // in traversal order from the base point

    friend bool operator==(const Component&, const Component&) = default;
};

struct EndpointRef {
    int comp = 0;
    int slot = 0;

    friend auto operator<=>(const EndpointRef&, const EndpointRef&) = default;
};

struct Arrow {
    int sign = 0;         // epsilon (Knotted) or sgn (Flat)
    EndpointRef first;    // earlier endpoint in the global traversal
    EndpointRef second;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Pointed, ordered, multi-component Gauss/arrow diagram. Immutable after
// construction; component order and base points are part of the value.
class Diagram {
public:
    Diagram() = default;
    Diagram(Kind kind, std::vector<Component> comps, std::map<int, int> signs);

    Kind kind() const { return kind_; }
    const std::vector<Component>& components() const { return comps_; }
    const std::map<int, Arrow>& arrows() const { return arrows_; }

    int crossings() const { return static_cast<int>(arrows_.size()); }
    bool hasLabel(int label) const { return arrows_.count(label) != 0; }
    const Arrow& arrow(int label) const;
    const Slot& slot(EndpointRef p) const { return comps_[p.comp].slots[p.slot]; }

    // Position of p in the global traversal (components in order, each from
    // its base point). This order defines "first endpoint" everywhere.
    int globalIndex(EndpointRef p) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    Kind kind_ = Kind::Flat;
    std::vector<Component> comps_;
    std::map<int, Arrow> arrows_;
};

// sgn of a crossing of a knotted diagram: equals epsilon when the over
// branch is the first-visited branch, else -epsilon. Identity on flat
// diagrams (their stored signs are already sgn).
int flat_sign(const Diagram& d, int label);

// Flat curve -> virtual link diagram: every arrow keeps its sign as epsilon
// and gets its over marker at the first-visited endpoint.
Diagram iota(const Diagram& d);

// Knotted -> flat shadow; stored signs become sgn.
Diagram forget_over(const Diagram& d);

Diagram parse_gauss_code(const std::string& text, Kind kind);
std::string serialize(const Diagram& d);

// Deterministic in seed; endpoints and signs (and over markers) uniform.
Diagram random_diagram(int crossings, const std::vector<Shape>& comps,
                       Kind kind, uint64_t seed);

}  // namespace tricob
