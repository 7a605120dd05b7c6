#include "tricobracket/smoothing.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace tricob {

PairClass classify_pair(const Diagram& d, int ci, int cj) {
    if (ci == cj) throw ShapeError("classify_pair needs two distinct crossings");
    const Arrow& a = d.arrow(ci);
    const Arrow& b = d.arrow(cj);
    int lo = d.globalIndex(a.first), hi = d.globalIndex(a.second);
    int inside = 0;
    for (EndpointRef p : {b.first, b.second}) {
        int g = d.globalIndex(p);
        if (lo < g && g < hi) ++inside;
    }
    return inside == 1 ? PairClass::Interleaved : PairClass::Parallel;
}

namespace {

// Splice bookkeeping on one component. Positions are slot references into
// the original diagram; removed endpoints become junctions the traversal
// jumps across.
struct Splicer {
    const Diagram& d;
    std::map<EndpointRef, EndpointRef> jump;  // junction -> continuation
    std::set<EndpointRef> removed;
    std::map<EndpointRef, int> compOf;        // alive slots and junctions
    struct Piece {
        Shape shape;
        std::vector<EndpointRef> slots;
    };
    std::vector<Piece> pieces;

    explicit Splicer(const Diagram& diagram, const std::vector<int>& labels)
        : d(diagram) {
        if (d.components().size() != 1) {
            throw ShapeError("smoothing expects a single-component diagram");
        }
        for (int label : labels) {
            const Arrow& a = d.arrow(label);
            removed.insert(a.first);
            removed.insert(a.second);
        }
        for (int label : labels) {
            const Arrow& a = d.arrow(label);
            jump[a.first] = next(a.second);
            jump[a.second] = next(a.first);
        }
        walkFrom(EndpointRef{0, 0}, d.components()[0].shape);
        const auto& slots = d.components()[0].slots;
        for (int si = 0; si < static_cast<int>(slots.size()); ++si) {
            EndpointRef p{0, si};
            if (!compOf.count(p) && !removed.count(p)) walkFrom(p, Shape::Circle);
        }
        for (const EndpointRef& p : removed) {
            if (!compOf.count(p)) walkFrom(p, Shape::Circle);
        }
    }

    // "end" marker for lines
    static constexpr EndpointRef kEnd{-1, -1};

    EndpointRef next(EndpointRef p) const {
        const Component& c = d.components()[p.comp];
        if (p.slot + 1 < static_cast<int>(c.slots.size())) return {p.comp, p.slot + 1};
        return c.shape == Shape::Circle ? EndpointRef{p.comp, 0} : kEnd;
    }

    void walkFrom(EndpointRef p, Shape shape) {
        int idx = static_cast<int>(pieces.size());
        pieces.push_back({shape, {}});
        std::set<EndpointRef> seenJunctions;
        while (p != kEnd) {
            while (p != kEnd && removed.count(p)) {
                if (seenJunctions.count(p)) return;  // pure-junction circle closed
                seenJunctions.insert(p);
                compOf[p] = idx;
                p = jump.at(p);
            }
            if (p == kEnd || compOf.count(p)) return;
            compOf[p] = idx;
            pieces[idx].slots.push_back(p);
            p = next(p);
        }
    }

    // Component carrying the arc that continues from p.
    int arcComp(EndpointRef p) const { return compOf.at(p); }

    // First alive slot along the arc from p, or nullopt for an empty circle.
    std::optional<EndpointRef> arcStart(EndpointRef p) const {
        std::set<EndpointRef> seen;
        while (p != kEnd && removed.count(p)) {
            if (seen.count(p)) return std::nullopt;
            seen.insert(p);
            p = jump.at(p);
        }
        if (p == kEnd) return std::nullopt;
        return p;
    }

    // Builds the result diagram from pieces in the given order; starts give
    // the first slot of each circular word. Flat signs are traversal
    // relative, so a crossing whose endpoint visit order flips gets negated.
    Diagram build(const std::vector<std::pair<int, std::optional<EndpointRef>>>& order) const {
        std::vector<Component> comps;
        std::map<int, int> signs;
        std::set<int> seen;
        for (auto& [idx, start] : order) {
            const Piece& piece = pieces[idx];
            std::vector<EndpointRef> word = piece.slots;
            if (start && piece.shape == Shape::Circle && !word.empty()) {
                auto it = std::find(word.begin(), word.end(), *start);
                if (it != word.end()) std::rotate(word.begin(), it, word.end());
            }
            Component c{piece.shape, {}};
            for (EndpointRef p : word) {
                Slot s = d.slot(p);
                if (!seen.count(s.label)) {
                    seen.insert(s.label);
                    int sign = d.arrows().at(s.label).sign;
                    if (d.kind() == Kind::Flat && p != d.arrows().at(s.label).first) {
                        sign = -sign;  // visit order flipped
                    }
                    signs[s.label] = sign;
                }
                c.slots.push_back(s);
            }
            comps.push_back(std::move(c));
        }
        return Diagram(d.kind(), std::move(comps), std::move(signs));
    }
};

}  // namespace

SmoothingResult smooth_one(const Diagram& d, int label, bool mirror) {
    const Arrow& a = d.arrow(label);
    Splicer sp(d, {label});
    int loop = sp.arcComp(sp.next(a.first));
    if (loop == 0) throw ShapeError("smoothing did not split the component");
    auto loopStart = sp.arcStart(sp.next(a.first));
    std::vector<std::pair<int, std::optional<EndpointRef>>> order;
    if (!mirror) {
        order = {{loop, loopStart}, {0, std::nullopt}};
    } else {
        order = {{0, std::nullopt}, {loop, loopStart}};
    }
    return SmoothingResult{sp.build(order), {label}, 2};
}

SmoothingResult smooth_pair(const Diagram& d, int ci, int cj) {
    if (classify_pair(d, ci, cj) == PairClass::Interleaved) {
        throw ShapeError("smooth_pair needs a parallel pair");
    }
    const Arrow& ai = d.arrow(ci);
    const Arrow& aj = d.arrow(cj);
    Splicer sp(d, {ci, cj});
    int c2 = sp.arcComp(sp.next(ai.first));
    int c3 = sp.arcComp(sp.next(aj.first));
    if (sp.pieces.size() != 3 || c2 == 0 || c3 == 0 || c2 == c3) {
        throw ShapeError("double splice of a parallel pair must give 3 components");
    }
    return SmoothingResult{
        sp.build({{0, std::nullopt},
                  {c2, sp.arcStart(sp.next(ai.first))},
                  {c3, sp.arcStart(sp.next(aj.first))}}),
        {ci, cj},
        3};
}

Diagram splice_all(const Diagram& d, const std::vector<int>& labels) {
    Splicer sp(d, labels);
    std::vector<std::pair<int, std::optional<EndpointRef>>> order;
    for (int i = 0; i < static_cast<int>(sp.pieces.size()); ++i) {
        order.push_back({i, std::nullopt});
    }
    return sp.build(order);
}

int intersection_number(const Diagram& d, int a, int b) {
    int n = static_cast<int>(d.components().size());
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
        throw ShapeError("intersection_number needs two distinct components");
    }
    int total = 0;
    for (auto& [label, arrow] : d.arrows()) {
        int ca = arrow.first.comp, cb = arrow.second.comp;
        if ((ca == a && cb == b) || (ca == b && cb == a)) {
            int s = flat_sign(d, label);
            total += ca == a ? s : -s;
        }
    }
    return total;
}

}  // namespace tricob
