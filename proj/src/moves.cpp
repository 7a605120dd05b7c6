#include "tricobracket/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "tricobracket/rng.hpp"

namespace tricob {

namespace {

// ------------------------------------------------------------------ R3
// Legal oriented R3 local pictures, generated from planar triangles: three
// lines with fixed slopes, all orientation flips, all height orders with the
// moving line extreme, both sides of the move. Matching a diagram fragment
// against any picture makes the triple-pair swap a genuine R3 rewrite.

struct Vec {
    double x, y;
};

double det(Vec u, Vec v) { return u.x * v.y - u.y * v.x; }

struct R3Picture {
    // per line: its two crossings (encoded as the partner line) in traversal order
    std::array<std::array<int, 2>, 3> partnerOrder;
    std::array<int, 3> height;
    std::array<Vec, 3> dir;
};

const std::vector<R3Picture>& r3_pictures() {
    static const std::vector<R3Picture> pics = [] {
        std::vector<R3Picture> out;
        const Vec base[3] = {{1, 0}, {1, 1}, {1, -1}};
        // crossing points keyed by line pair; side A: line 0 below the (1,2)
        // crossing, side B above
        for (int side = 0; side < 2; ++side) {
            std::map<std::pair<int, int>, Vec> pts;
            if (side == 0) {
                pts[{0, 1}] = {0, 0};
                pts[{0, 2}] = {1, 0};
            } else {
                pts[{0, 1}] = {1, 1};
                pts[{0, 2}] = {0, 1};
            }
            pts[{1, 2}] = {0.5, 0.5};
            for (int flips = 0; flips < 8; ++flips) {
                std::array<Vec, 3> dir;
                for (int l = 0; l < 3; ++l) {
                    double f = (flips >> l) & 1 ? -1.0 : 1.0;
                    dir[l] = {base[l].x * f, base[l].y * f};
                }
                std::array<std::array<int, 2>, 3> order;
                for (int l = 0; l < 3; ++l) {
                    std::array<std::pair<double, int>, 2> cs;
                    int k = 0;
                    for (int m = 0; m < 3; ++m) {
                        if (m == l) continue;
                        Vec p = pts.at({std::min(l, m), std::max(l, m)});
                        cs[k++] = {p.x * dir[l].x + p.y * dir[l].y, m};
                    }
                    if (cs[0].first > cs[1].first) std::swap(cs[0], cs[1]);
                    order[l] = {cs[0].second, cs[1].second};
                }
                int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                for (auto& h : perm3) {
                    if (h[0] == 1) continue;  // the mover must be extreme
                    out.push_back({order, {h[0], h[1], h[2]}, dir});
                }
            }
        }
        return out;
    }();
    return pics;
}

using SlotPair = std::array<EndpointRef, 2>;

std::vector<SlotPair> adjacent_pairs(const Diagram& d) {
    std::vector<SlotPair> out;
    const auto& comps = d.components();
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        for (int si = 0; si + 1 < static_cast<int>(comps[ci].slots.size()); ++si) {
            if (comps[ci].slots[si].label != comps[ci].slots[si + 1].label) {
                out.push_back({EndpointRef{ci, si}, EndpointRef{ci, si + 1}});
            }
        }
    }
    return out;
}

// Does this assignment of the three pairs to picture lines match pic?
bool pic_matches(const Diagram& d, const std::array<SlotPair, 3>& strands,
                 const std::map<std::pair<int, int>, int>& arrows,
                 const R3Picture& pic) {
    for (int l = 0; l < 3; ++l) {
        for (int idx = 0; idx < 2; ++idx) {
            int partner = pic.partnerOrder[l][idx];
            int want = arrows.at({std::min(l, partner), std::max(l, partner)});
            const Slot& s = d.slot(strands[l][idx]);
            if (s.label != want) return false;
            if (d.kind() == Kind::Knotted) {
                bool over = pic.height[l] > pic.height[partner];
                if ((s.over == 1) != over) return false;
            }
        }
    }
    for (auto& [key, label] : arrows) {
        auto [l1, l2] = key;
        int expected;
        if (d.kind() == Kind::Knotted) {
            int over = pic.height[l1] > pic.height[l2] ? l1 : l2;
            int under = over == l1 ? l2 : l1;
            expected = det(pic.dir[over], pic.dir[under]) > 0 ? 1 : -1;
        } else {
            const Arrow& a = d.arrows().at(label);
            int lf = -1;
            for (int l = 0; l < 3; ++l) {
                if (strands[l][0] == a.first || strands[l][1] == a.first) lf = l;
            }
            int ls = lf == l1 ? l2 : l1;
            expected = det(pic.dir[lf], pic.dir[ls]) > 0 ? 1 : -1;
        }
        if (d.arrows().at(label).sign != expected) return false;
    }
    return true;
}

// 0 = no match, 1 = matches a side-A picture, 2 = side-B. Pictures are
// stored side A first.
int match_r3(const Diagram& d, const std::array<SlotPair, 3>& trip) {
    static const int kSideSplit = static_cast<int>(r3_pictures().size()) / 2;
    int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pm : perm3) {
        std::array<SlotPair, 3> strands;
        for (int k = 0; k < 3; ++k) strands[pm[k]] = trip[k];
        std::map<std::pair<int, int>, int> arrows;
        bool ok = true;
        for (int l = 0; l < 3 && ok; ++l) {
            for (const EndpointRef& pos : strands[l]) {
                int label = d.slot(pos).label;
                int partner = -1;
                for (int m = 0; m < 3; ++m) {
                    if (m == l) continue;
                    if (d.slot(strands[m][0]).label == label ||
                        d.slot(strands[m][1]).label == label) {
                        partner = m;
                    }
                }
                if (partner < 0) { ok = false; break; }
                auto key = std::make_pair(std::min(l, partner), std::max(l, partner));
                auto it = arrows.find(key);
                if (it != arrows.end() && it->second != label) { ok = false; break; }
                arrows[key] = label;
            }
        }
        if (!ok || arrows.size() != 3) continue;
        const auto& pics = r3_pictures();
        for (int pi = 0; pi < static_cast<int>(pics.size()); ++pi) {
            if (pic_matches(d, strands, arrows, pics[pi])) {
                return pi < kSideSplit ? 1 : 2;
            }
        }
    }
    return 0;
}

int fresh_label(const Diagram& d) {
    return d.arrows().empty() ? 1 : d.arrows().rbegin()->first + 1;
}

std::vector<Component> copy_components(const Diagram& d) { return d.components(); }

std::map<int, int> signs_of(const Diagram& d) {
    std::map<int, int> s;
    for (auto& [label, a] : d.arrows()) s[label] = a.sign;
    return s;
}

bool gap_ok(const Diagram& d, EndpointRef g) {
    return g.comp >= 0 && g.comp < static_cast<int>(d.components().size()) &&
           g.slot >= 0 &&
           g.slot <= static_cast<int>(d.components()[g.comp].slots.size());
}

Diagram r1_insert(const Diagram& d, EndpointRef gap, int w, bool overFirst) {
    if (!gap_ok(d, gap)) throw ShapeError("R1 insert: gap out of range");
    int label = fresh_label(d);
    auto comps = copy_components(d);
    auto signs = signs_of(d);
    Slot s1{label, -1}, s2{label, -1};
    int sign = w;
    if (d.kind() == Kind::Knotted) {
        s1.over = overFirst ? 1 : 0;
        s2.over = overFirst ? 0 : 1;
        sign = overFirst ? w : -w;
    }
    auto& slots = comps[gap.comp].slots;
    slots.insert(slots.begin() + gap.slot, {s1, s2});
    signs[label] = sign;
    return Diagram(d.kind(), std::move(comps), std::move(signs));
}

Diagram r2_insert(const Diagram& d, EndpointRef ga, EndpointRef gb, int s,
                  bool overFirstGap) {
    if (!gap_ok(d, ga) || !gap_ok(d, gb)) throw ShapeError("R2 insert: gap out of range");
    if (ga.comp > gb.comp || (ga.comp == gb.comp && ga.slot > gb.slot)) {
        throw ShapeError("R2 insert: gaps must be in traversal order");
    }
    int l1 = fresh_label(d), l2 = l1 + 1;
    auto comps = copy_components(d);
    auto signs = signs_of(d);
    int8_t fa = -1, fb = -1;
    if (d.kind() == Kind::Knotted) {
        fa = overFirstGap ? 1 : 0;
        fb = overFirstGap ? 0 : 1;
    }
    std::vector<Slot> insA{{l1, fa}, {l2, fa}};
    std::vector<Slot> insB{{l1, fb}, {l2, fb}};
    if (ga.comp == gb.comp) {
        auto& slots = comps[ga.comp].slots;
        slots.insert(slots.begin() + gb.slot, insB.begin(), insB.end());
        slots.insert(slots.begin() + ga.slot, insA.begin(), insA.end());
    } else {
        auto& sa = comps[ga.comp].slots;
        sa.insert(sa.begin() + ga.slot, insA.begin(), insA.end());
        auto& sb = comps[gb.comp].slots;
        sb.insert(sb.begin() + gb.slot, insB.begin(), insB.end());
    }
    signs[l1] = s;
    signs[l2] = -s;
    return Diagram(d.kind(), std::move(comps), std::move(signs));
}

Diagram drop_labels(const Diagram& d, const std::vector<int>& labels) {
    std::set<int> gone(labels.begin(), labels.end());
    std::vector<Component> comps;
    for (const Component& c : d.components()) {
        Component nc{c.shape, {}};
        for (const Slot& s : c.slots) {
            if (!gone.count(s.label)) nc.slots.push_back(s);
        }
        comps.push_back(std::move(nc));
    }
    auto signs = signs_of(d);
    for (int l : labels) signs.erase(l);
    return Diagram(d.kind(), std::move(comps), std::move(signs));
}

bool is_kink(const Diagram& d, int label) {
    const Arrow& a = d.arrow(label);
    return a.first.comp == a.second.comp && a.second.slot == a.first.slot + 1;
}

// R1a names the over-at-first-visit kinks (flat: positive winding).
Move kink_move(const Diagram& d, int label) {
    if (d.kind() == Kind::Knotted) {
        return d.slot(d.arrow(label).first).over == 1 ? Move::R1a : Move::R1b;
    }
    return d.arrows().at(label).sign > 0 ? Move::R1a : Move::R1b;
}

// Coherent opposite-sign pair occupying two disjoint adjacent slot pairs in
// the same order, overs on one side. Returns the (c, c') labels when pairs
// p, q form one.
std::optional<std::array<int, 2>> r2_delete_pair(const Diagram& d,
                                                 const SlotPair& p,
                                                 const SlotPair& q) {
    std::set<EndpointRef> ps{p[0], p[1], q[0], q[1]};
    if (ps.size() != 4) return std::nullopt;
    int a1 = d.slot(p[0]).label, b1 = d.slot(p[1]).label;
    int a2 = d.slot(q[0]).label, b2 = d.slot(q[1]).label;
    if (a1 != a2 || b1 != b2 || a1 == b1) return std::nullopt;
    if (d.arrows().at(a1).sign + d.arrows().at(b1).sign != 0) return std::nullopt;
    if (d.kind() == Kind::Knotted) {
        int8_t fa0 = d.slot(p[0]).over, fa1 = d.slot(p[1]).over;
        int8_t fb0 = d.slot(q[0]).over, fb1 = d.slot(q[1]).over;
        bool oversOnP = fa0 == 1 && fa1 == 1 && fb0 == 0 && fb1 == 0;
        bool oversOnQ = fa0 == 0 && fa1 == 0 && fb0 == 1 && fb1 == 1;
        if (!oversOnP && !oversOnQ) return std::nullopt;
    }
    return std::array<int, 2>{a1, b1};
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const Diagram& d) {
    std::vector<MoveSite> sites;
    const auto& comps = d.components();

    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        for (int g = 0; g <= static_cast<int>(comps[ci].slots.size()); ++g) {
            for (int w : {1, -1}) {
                if (d.kind() == Kind::Knotted) {
                    for (bool of : {true, false}) {
                        MoveSite s;
                        s.move = of ? Move::R1a : Move::R1b;
                        s.dir = Direction::Insert;
                        s.gapA = {ci, g};
                        s.sign = w;
                        s.overFirstGap = of;
                        sites.push_back(s);
                    }
                } else {
                    MoveSite s;
                    s.move = w > 0 ? Move::R1a : Move::R1b;
                    s.dir = Direction::Insert;
                    s.gapA = {ci, g};
                    s.sign = w;
                    sites.push_back(s);
                }
            }
        }
    }
    for (auto& [label, a] : d.arrows()) {
        if (is_kink(d, label)) {
            MoveSite s;
            s.move = kink_move(d, label);
            s.dir = Direction::Delete;
            s.labels = {label};
            sites.push_back(s);
        }
    }

    std::vector<EndpointRef> gapList;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        for (int g = 0; g <= static_cast<int>(comps[ci].slots.size()); ++g) {
            gapList.push_back({ci, g});
        }
    }
    for (const EndpointRef& ga : gapList) {
        for (const EndpointRef& gb : gapList) {
            if (gb < ga) continue;
            for (int s : {1, -1}) {
                for (bool of : d.kind() == Kind::Knotted
                                   ? std::vector<bool>{true, false}
                                   : std::vector<bool>{true}) {
                    MoveSite ms;
                    ms.move = Move::R2a;
                    ms.dir = Direction::Insert;
                    ms.gapA = ga;
                    ms.gapB = gb;
                    ms.sign = s;
                    ms.overFirstGap = of;
                    sites.push_back(ms);
                }
            }
        }
    }
    auto pairs = adjacent_pairs(d);
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            if (auto labs = r2_delete_pair(d, pairs[i], pairs[j])) {
                MoveSite s;
                s.move = Move::R2a;
                s.dir = Direction::Delete;
                s.labels = {(*labs)[0], (*labs)[1]};
                sites.push_back(s);
            }
        }
    }

    // R3: triples of disjoint adjacent pairs forming a triangle of chords
    std::map<std::pair<int, int>, std::vector<int>> byChords;
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
        int a = d.slot(pairs[k][0]).label, b = d.slot(pairs[k][1]).label;
        byChords[{std::min(a, b), std::max(a, b)}].push_back(k);
    }
    std::vector<std::pair<int, int>> chordKeys;
    for (auto& [key, v] : byChords) chordKeys.push_back(key);
    for (size_t i = 0; i < chordKeys.size(); ++i) {
        for (size_t j = i + 1; j < chordKeys.size(); ++j) {
            auto [a1, b1] = chordKeys[i];
            auto [a2, b2] = chordKeys[j];
            std::set<int> chords{a1, b1, a2, b2};
            if (chords.size() != 3) continue;
            int shared = a1 == a2 || a1 == b2 ? a1 : (b1 == a2 || b1 == b2 ? b1 : -1);
            if (shared < 0) continue;
            std::vector<int> others;
            for (int c : chords) {
                if (c != shared) others.push_back(c);
            }
            auto third = byChords.find({std::min(others[0], others[1]),
                                        std::max(others[0], others[1])});
            if (third == byChords.end()) continue;
            for (int k1 : byChords[chordKeys[i]]) {
                for (int k2 : byChords[chordKeys[j]]) {
                    for (int k3 : third->second) {
                        std::set<EndpointRef> slots;
                        for (int k : {k1, k2, k3}) {
                            slots.insert(pairs[k][0]);
                            slots.insert(pairs[k][1]);
                        }
                        if (slots.size() != 6) continue;
                        std::array<SlotPair, 3> trip{pairs[k1], pairs[k2], pairs[k3]};
                        int side = match_r3(d, trip);
                        if (side != 0) {
                            MoveSite s;
                            s.move = Move::R3a;
                            s.dir = side == 1 ? Direction::LeftToRight
                                              : Direction::RightToLeft;
                            s.pairs = trip;
                            sites.push_back(s);
                        }
                    }
                }
            }
        }
    }
    return sites;
}

Diagram apply_move(const Diagram& d, const MoveSite& s) {
    switch (s.move) {
        case Move::R1a:
        case Move::R1b:
            if (s.dir == Direction::Insert) {
                bool of = d.kind() == Kind::Flat ? true : s.move == Move::R1a;
                int w = d.kind() == Kind::Flat ? (s.move == Move::R1a ? 1 : -1)
                                               : s.sign;
                return r1_insert(d, s.gapA, w, of);
            }
            if (s.labels.size() != 1 || !d.hasLabel(s.labels[0]) ||
                !is_kink(d, s.labels[0])) {
                throw ShapeError("R1 delete: not an isolated kink");
            }
            return drop_labels(d, s.labels);
        case Move::R2a:
            if (s.dir == Direction::Insert) {
                return r2_insert(d, s.gapA, s.gapB, s.sign, s.overFirstGap);
            }
            {
                if (s.labels.size() != 2) throw ShapeError("R2 delete: need two labels");
                auto pairs = adjacent_pairs(d);
                for (size_t i = 0; i < pairs.size(); ++i) {
                    for (size_t j = i + 1; j < pairs.size(); ++j) {
                        auto labs = r2_delete_pair(d, pairs[i], pairs[j]);
                        if (labs && (*labs)[0] == s.labels[0] &&
                            (*labs)[1] == s.labels[1]) {
                            return drop_labels(d, s.labels);
                        }
                    }
                }
                throw ShapeError("R2 delete: pair is not in the coherent configuration");
            }
        case Move::R3a: {
            if (match_r3(d, s.pairs) == 0) {
                throw ShapeError("R3: configuration does not match an oriented picture");
            }
            auto comps = copy_components(d);
            for (const auto& pr : s.pairs) {
                std::swap(comps[pr[0].comp].slots[pr[0].slot],
                          comps[pr[1].comp].slots[pr[1].slot]);
            }
            return Diagram(d.kind(), std::move(comps), signs_of(d));
        }
    }
    throw ShapeError("unknown move");
}

Walk random_walk(const Diagram& d, int steps, uint64_t seed) {
    if (steps < 0) throw ShapeError("steps must be >= 0");
    Rng rng(seed);
    Walk w{d, {}};
    for (int i = 0; i < steps; ++i) {
        auto sites = enumerate_moves(w.result);
        if (sites.empty()) break;
        const MoveSite& s = sites[rng.below(sites.size())];
        w.trace.push_back(s);
        w.result = apply_move(w.result, s);
    }
    return w;
}

Diagram replay(const Diagram& d, const std::vector<MoveSite>& trace) {
    Diagram cur = d;
    for (const MoveSite& s : trace) cur = apply_move(cur, s);
    return cur;
}

Diagram self_crossing_change(const Diagram& d, int label) {
    if (d.kind() != Kind::Knotted) {
        throw ShapeError("self_crossing_change expects a knotted diagram");
    }
    const Arrow& a = d.arrow(label);
    if (a.first.comp != a.second.comp) {
        throw ShapeError("self_crossing_change needs an intra-component crossing");
    }
    auto comps = copy_components(d);
    auto signs = signs_of(d);
    auto flip = [&](EndpointRef p) {
        auto& s = comps[p.comp].slots[p.slot];
        s.over = s.over == 1 ? 0 : 1;
    };
    flip(a.first);
    flip(a.second);
    signs[label] = -signs[label];
    return Diagram(d.kind(), std::move(comps), std::move(signs));
}

std::vector<int> intra_component_labels(const Diagram& d) {
    std::vector<int> out;
    for (auto& [label, a] : d.arrows()) {
        if (a.first.comp == a.second.comp) out.push_back(label);
    }
    return out;
}

namespace {

std::string move_name(Move m) {
    switch (m) {
        case Move::R1a: return "R1a";
        case Move::R1b: return "R1b";
        case Move::R2a: return "R2a";
        case Move::R3a: return "R3a";
    }
    return "?";
}

std::string dir_name(Direction d) {
    switch (d) {
        case Direction::Insert: return "insert";
        case Direction::Delete: return "delete";
        case Direction::LeftToRight: return "left-to-right";
        case Direction::RightToLeft: return "right-to-left";
    }
    return "?";
}

}  // namespace

nlohmann::json to_json(const MoveSite& s) {
    nlohmann::json j;
    j["move"] = move_name(s.move);
    j["direction"] = dir_name(s.dir);
    nlohmann::json slots = nlohmann::json::array();
    nlohmann::json params = nlohmann::json::object();
    if (s.move == Move::R3a) {
        for (const auto& pr : s.pairs) {
            for (const EndpointRef& p : pr) slots.push_back({p.comp, p.slot});
        }
    } else if (s.dir == Direction::Insert) {
        slots.push_back({s.gapA.comp, s.gapA.slot});
        if (s.move == Move::R2a) slots.push_back({s.gapB.comp, s.gapB.slot});
        params["sign"] = s.sign;
        params["over_first"] = s.overFirstGap;
    } else {
        params["labels"] = s.labels;
    }
    j["slots"] = slots;
    j["params"] = params;
    return j;
}

MoveSite movesite_from_json(const nlohmann::json& j) {
    MoveSite s;
    std::string m = j.at("move");
    if (m == "R1a") s.move = Move::R1a;
    else if (m == "R1b") s.move = Move::R1b;
    else if (m == "R2a") s.move = Move::R2a;
    else if (m == "R3a") s.move = Move::R3a;
    else throw ParseError("unknown move " + m);
    std::string dir = j.at("direction");
    if (dir == "insert") s.dir = Direction::Insert;
    else if (dir == "delete") s.dir = Direction::Delete;
    else if (dir == "left-to-right") s.dir = Direction::LeftToRight;
    else if (dir == "right-to-left") s.dir = Direction::RightToLeft;
    else throw ParseError("unknown direction " + dir);
    const auto& slots = j.at("slots");
    if (s.move == Move::R3a) {
        if (slots.size() != 6) throw ParseError("R3 site needs 6 slots");
        for (int k = 0; k < 3; ++k) {
            for (int e = 0; e < 2; ++e) {
                s.pairs[k][e] = {slots[2 * k + e][0], slots[2 * k + e][1]};
            }
        }
    } else if (s.dir == Direction::Insert) {
        s.gapA = {slots.at(0)[0], slots.at(0)[1]};
        if (s.move == Move::R2a) s.gapB = {slots.at(1)[0], slots.at(1)[1]};
        s.sign = j.at("params").at("sign");
        s.overFirstGap = j.at("params").at("over_first");
    } else {
        s.labels = j.at("params").at("labels").get<std::vector<int>>();
    }
    return s;
}

}  // namespace tricob
