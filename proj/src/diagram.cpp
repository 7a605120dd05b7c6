#include "tricobracket/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "tricobracket/rng.hpp"

namespace tricob {

Diagram::Diagram(Kind kind, std::vector<Component> comps, std::map<int, int> signs)
    : kind_(kind), comps_(std::move(comps)) {
    std::map<int, std::vector<EndpointRef>> eps;
    for (int ci = 0; ci < static_cast<int>(comps_.size()); ++ci) {
        for (int si = 0; si < static_cast<int>(comps_[ci].slots.size()); ++si) {
            eps[comps_[ci].slots[si].label].push_back({ci, si});
        }
    }
    if (eps.size() != signs.size()) {
        throw ParseError("crossing labels and signs disagree");
    }
    for (auto& [label, ps] : eps) {
        auto it = signs.find(label);
        if (it == signs.end()) throw ParseError("sign missing for crossing " + std::to_string(label));
        if (it->second != 1 && it->second != -1) throw ParseError("sign must be +-1");
        if (ps.size() != 2) {
            throw ParseError("crossing " + std::to_string(label) + " occurs " +
                             std::to_string(ps.size()) + " times (want 2)");
        }
        int8_t f0 = slot(ps[0]).over, f1 = slot(ps[1]).over;
        if (kind_ == Kind::Knotted) {
            if (f0 < 0 || f1 < 0 || f0 + f1 != 1) {
                throw ParseError("crossing " + std::to_string(label) +
                                 " needs exactly one O and one U endpoint");
            }
        } else if (f0 != -1 || f1 != -1) {
            throw ParseError("flat diagrams carry no over/under markers");
        }
        arrows_.emplace(label, Arrow{it->second, ps[0], ps[1]});
    }
}

const Arrow& Diagram::arrow(int label) const {
    auto it = arrows_.find(label);
    if (it == arrows_.end()) {
        throw ShapeError("unknown crossing label " + std::to_string(label));
    }
    return it->second;
}

int Diagram::globalIndex(EndpointRef p) const {
    int idx = 0;
    for (int ci = 0; ci < p.comp; ++ci) idx += static_cast<int>(comps_[ci].slots.size());
    return idx + p.slot;
}

int flat_sign(const Diagram& d, int label) {
    const Arrow& a = d.arrow(label);
    if (d.kind() == Kind::Flat) return a.sign;
    return d.slot(a.first).over == 1 ? a.sign : -a.sign;
}

Diagram iota(const Diagram& d) {
    if (d.kind() != Kind::Flat) throw ShapeError("iota expects a flat diagram");
    std::vector<Component> comps = d.components();
    std::map<int, int> signs;
    for (auto& [label, a] : d.arrows()) {
        signs[label] = a.sign;
        comps[a.first.comp].slots[a.first.slot].over = 1;
        comps[a.second.comp].slots[a.second.slot].over = 0;
    }
    return Diagram(Kind::Knotted, std::move(comps), std::move(signs));
}

Diagram forget_over(const Diagram& d) {
    if (d.kind() != Kind::Knotted) throw ShapeError("forget_over expects a knotted diagram");
    std::vector<Component> comps = d.components();
    std::map<int, int> signs;
    for (auto& [label, a] : d.arrows()) signs[label] = flat_sign(d, label);
    for (auto& c : comps) {
        for (auto& s : c.slots) s.over = -1;
    }
    return Diagram(Kind::Flat, std::move(comps), std::move(signs));
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Diagram parse_gauss_code(const std::string& text, Kind kind) {
    std::vector<Component> comps;
    std::map<int, int> signs;
    bool haveComp = false;
    int tokenNo = 0;
    for (const std::string& tok : tokenize(text)) {
        ++tokenNo;
        if (tok == ";") {
            if (!haveComp) throw ParseError("token 1: ';' before any component");
            haveComp = false;
            continue;
        }
        if (tok == "(circle)" || tok == "(line)") {
            comps.push_back({tok == "(circle)" ? Shape::Circle : Shape::Line, {}});
            haveComp = true;
            continue;
        }
        if (!haveComp) {
            throw ParseError("token " + std::to_string(tokenNo) + " '" + tok +
                             "': expected (circle) or (line)");
        }
        std::string rest = tok;
        int8_t over = -1;
        if (kind == Kind::Knotted) {
            if (rest.empty() || (rest[0] != 'O' && rest[0] != 'U')) {
                throw ParseError("token " + std::to_string(tokenNo) + " '" + tok +
                                 "': knotted tokens start with O or U");
            }
            over = rest[0] == 'O' ? 1 : 0;
            rest.erase(0, 1);
        }
        if (rest.size() < 2 || (rest.back() != '+' && rest.back() != '-')) {
            throw ParseError("token " + std::to_string(tokenNo) + " '" + tok +
                             "': expected <label><sign>");
        }
        int sign = rest.back() == '+' ? 1 : -1;
        rest.pop_back();
        int label = 0;
        for (char c : rest) {
            if (c < '0' || c > '9') {
                throw ParseError("token " + std::to_string(tokenNo) + " '" + tok +
                                 "': label must be a positive integer");
            }
            label = label * 10 + (c - '0');
        }
        if (label <= 0) {
            throw ParseError("token " + std::to_string(tokenNo) + " '" + tok +
                             "': label must be positive");
        }
        auto it = signs.find(label);
        if (it != signs.end() && it->second != sign) {
            throw ParseError("crossing " + std::to_string(label) +
                             ": signs disagree between its two endpoints");
        }
        signs[label] = sign;
        comps.back().slots.push_back({label, over});
    }
    if (comps.empty()) throw ParseError("empty Gauss code");
    return Diagram(kind, std::move(comps), std::move(signs));
}

std::string serialize(const Diagram& d) {
    std::map<int, int> relabel;
    int next = 1;
    for (const Component& c : d.components()) {
        for (const Slot& s : c.slots) {
            if (relabel.emplace(s.label, next).second) ++next;
        }
    }
    std::string out;
    bool firstComp = true;
    for (const Component& c : d.components()) {
        if (!firstComp) out += " ; ";
        firstComp = false;
        out += c.shape == Shape::Circle ? "(circle)" : "(line)";
        for (const Slot& s : c.slots) {
            out += ' ';
            if (s.over == 1) out += 'O';
            else if (s.over == 0) out += 'U';
            out += std::to_string(relabel.at(s.label));
            out += d.arrows().at(s.label).sign > 0 ? '+' : '-';
        }
    }
    return out;
}

Diagram random_diagram(int crossings, const std::vector<Shape>& shapes,
                       Kind kind, uint64_t seed) {
    if (crossings < 0) throw ShapeError("crossing count must be >= 0");
    if (shapes.empty()) throw ShapeError("need at least one component");
    Rng rng(seed);
    std::vector<Component> comps;
    comps.reserve(shapes.size());
    for (Shape sh : shapes) comps.push_back({sh, {}});
    std::map<int, int> signs;
    for (int label = 1; label <= crossings; ++label) {
        for (int e = 0; e < 2; ++e) {
            int total = 0;
            for (auto& c : comps) total += static_cast<int>(c.slots.size()) + 1;
            int g = static_cast<int>(rng.below(total));
            for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
                int here = static_cast<int>(comps[ci].slots.size()) + 1;
                if (g < here) {
                    comps[ci].slots.insert(comps[ci].slots.begin() + g, {label, -1});
                    break;
                }
                g -= here;
            }
        }
        signs[label] = rng.sign();
    }
    if (kind == Kind::Knotted) {
        std::map<int, int8_t> firstFlag;
        for (auto& c : comps) {
            for (auto& s : c.slots) {
                auto it = firstFlag.find(s.label);
                if (it == firstFlag.end()) {
                    s.over = rng.flip() ? 1 : 0;
                    firstFlag[s.label] = s.over;
                } else {
                    s.over = it->second == 1 ? 0 : 1;
                }
            }
        }
    }
    return Diagram(kind, std::move(comps), std::move(signs));
}

}  // namespace tricob
