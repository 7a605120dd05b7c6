#include "tricobracket/invariants.hpp"

#include <algorithm>

#include "tricobracket/eval.hpp"
#include "tricobracket/smoothing.hpp"

namespace tricob {

namespace {

void need_single(const Diagram& d, Kind kind, const char* who) {
    if (d.kind() != kind) {
        throw ShapeError(std::string(who) + ": wrong diagram kind");
    }
    if (d.components().size() != 1) {
        throw ShapeError(std::string(who) + ": needs a single component, got " +
                         std::to_string(d.components().size()));
    }
}

LaurentPoly index_poly(const Diagram& d, bool mirror) {
    LaurentPoly poly;
    for (auto& [label, arrow] : d.arrows()) {
        SmoothingResult r = smooth_one(d, label, mirror);
        int e = intersection_number(r.result, 1, 0);  // C2 . C1
        poly.addBinomial(e, arrow.sign);
    }
    return poly;
}

// Labels in first-visit order, the ordering the pair sum uses for roles.
std::vector<int> labels_by_first_visit(const Diagram& d) {
    std::vector<int> labs;
    for (auto& [label, a] : d.arrows()) labs.push_back(label);
    std::sort(labs.begin(), labs.end(), [&](int x, int y) {
        return d.globalIndex(d.arrow(x).first) < d.globalIndex(d.arrow(y).first);
    });
    return labs;
}

// Twice the sum over unordered parallel pairs, earlier chord in the c_i
// role. The exponent pattern is evaluated on the iota image of the smoothed
// triple's underlying pointed curve.
LaurentPoly pair_sum(const Diagram& d, const Pattern& p) {
    if (p.componentCount != 3) {
        throw ShapeError("triple invariants need a 3-component pattern");
    }
    std::vector<int> labs = labels_by_first_visit(d);
    LaurentPoly poly;
    int n = static_cast<int>(labs.size());
    std::vector<std::pair<int, int>> parallel;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (classify_pair(d, labs[i], labs[j]) == PairClass::Parallel) {
                parallel.push_back({labs[i], labs[j]});
            }
        }
    }
    int m = static_cast<int>(parallel.size());
    std::vector<long long> exps(m);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < m; ++k) {
        auto [ci, cj] = parallel[k];
        SmoothingResult sm = smooth_pair(d, ci, cj);
        Diagram curve = d.kind() == Kind::Knotted ? forget_over(sm.result) : sm.result;
        exps[k] = evaluate(p, iota(curve));
    }
    for (int k = 0; k < m; ++k) {
        auto [ci, cj] = parallel[k];
        long long c = 2LL * d.arrows().at(ci).sign * d.arrows().at(cj).sign;
        poly.addBinomial(static_cast<int>(exps[k]), c);
    }
    return poly;
}

}  // namespace

LaurentPoly affine_index(const Diagram& d, bool mirror) {
    need_single(d, Kind::Knotted, "affine_index");
    if (d.components()[0].shape != Shape::Circle) {
        throw ShapeError("affine_index: needs a closed (circle) component");
    }
    return index_poly(d, mirror);
}

LaurentPoly flat_index(const Diagram& d, bool mirror) {
    need_single(d, Kind::Flat, "flat_index");
    return index_poly(d, mirror);
}

long long mu123(const Diagram& d) {
    if (d.kind() != Kind::Knotted || d.components().size() != 3) {
        throw ShapeError("mu123: needs a knotted 3-component diagram, got " +
                         std::to_string(d.components().size()) + " component(s)");
    }
    return evaluate(builtin_pattern("mu123"), d);
}

LaurentPoly triple_invariant(const Diagram& d, const Pattern& p) {
    need_single(d, Kind::Knotted, "triple_invariant");
    if (d.components()[0].shape != Shape::Line) {
        throw ShapeError("triple_invariant: needs a long (line) component");
    }
    return pair_sum(d, p);
}

LaurentPoly flat_triple_invariant(const Diagram& d, const Pattern& p) {
    need_single(d, Kind::Flat, "flat_triple_invariant");
    return pair_sum(d, p);
}

}  // namespace tricob
