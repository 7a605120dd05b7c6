#include <set>

#include "doctest.h"
#include "tricobracket/diagram.hpp"
#include "tricobracket/smoothing.hpp"

using namespace tricob;

TEST_CASE("pair classification on a line") {
    CHECK(classify_pair(parse_gauss_code("(line) 1+ 2+ 1+ 2+", Kind::Flat), 1, 2) ==
          PairClass::Interleaved);
    CHECK(classify_pair(parse_gauss_code("(line) 1+ 2+ 2+ 1+", Kind::Flat), 1, 2) ==
          PairClass::Parallel);
    CHECK(classify_pair(parse_gauss_code("(line) 1+ 1+ 2+ 2+", Kind::Flat), 1, 2) ==
          PairClass::Parallel);
    Diagram d = parse_gauss_code("(line) 1+ 2+ 1+ 2+", Kind::Flat);
    CHECK_THROWS_AS(classify_pair(d, 1, 1), ShapeError);
    CHECK_THROWS_AS(classify_pair(d, 1, 9), ShapeError);
}

TEST_CASE("pair classification is symmetric and total") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Diagram d = random_diagram(2 + static_cast<int>(seed % 6), {Shape::Circle},
                                   Kind::Knotted, 900 + seed);
        std::vector<int> labs;
        for (auto& [l, a] : d.arrows()) labs.push_back(l);
        for (size_t i = 0; i < labs.size(); ++i) {
            for (size_t j = i + 1; j < labs.size(); ++j) {
                PairClass ij = classify_pair(d, labs[i], labs[j]);
                PairClass ji = classify_pair(d, labs[j], labs[i]);
                CHECK(ij == ji);
            }
        }
    }
}

TEST_CASE("smooth_one: virtual trefoil splits into two circles") {
    Diagram t = parse_gauss_code("(circle) O1+ O2+ U1+ U2+", Kind::Knotted);
    SmoothingResult r = smooth_one(t, 1);
    CHECK(r.result.components().size() == 2);
    CHECK(r.result.crossings() == 1);  // arrow 2 survives
    const Arrow& a = r.result.arrow(2);
    CHECK(a.first.comp != a.second.comp);  // inter-component
    int i01 = intersection_number(r.result, 0, 1);
    CHECK(std::abs(i01) == 1);
    CHECK(i01 == -intersection_number(r.result, 1, 0));
}

TEST_CASE("smooth_one: kink gives two empty circles") {
    Diagram d = parse_gauss_code("(circle) O1+ U1+", Kind::Knotted);
    CHECK(serialize(smooth_one(d, 1).result) == "(circle) ; (circle)");
}

TEST_CASE("smooth_one: flat long curve keeps chord 2 on the loop") {
    Diagram d = parse_gauss_code("(line) 1+ 2+ 2+ 1+", Kind::Flat);
    SmoothingResult r = smooth_one(d, 1);
    CHECK(r.result.components().size() == 2);
    // chord 2 is intra-component on a circle; the line is left empty
    const Arrow& a = r.result.arrow(2);
    CHECK(a.first.comp == a.second.comp);
    CHECK(r.result.components()[a.first.comp].shape == Shape::Circle);
}

TEST_CASE("smooth_one rejects multi-component input and unknown labels") {
    Diagram two = parse_gauss_code("(circle) O1+ ; (circle) U1+", Kind::Knotted);
    CHECK_THROWS_AS(smooth_one(two, 1), ShapeError);
    Diagram t = parse_gauss_code("(circle) O1+ U1+", Kind::Knotted);
    CHECK_THROWS_AS(smooth_one(t, 5), ShapeError);
}

TEST_CASE("smooth_pair: nested and disjoint examples") {
    SmoothingResult nested =
        smooth_pair(parse_gauss_code("(line) O1+ O2+ U2+ U1+", Kind::Knotted), 1, 2);
    CHECK(serialize(nested.result) == "(line) ; (circle) ; (circle)");
    SmoothingResult disjoint =
        smooth_pair(parse_gauss_code("(line) O1+ U1+ O2+ U2+", Kind::Knotted), 1, 2);
    CHECK(serialize(disjoint.result) == "(line) ; (circle) ; (circle)");
    CHECK_THROWS_AS(
        smooth_pair(parse_gauss_code("(line) O1+ O2+ U1+ U2+", Kind::Knotted), 1, 2),
        ShapeError);
}

TEST_CASE("double splice: 3 components for parallel, 1 for interleaved") {
    int parallel = 0, interleaved = 0;
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Diagram d = random_diagram(2 + static_cast<int>(seed % 6),
                                   {seed % 2 ? Shape::Circle : Shape::Line},
                                   Kind::Knotted, 1700 + seed);
        std::vector<int> labs;
        for (auto& [l, a] : d.arrows()) labs.push_back(l);
        for (size_t i = 0; i < labs.size(); ++i) {
            for (size_t j = i + 1; j < labs.size(); ++j) {
                Diagram s = splice_all(d, {labs[i], labs[j]});
                if (classify_pair(d, labs[i], labs[j]) == PairClass::Parallel) {
                    CHECK(s.components().size() == 3);
                    ++parallel;
                } else {
                    CHECK(s.components().size() == 1);
                    ++interleaved;
                }
            }
        }
    }
    CHECK(parallel > 100);
    CHECK(interleaved > 100);
}

TEST_CASE("arrow conservation under smoothing") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Diagram d = random_diagram(3 + static_cast<int>(seed % 5), {Shape::Line},
                                   Kind::Knotted, 2200 + seed);
        std::vector<int> labs;
        for (auto& [l, a] : d.arrows()) labs.push_back(l);
        SmoothingResult one = smooth_one(d, labs[0]);
        CHECK(one.result.crossings() == d.crossings() - 1);
        for (size_t i = 0; i < labs.size(); ++i) {
            for (size_t j = i + 1; j < labs.size(); ++j) {
                if (classify_pair(d, labs[i], labs[j]) == PairClass::Parallel) {
                    SmoothingResult two = smooth_pair(d, labs[i], labs[j]);
                    CHECK(two.result.crossings() == d.crossings() - 2);
                }
            }
        }
    }
}

TEST_CASE("C2/C3 roles are independent of splice order") {
    // smoothing {ci, cj} and {cj, ci} gives the same three components with
    // C2 and C3 exchanged
    for (uint64_t seed = 0; seed < 80; ++seed) {
        Diagram d = random_diagram(2 + static_cast<int>(seed % 6), {Shape::Line},
                                   Kind::Knotted, 3100 + seed);
        std::vector<int> labs;
        for (auto& [l, a] : d.arrows()) labs.push_back(l);
        for (size_t i = 0; i < labs.size(); ++i) {
            for (size_t j = i + 1; j < labs.size(); ++j) {
                if (classify_pair(d, labs[i], labs[j]) != PairClass::Parallel) continue;
                Diagram ij = smooth_pair(d, labs[i], labs[j]).result;
                Diagram ji = smooth_pair(d, labs[j], labs[i]).result;
                Diagram swapped(ji.kind(),
                                {ji.components()[0], ji.components()[2],
                                 ji.components()[1]},
                                [&] {
                                    std::map<int, int> s;
                                    for (auto& [l, a] : ji.arrows()) s[l] = a.sign;
                                    return s;
                                }());
                CHECK(serialize(ij) == serialize(swapped));
            }
        }
    }
}

TEST_CASE("intersection number: no inter-component arrows means 0") {
    Diagram d = parse_gauss_code("(circle) O1+ U1+ ; (circle) O2- U2-", Kind::Knotted);
    CHECK(intersection_number(d, 0, 1) == 0);
    CHECK_THROWS_AS(intersection_number(d, 0, 0), ShapeError);
    CHECK_THROWS_AS(intersection_number(d, 0, 5), ShapeError);
}

TEST_CASE("intersection number antisymmetry on random smoothings") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Diagram d = random_diagram(2 + static_cast<int>(seed % 7), {Shape::Circle},
                                   Kind::Knotted, 4400 + seed);
        std::vector<int> labs;
        for (auto& [l, a] : d.arrows()) labs.push_back(l);
        Diagram r = smooth_one(d, labs[seed % labs.size()]).result;
        CHECK(intersection_number(r, 0, 1) == -intersection_number(r, 1, 0));
    }
}
