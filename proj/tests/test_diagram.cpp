#include "doctest.h"
#include "tricobracket/diagram.hpp"
#include "tricobracket/rng.hpp"

using namespace tricob;

TEST_CASE("parse: flat long curve with nested chords") {
    Diagram d = parse_gauss_code("(line) 1+ 2+ 2+ 1+", Kind::Flat);
    CHECK(d.components().size() == 1);
    CHECK(d.components()[0].shape == Shape::Line);
    CHECK(d.crossings() == 2);
    CHECK(d.arrows().at(1).sign == 1);
    CHECK(d.arrows().at(2).sign == 1);
}

TEST_CASE("parse: virtual trefoil") {
    Diagram d = parse_gauss_code("(circle) O1+ O2+ U1+ U2+", Kind::Knotted);
    CHECK(d.crossings() == 2);
    CHECK(d.slot(d.arrow(1).first).over == 1);
    CHECK(d.slot(d.arrow(1).second).over == 0);
}

TEST_CASE("parse errors") {
    // sign mismatch between the two occurrences
    CHECK_THROWS_AS(parse_gauss_code("(circle) O1+ U1-", Kind::Knotted), ParseError);
    // label appearing once
    CHECK_THROWS_AS(parse_gauss_code("(circle) O1+ U1+ O2+", Kind::Knotted), ParseError);
    // O/U tokens on a flat parse
    CHECK_THROWS_AS(parse_gauss_code("(circle) O1+ U1+", Kind::Flat), ParseError);
    // missing O/U on a knotted parse
    CHECK_THROWS_AS(parse_gauss_code("(circle) 1+ 1+", Kind::Knotted), ParseError);
    // two O markers
    CHECK_THROWS_AS(parse_gauss_code("(circle) O1+ O1+", Kind::Knotted), ParseError);
    // token before any component
    CHECK_THROWS_AS(parse_gauss_code("1+ (circle) 1+", Kind::Flat), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("", Kind::Flat), ParseError);
}

TEST_CASE("serialize: canonical relabeling by first visit") {
    Diagram d = parse_gauss_code("(circle) O7+ O9+ U7+ U9+", Kind::Knotted);
    CHECK(serialize(d) == "(circle) O1+ O2+ U1+ U2+");
}

TEST_CASE("serialize: empty circle and round trips") {
    CHECK(serialize(parse_gauss_code("(circle)", Kind::Knotted)) == "(circle)");
    std::string code = "(line) 1+ 2- 2- 1+";
    CHECK(serialize(parse_gauss_code(code, Kind::Flat)) == code);
    std::string multi = "(circle) O1+ ; (circle) U1+";
    CHECK(serialize(parse_gauss_code(multi, Kind::Knotted)) == multi);
}

TEST_CASE("round trip on random diagrams") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Kind kind = seed % 2 ? Kind::Flat : Kind::Knotted;
        Diagram d = random_diagram(static_cast<int>(seed % 7),
                                   {Shape::Circle, Shape::Line}, kind, seed);
        Diagram back = parse_gauss_code(serialize(d), kind);
        CHECK(serialize(back) == serialize(d));
        CHECK(back.crossings() == d.crossings());
    }
}

TEST_CASE("flat_sign from over position") {
    Diagram t = parse_gauss_code("(circle) O1+ O2+ U1+ U2+", Kind::Knotted);
    CHECK(flat_sign(t, 1) == 1);  // over at first visit, eps = +1
    CHECK(flat_sign(parse_gauss_code("(circle) U1+ O1+", Kind::Knotted), 1) == -1);
    CHECK(flat_sign(parse_gauss_code("(circle) U1- O1-", Kind::Knotted), 1) == 1);
    CHECK_THROWS_AS(flat_sign(t, 99), ShapeError);
}

TEST_CASE("iota places overs at first visits") {
    CHECK(serialize(iota(parse_gauss_code("(line) 1+ 2+ 2+ 1+", Kind::Flat))) ==
          "(line) O1+ O2+ U2+ U1+");
    CHECK(serialize(iota(parse_gauss_code("(circle) 1- 1-", Kind::Flat))) ==
          "(circle) O1- U1-");
}

TEST_CASE("flat_sign inverts iota's sign assignment") {
    for (uint64_t seed = 100; seed < 200; ++seed) {
        Diagram d = random_diagram(1 + static_cast<int>(seed % 6), {Shape::Circle},
                                   Kind::Flat, seed);
        Diagram k = iota(d);
        for (auto& [label, a] : d.arrows()) {
            CHECK(flat_sign(k, label) == a.sign);
        }
        CHECK(serialize(forget_over(k)) == serialize(d));
    }
}

TEST_CASE("first-visit order is a total order on endpoints") {
    Diagram d = random_diagram(6, {Shape::Circle, Shape::Circle}, Kind::Knotted, 5);
    std::vector<int> seen;
    for (auto& [label, a] : d.arrows()) {
        CHECK(d.globalIndex(a.first) < d.globalIndex(a.second));
        seen.push_back(d.globalIndex(a.first));
        seen.push_back(d.globalIndex(a.second));
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
}

TEST_CASE("random_diagram: deterministic, validated, empty case") {
    CHECK(serialize(random_diagram(0, {Shape::Circle}, Kind::Knotted, 1)) ==
          "(circle)");
    Diagram a = random_diagram(5, {Shape::Line}, Kind::Knotted, 42);
    Diagram b = random_diagram(5, {Shape::Line}, Kind::Knotted, 42);
    CHECK(serialize(a) == serialize(b));
    CHECK(a.crossings() == 5);
    CHECK(a.components()[0].shape == Shape::Line);
    // parses and validates
    CHECK(serialize(parse_gauss_code(serialize(a), Kind::Knotted)) == serialize(a));
    CHECK_THROWS_AS(random_diagram(3, {}, Kind::Flat, 0), ShapeError);
}
