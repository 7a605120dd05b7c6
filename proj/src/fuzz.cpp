#include "tricobracket/fuzz.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <functional>

#include "tricobracket/eval.hpp"
#include "tricobracket/invariants.hpp"
#include "tricobracket/moves.hpp"
#include "tricobracket/rng.hpp"

namespace tricob {

namespace {

struct Target {
    Kind kind;
    std::vector<Shape> shapes;
    std::function<std::string(const Diagram&)> value;
    bool selfChangeable = false;
};

Target make_target(const FuzzConfig& cfg) {
    if (cfg.invariant == "affine-index") {
        return {Kind::Knotted,
                {Shape::Circle},
                [m = cfg.mirror](const Diagram& d) { return affine_index(d, m).str(); }};
    }
    if (cfg.invariant == "flat-index") {
        return {Kind::Flat,
                {Shape::Circle},
                [m = cfg.mirror](const Diagram& d) { return flat_index(d, m).str(); }};
    }
    if (cfg.invariant == "mu123" || cfg.invariant == "lambda" ||
        cfg.invariant == "nu") {
        Pattern p = builtin_pattern(cfg.invariant == "mu123" ? "mu123" : cfg.invariant,
                                    cfg.sigma);
        return {Kind::Knotted,
                {Shape::Circle, Shape::Circle, Shape::Circle},
                [p](const Diagram& d) { return std::to_string(evaluate(p, d)); },
                true};
    }
    if (cfg.invariant == "triple") {
        Pattern p = builtin_pattern(cfg.pattern, cfg.sigma);
        return {Kind::Knotted,
                {Shape::Line},
                [p](const Diagram& d) { return triple_invariant(d, p).str(); }};
    }
    if (cfg.invariant == "flat-triple") {
        Pattern p = builtin_pattern(cfg.pattern, cfg.sigma);
        return {Kind::Flat,
                {Shape::Circle},
                [p](const Diagram& d) { return flat_triple_invariant(d, p).str(); }};
    }
    throw ShapeError("unknown fuzz invariant " + cfg.invariant);
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
    Target target = make_target(cfg);
    FuzzReport report;
    report.checked = cfg.diagrams;
    int firstBad = cfg.diagrams;
    FuzzViolation bad;

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < cfg.diagrams; ++i) {
        bool skip;
#pragma omp critical
        skip = i > firstBad;
        if (skip) continue;
        uint64_t seed = Rng::mix(cfg.seed, static_cast<uint64_t>(i));
        Diagram d = random_diagram(cfg.crossings, target.shapes, target.kind, seed);
        std::string before = target.value(d);

        std::optional<FuzzViolation> found;
        Walk w = random_walk(d, cfg.steps, seed ^ 0x9e3779b97f4a7c15ULL);
        std::string after = target.value(w.result);
        if (after != before) {
            nlohmann::json trace = nlohmann::json::array();
            for (const MoveSite& s : w.trace) trace.push_back(to_json(s));
            found = FuzzViolation{i, serialize(d), serialize(w.result),
                                  trace, before, after};
        }
        if (!found && cfg.selfChanges > 0 && target.selfChangeable) {
            Rng rng(seed ^ 0x6a09e667f3bcc909ULL);
            Diagram cur = d;
            nlohmann::json trace = nlohmann::json::array();
            for (int k = 0; k < cfg.selfChanges; ++k) {
                std::vector<int> intra = intra_component_labels(cur);
                if (intra.empty()) break;
                int label = intra[rng.below(intra.size())];
                cur = self_crossing_change(cur, label);
                trace.push_back({{"self_crossing_change", label}});
                std::string now = target.value(cur);
                if (now != before) {
                    found = FuzzViolation{i, serialize(d), serialize(cur),
                                          trace, before, now};
                    break;
                }
            }
        }
        if (found) {
#pragma omp critical
            {
                if (i < firstBad) {
                    firstBad = i;
                    bad = *found;
                }
            }
        }
    }
    if (firstBad < cfg.diagrams) report.violation = bad;
    return report;
}

}  // namespace tricob
