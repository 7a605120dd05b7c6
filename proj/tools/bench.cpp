// Timing comparison of the OpenMP evaluation kernels against the serial
// reference paths, on seeded random inputs.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tricobracket/diagram.hpp"
#include "tricobracket/eval.hpp"
#include "tricobracket/invariants.hpp"
#include "tricobracket/pattern.hpp"

using namespace tricob;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int crossings = argc > 1 ? std::atoi(argv[1]) : 60;
    int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    int threads = max_threads();

    Pattern mu = builtin_pattern("mu123");
    printf("benchmark: %d crossings, %d reps, %d threads available\n\n", crossings,
           reps, threads);

    // pattern evaluation: parallel vs serial vs brute-force oracle
    Diagram link = random_diagram(crossings, {Shape::Circle, Shape::Circle, Shape::Circle},
                                  Kind::Knotted, 42);
    long long v1 = 0, v2 = 0, v3 = 0;
    set_threads(threads);
    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) v1 = evaluate(mu, link);
    double par = ms_since(t0) / reps;
    set_threads(1);
    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) v2 = evaluate(mu, link);
    double ser = ms_since(t0) / reps;
    t0 = Clock::now();
    for (int r = 0; r < reps; ++r) v3 = brute_force_evaluate(mu, link);
    double brute = ms_since(t0) / reps;
    printf("evaluate(mu123) on %d-crossing 3-component link:\n", crossings);
    printf("  omp x%-2d : %9.3f ms   value %lld\n", threads, par, v1);
    printf("  serial  : %9.3f ms   value %lld\n", ser, v2);
    printf("  oracle  : %9.3f ms   value %lld\n\n", brute, v3);
    if (v1 != v2 || v2 != v3) {
        printf("MISMATCH between kernels!\n");
        return 1;
    }

    // triple invariant: parallel pair loop
    Diagram longKnot = random_diagram(crossings / 2, {Shape::Line}, Kind::Knotted, 7);
    set_threads(threads);
    t0 = Clock::now();
    LaurentPoly a;
    for (int r = 0; r < reps; ++r) a = triple_invariant(longKnot, mu);
    double tpar = ms_since(t0) / reps;
    set_threads(1);
    t0 = Clock::now();
    LaurentPoly b;
    for (int r = 0; r < reps; ++r) b = triple_invariant(longKnot, mu);
    double tser = ms_since(t0) / reps;
    printf("triple_invariant(mu123) on %d-crossing long knot:\n", crossings / 2);
    printf("  omp x%-2d : %9.3f ms   value %s\n", threads, tpar, a.str().c_str());
    printf("  serial  : %9.3f ms   value %s\n", tser, b.str().c_str());
    if (!(a == b)) {
        printf("MISMATCH between kernels!\n");
        return 1;
    }
    printf("\nspeedup: evaluate %.2fx, triple %.2fx\n", ser / par, tser / tpar);
    return 0;
}
