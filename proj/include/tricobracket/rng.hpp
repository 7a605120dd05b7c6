#pragma once

#include <cstdint>

namespace tricob {

// Deterministic splitmix64 stream. Used instead of <random> distributions so
// that seeded runs are bit-identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0
    uint64_t below(uint64_t n) {
        // rejection sampling to stay unbiased
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    int sign() { return (next() & 1) ? 1 : -1; }
    bool flip() { return (next() & 1) != 0; }

    // independent substream, e.g. one per fuzz diagram
    static uint64_t mix(uint64_t seed, uint64_t index) {
        Rng r(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
        return r.next();
    }

private:
    uint64_t state_;
};

}  // namespace tricob
