#pragma once

// Deterministic pseudo-random generator for the property suites. splitmix64
// keeps suite reports byte-identical across platforms for a fixed seed.

#include <cstdint>
#include <vector>

#include "complements/rat.hpp"

namespace complements {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    // Uniform integer in [lo, hi].
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // Random rational p/q with |p| <= max_num, 1 <= q <= max_den.
    Rat rational(long long max_num, long long max_den) {
        return Rat(Int(range(-max_num, max_num)), Int(range(1, max_den)));
    }

    // Random rational in [0, 1] with denominator <= max_den.
    Rat unit_rational(long long max_den) {
        long long q = range(1, max_den);
        return Rat(Int(range(0, q)), Int(q));
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

private:
    std::uint64_t state_;
};

}  // namespace complements
