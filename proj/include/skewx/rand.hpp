#ifndef SKEWX_RAND_HPP
#define SKEWX_RAND_HPP

#include <cstdint>

namespace skewx {

/// Small deterministic generator (splitmix64). Used instead of <random>
/// distributions so that seeded output is identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }

    /// Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (next() & 1) != 0; }

private:
    uint64_t state_;
};

}  // namespace skewx

#endif
