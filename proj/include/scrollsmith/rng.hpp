#ifndef SCROLLSMITH_RNG_HPP
#define SCROLLSMITH_RNG_HPP

#include <cstdint>

namespace scrollsmith {

/// SplitMix64 (Steele, Lea, Flood 2014). Every randomized stage of the
/// pipeline draws from one of these, seeded from the single user seed, so
/// results are bit-identical across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) by rejection; n must be positive.
    uint64_t below(uint64_t n) {
        const uint64_t limit = ~0ULL - (~0ULL % n);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform draw in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Derive an independent stream for a named substage.
    SplitMix64 fork(uint64_t tag) {
        return SplitMix64(next() ^ (tag * 0x9e3779b97f4a7c15ULL));
    }

private:
    uint64_t state_;
};

}  // namespace scrollsmith

#endif
