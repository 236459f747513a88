#ifndef WSNSIM_RNG_HPP
#define WSNSIM_RNG_HPP

#include <cstdint>

namespace wsnsim {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so trajectories are
// reproducible across builds and platforms; never the platform default engine.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

private:
    uint64_t state_;
};

} // namespace wsnsim

#endif
