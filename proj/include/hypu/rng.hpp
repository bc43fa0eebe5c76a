#pragma once
#include <cstdint>

namespace hypu {

// Knuth's MMIX linear congruential generator. Fixed here (rather than
// std::mt19937) so seeded verification draws reproduce bit-for-bit on any
// platform and can be re-derived in other languages from the two constants.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed = 42) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // uniform in [0,1) with 53 random bits
    double next_double() {
        return double(next_u64() >> 11) * 0x1p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

private:
    std::uint64_t state_;
};

} // namespace hypu
