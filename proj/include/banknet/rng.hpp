#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace banknet {

// Seedable deterministic stream. The raw mt19937-64 sequence is fixed by the
// standard, and the derived draws below avoid std::*_distribution on purpose:
// their mappings vary across standard libraries, these do not.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    static constexpr const char* generator_name() { return "mt19937-64"; }

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1), 53 significant bits
    double next_unit()
    {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double prob) { return next_unit() < prob; }

    // uniform in [0, bound), unbiased via rejection
    std::uint32_t next_below(std::uint32_t bound)
    {
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<std::uint32_t>(x % bound);
    }

    // uniform double in [lo, hi)
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::mt19937_64 eng_;
};

} // namespace banknet
