// Deterministic counter-based sampling: candidate k's coordinates depend only
// on (seed, k), never on execution order, so campaigns are reproducible under
// any thread count.
#pragma once

#include <cstdint>
#include <vector>

namespace warpcheck {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct SampleStream {
    std::uint64_t seed = 0;

    // k-th uniform in [0, 1)
    double uniform(std::uint64_t k) const {
        return static_cast<double>(splitmix64(seed ^ splitmix64(k + 1)) >> 11) * 0x1.0p-53;
    }

    // candidate point k in the box [lo, hi]
    std::vector<double> point(std::uint64_t k, const std::vector<double>& lo,
                              const std::vector<double>& hi) const {
        std::vector<double> x(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            const double u = uniform(k * 0x100 + i);
            x[i] = lo[i] + (hi[i] - lo[i]) * u;
        }
        return x;
    }
};

}  // namespace warpcheck
