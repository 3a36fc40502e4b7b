#pragma once

#include "cst/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cst {

/// xoshiro256** seeded through SplitMix64. Only integer operations are used,
/// so streams are identical on every platform. `split()` derives an
/// independent generator seeded from the next output.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [0, bound), bound > 0, by rejection of the biased tail.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int range(int lo, int hi);
    bool coin() { return (next() >> 63) != 0; }
    Rng split() { return Rng(next()); }
    /// Uniform on the grid {lo + k (hi - lo) / steps : 0 < k < steps}.
    Rat grid(const Rat& lo, const Rat& hi, int steps);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace cst
