#pragma once

#include <cstdint>
#include <initializer_list>

namespace apolar {

/// SplitMix64: small, fully specified generator. Streams are derived from a
/// root seed and integer labels so results never depend on scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] by rejection (lo <= hi).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>((*this)());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

private:
    std::uint64_t state_;
};

/// Child seed for the stream labelled by `labels` under `root`.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> labels) {
    SplitMix64 mix(root);
    std::uint64_t h = mix();
    for (auto l : labels) {
        SplitMix64 step(h ^ (l * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        h = step();
    }
    return h;
}

}  // namespace apolar
