#pragma once

#include <cstdint>
#include <string>

namespace curvcheck {

/// SplitMix64 stream.  Chosen because its output is fully specified by the
/// seed alone, independent of platform or standard library, which keeps
/// reports byte-reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// FNV-1a, used to derive independent per-target / per-check substreams.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic substream seed for (base seed, label, index).
inline std::uint64_t substream_seed(std::uint64_t seed, const std::string& label,
                                    std::uint64_t index = 0) {
    SplitMix64 mix(seed ^ fnv1a(label) ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return mix.next();
}

}  // namespace curvcheck
