#pragma once

#include <cstdint>
#include <string_view>

namespace stability {

// Counter-based pseudo-random machinery. Everything here is fixed-width
// uint64 arithmetic, so streams are bit-reproducible across platforms.

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = kFnvOffset;
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

/// splitmix64 finalizer: a bijective mix of the input word.
inline std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Splittable counter-based generator: out(i) depends only on (seed, i).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t at(std::uint64_t counter) const { return mix64(seed_ ^ (counter * kGolden)); }

    /// Stateful convenience: successive draws walk the counter.
    std::uint64_t next() { return at(counter_++); }

    /// Uniform draw in [0, bound). Plain modulo: determinism matters here,
    /// statistical perfection does not.
    std::uint64_t next_below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    /// Derive an independent stream keyed by a label.
    CounterRng split(std::string_view label) const { return CounterRng(mix64(seed_ ^ fnv1a64(label))); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// One-shot derivation used by SeededDyadic perturbations:
/// a word determined by (seed, canonical key text).
inline std::uint64_t derive64(std::uint64_t seed, std::string_view key) {
    return mix64(seed ^ fnv1a64(key));
}

}  // namespace stability
