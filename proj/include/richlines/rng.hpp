#pragma once

#include <cstdint>

namespace richlines {

// Counter-based SplitMix64. The i-th draw (i = 1, 2, ...) of a generator with
// key k is mix64(k + i * 0x9e3779b97f4a7c15), so any language can reproduce an
// instance from its seed. split(s) derives an independent key
// mix64(k ^ mix64(s + 0x9e3779b97f4a7c15)).
class Rng {
public:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    explicit Rng(std::uint64_t seed) : key_(seed) {}

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix64(key_ + (++counter_) * kGolden); }

    // lo + next() mod (hi - lo + 1); inclusive bounds.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    Rng split(std::uint64_t stream) const { return Rng(mix64(key_ ^ mix64(stream + kGolden))); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace richlines
