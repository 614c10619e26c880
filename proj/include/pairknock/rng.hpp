#pragma once

/**
 * Deterministic randomness.
 *
 * Every random decision in the engine draws from a Stream whose key is
 * derived by mixing a base seed with stable hashes of domain identifiers
 * (problem ids, candidate ids, round indices). Streams derived this way do
 * not depend on thread scheduling or draw order elsewhere: any consumer can
 * reconstruct its substream from (seed, identifiers) alone, which is what
 * makes parallel execution bit-reproducible.
 *
 * std::hash and the standard <random> distributions are implementation
 * defined, so both the hash and the draw primitives are pinned here.
 */

#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

namespace pairknock::rng {

// FNV-1a, 64-bit. Stable across platforms, unlike std::hash.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// splitmix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

// Derive a stream key from a base seed plus any number of integer parts.
template <typename... Parts>
constexpr std::uint64_t derive(std::uint64_t base, Parts... parts) {
    std::uint64_t k = mix(base);
    ((k = combine(k, static_cast<std::uint64_t>(parts))), ...);
    return k;
}

// Fixed tags that keep unrelated substreams of one seed apart.
inline constexpr std::uint64_t kTagShuffle   = fnv1a("shuffle");
inline constexpr std::uint64_t kTagTiebreak  = fnv1a("tiebreak");
inline constexpr std::uint64_t kTagEarlyStop = fnv1a("earlystop");
inline constexpr std::uint64_t kTagFallback  = fnv1a("fallback");
inline constexpr std::uint64_t kTagRound     = fnv1a("round");
inline constexpr std::uint64_t kTagPair      = fnv1a("pairflip");
inline constexpr std::uint64_t kTagPoint     = fnv1a("pointflip");
inline constexpr std::uint64_t kTagTrial     = fnv1a("trial");
inline constexpr std::uint64_t kTagPool      = fnv1a("pool");
inline constexpr std::uint64_t kTagSelect    = fnv1a("select");
inline constexpr std::uint64_t kTagJudge     = fnv1a("judge");

/**
 * Counter-based generator (splitmix64 sequence). Each draw is bit-stable
 * across platforms and standard libraries.
 */
class Stream {
public:
    explicit Stream(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() {
        ++draws_;
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform integer in [0, n). Unbiased via rejection; n == 1 draws nothing.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Fisher-Yates with pinned draw semantics (std::shuffle is not portable).
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t draws() const { return draws_; }

private:
    std::uint64_t state_ = 0;
    std::uint64_t draws_ = 0;
};

}  // namespace pairknock::rng
