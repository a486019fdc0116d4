// rng.hpp -- SplitMix64 in counter mode with per-stream decorrelation
#pragma once

#include <cstdint>

#include "lcsw/word.hpp"

namespace lcsw {

/// Deterministic generator: stream s of seed x yields the SplitMix64
/// sequence started at a stream-specific state. Sample i of a Monte Carlo
/// run uses stream i, so results are independent of evaluation order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed + (stream + 1) * kGamma) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += kGamma);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from {0, ..., bound-1} by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

/// Uniform word over [k]^n.
inline Word random_word(SplitMix64& rng, std::size_t n, Symbol k) {
    Word w{{}, k};
    w.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        w.symbols.push_back(static_cast<Symbol>(rng.next_below(k)));
    return w;
}

/// Uniform balanced word over {0,1}^n (n even): a shuffled 0^{n/2} 1^{n/2}.
inline Word random_balanced_binary(SplitMix64& rng, std::size_t n) {
    Word w{{}, 2};
    w.symbols.assign(n, 0);
    for (std::size_t i = n / 2; i < n; ++i) w.symbols[i] = 1;
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = rng.next_below(i);
        std::swap(w.symbols[i - 1], w.symbols[j]);
    }
    return w;
}

}  // namespace lcsw
