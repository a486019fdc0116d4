// construct.hpp -- layered word families attaining the upper bounds
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcsw/word.hpp"

namespace lcsw {

/// Run length m_i of layer i: max(1, round((n/k)^{i/r})), ties rounding up.
struct LayerScale {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t r = 0;
    std::int64_t i = 0;
    std::int64_t m = 1;
};

LayerScale scale_m(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t i);

/// Balanced word of length n built from blocks of k runs of length m
/// (ascending runs, or descending when `reversed`), with a truncated final
/// block emitted as equal runs so every symbol reaches exactly n/k.
Word build_layer_word(std::int64_t n, std::int64_t k, std::int64_t m, bool reversed);

/// The r+k+2 words {w_0, ..., w_r, rev w_r, 0^n, ..., (k-1)^n}.
std::vector<Word> build_family_main(std::int64_t n, std::int64_t k, std::int64_t r);

enum class BaselineMode { unary, k_plus_1 };

/// unary: t constant words (pairwise LCS 0). k_plus_1: the k constant words
/// plus the cyclic word, with family LCS exactly n/k.
std::vector<Word> build_baseline_family(std::int64_t n, std::int64_t k,
                                        BaselineMode mode, std::int64_t t = 0);

/// Value of one of the closed-form bounds at (n, k, r).
struct BoundValue {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t r = 0;
    double value = 0.0;
};

/// upper = n/k + k^{1/r} n^{1-1/r}; lower form = n/k + c n^{1-1/r} for a
/// caller-supplied c (no constant is claimed by the library).
std::pair<BoundValue, BoundValue> bound_values(std::int64_t n, std::int64_t k,
                                               std::int64_t r, double c_lower);

/// Header lines for the word file format describing a constructed family.
std::vector<std::string> family_header(std::int64_t n, std::int64_t k, std::int64_t r,
                                       const std::string& mode,
                                       const std::vector<std::int64_t>& m_list);

}  // namespace lcsw
