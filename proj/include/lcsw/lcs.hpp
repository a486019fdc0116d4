// lcs.hpp -- exact longest-common-subsequence kernels and the family maximum
#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "lcsw/word.hpp"

namespace lcsw {

/// Length of the longest common subsequence. Serial reference kernel:
/// two rolling rows over the shorter word, O(|u|*|w|) time, O(min) memory.
std::int64_t lcs_len(const Word& u, const Word& w);

/// Same result as lcs_len, computed by an OpenMP tile-wavefront kernel.
/// `tile` is the square tile edge; small values exist for boundary tests.
std::int64_t lcs_len_par(const Word& u, const Word& w, std::size_t tile = 256);

/// A maximal common subsequence with its realizing index lists, via
/// divide-and-conquer traceback in linear memory. Ties prefer advancing in
/// the first word; callers must only rely on length and validity.
SubsequenceWitness lcs_witness(const Word& u, const Word& w);

/// Maximum LCS over all unordered pairs of a family.
struct FamilyLcsResult {
    std::int64_t length = 0;
    std::size_t i = 0;
    std::size_t j = 1;
    SubsequenceWitness witness;
};

/// Evaluates every pair; ties resolve to the lexicographically smallest
/// (i, j), so the result is schedule-independent under `parallel`.
FamilyLcsResult family_lcs(std::span<const Word> family, bool parallel = true);

/// All pairwise lengths, row-major over unordered pairs (i < j).
std::vector<std::int64_t> pairwise_lcs_matrix(std::span<const Word> family,
                                              bool parallel = true);

}  // namespace lcsw
