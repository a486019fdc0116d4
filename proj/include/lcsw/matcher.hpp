// matcher.hpp -- constructive long-common-subsequence search for families of
// balanced binary words: annotate zero deviations, pick a pair sharing a
// type, partition into blocks, select disjoint zero-rich intervals, shift,
// match close pairs without crossings, and assemble an explicit witness.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lcsw/word.hpp"

namespace lcsw {

enum class ShiftStrategy { exhaustive, sampled };

struct MatcherParams {
    int r = 2;
    double alpha_eff = 0.0;  // deviation threshold multiplier
    double beta_eff = 0.0;   // block size multiplier
    ShiftStrategy shift = ShiftStrategy::exhaustive;
    std::int64_t shift_samples = 64;
    std::uint64_t seed = 0;

    /// alpha = 1e-6 r^-9, beta = r^-6 / 40000.
    static MatcherParams defaults(int r);
};

/// All asymptotic quantities materialized as integers for a given n. The
/// goodness test itself compares against the real `deviation` value; the
/// ceiled `deviation_int` is what the shortcut guarantee accounting uses.
struct Thresholds {
    std::int64_t n = 0;
    double deviation = 0.0;            // alpha_eff * n^{1-1/r}
    std::int64_t deviation_int = 1;    // ceil(deviation), >= 1
    std::int64_t block_ones = 1;       // ceil(beta_eff * n^{1-1/r}), >= 1
    std::vector<std::int64_t> interval_len;  // L_t = ceil(n^{t/r}), t = 0..r-1
    std::vector<std::int64_t> close_lp;      // C_t = ceil(n^{t/r} / 20)
};

Thresholds compute_thresholds(std::int64_t n, const MatcherParams& params);

enum class ZeroClass { good, left_bad, right_bad };

/// Per-zero record: ordinal j (1-based), position P = ones to the left,
/// expected position j, and the classification of the deviation P - j.
struct ZeroAnnotation {
    std::int64_t ordinal = 0;
    std::int64_t position = 0;
    std::int64_t expected = 0;
    std::int64_t deviation = 0;
    ZeroClass cls = ZeroClass::good;
    int type = -1;  // largest t with a containing zero-rich interval; -1 for bad
};

/// Classifies every zero of a balanced binary word against `threshold`.
std::vector<ZeroAnnotation> annotate_zeros(const Word& w, double threshold);
std::vector<ZeroAnnotation> annotate_zeros(const Word& w, const MatcherParams& params);

/// Fills in types: the largest t in {0..r-1} such that the zero sits in a
/// subword with exactly L_t good zeros and at most floor(L_t/10) ones.
void compute_types(const Word& w, std::vector<ZeroAnnotation>& annotations, int r);

/// A zero-rich interval: a subword whose first and last symbols are good
/// zeros, holding exactly `good_zeros` good zeros and at most a tenth as
/// many ones.
struct RichInterval {
    std::int64_t ordinal = 0;   // the zero this interval was chosen for
    std::size_t begin = 0;      // symbol span, inclusive
    std::size_t end = 0;        // symbol span, inclusive
    std::int64_t good_zeros = 0;
    std::int64_t ones = 0;
    std::int64_t lp = 0;        // position of the leftmost good zero
    std::int64_t rp = 0;        // position of the rightmost good zero
    std::int64_t block = -1;    // 0-based block index, -1 if straddling
};

/// Blocks of a binary word: boundaries sit at every (k*B+1)'th one, so each
/// non-final block holds exactly B ones; the final partial block remains.
struct BlockPartition {
    std::int64_t ones_per_block = 1;
    std::vector<std::size_t> bounds;  // symbol index starting each block; bounds[0] = 0
    std::size_t word_size = 0;

    std::size_t count() const { return bounds.size(); }
    std::int64_t block_of(std::size_t symbol_index) const;
};

BlockPartition partition_blocks(const Word& w, std::int64_t ones_per_block);
BlockPartition partition_blocks(const Word& w, const MatcherParams& params);

struct ShortcutResult {
    std::pair<int, int> pair{0, 0};
    std::int64_t ordinal = 0;
    ZeroClass side = ZeroClass::left_bad;
    SubsequenceWitness witness;
};

/// Two words whose j'th zeros are bad on the same side yield an immediate
/// witness of length >= n/2 + ceil(threshold). Scans ordinals ascending,
/// left-bad before right-bad, smallest word indices first.
std::optional<ShortcutResult> bad_pair_shortcut(
    std::span<const Word> family,
    std::span<const std::vector<ZeroAnnotation>> annotations,
    const Thresholds& thresholds);

struct PairChoice {
    int i1 = 0;
    int i2 = 1;
    int t = 0;
    std::vector<std::int64_t> ordinals;  // T: both zeros have type t
};

/// Maximizes |T| over word pairs and types t in {0..r-2}; ties take the
/// smallest (i1, i2, t). Empty optional when every T is empty.
std::optional<PairChoice> select_pair_and_type(
    std::span<const std::vector<ZeroAnnotation>> annotations, int r);

/// Interval selection for the chosen pair: one interval per ordinal in T
/// and word, the consistent set S, per-block counts s_k, and the disjoint
/// per-block subfamilies obtained greedily.
struct IntervalStage {
    std::vector<std::int64_t> consistent;        // S, ascending
    std::vector<std::int64_t> per_block;         // s_k, 0-based block index
    std::vector<RichInterval> family_1, family_2;  // disjoint, sorted by position
};

IntervalStage choose_rich_intervals(const Word& w1,
                                    std::span<const ZeroAnnotation> ann1,
                                    const BlockPartition& blocks1, const Word& w2,
                                    std::span<const ZeroAnnotation> ann2,
                                    const BlockPartition& blocks2,
                                    std::span<const std::int64_t> ordinals, int t,
                                    const Thresholds& thresholds);

/// Leftmost valid zero-rich interval with `length` good zeros containing the
/// good zero of ordinal j; used by choose_rich_intervals and by tests.
std::optional<RichInterval> pick_rich_interval(const Word& w,
                                               std::span<const ZeroAnnotation> ann,
                                               std::int64_t ordinal,
                                               std::int64_t length);

/// Close pairs between the two disjoint interval families under shift Q:
/// edge iff |LP(I2) - LP(I1) - Q| <= C_t. Edges are in (left, right)
/// position order; degrees recorded for the matching guarantee.
struct ClosePairGraph {
    std::vector<RichInterval> left, right;
    int t = 0;
    std::int64_t q = 0;
    std::int64_t close_bound = 1;  // C_t
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::int64_t max_degree = 0;
    std::int64_t q_candidates = 0;  // size of the scanned shift range
    std::int64_t edge_total_over_q = 0;  // sum of |E(Q)| over the range
};

/// Picks Q from (-B, B) maximizing |E| (exhaustive scan or seeded sample);
/// exhaustive mode therefore achieves at least the average over the range.
ClosePairGraph best_shift(std::vector<RichInterval> left,
                          std::vector<RichInterval> right, int t,
                          const Thresholds& thresholds, const MatcherParams& params);

/// Maximum-size non-crossing subset of edges: greedy maximal matching in
/// edge order, then uncrossing swaps (both replacement edges stay close)
/// until both coordinates are increasing. Size >= ceil(|E| / (2*maxdeg)).
std::vector<std::pair<std::int32_t, std::int32_t>> noncrossing_matching(
    const ClosePairGraph& graph);

/// Witness over the ORIGINAL words: good zeros inside each matched pair,
/// the smaller count of surviving ones inside each gap, with the first |Q|
/// ones of the shifted word skipped.
SubsequenceWitness assemble_witness(
    const ClosePairGraph& graph,
    std::span<const std::pair<std::int32_t, std::int32_t>> matching, const Word& w1,
    const Word& w2);

/// Matching all zeros gives the unconditional floor of n/2.
SubsequenceWitness baseline_witness(const Word& w1, const Word& w2);

struct MatcherReport {
    std::int64_t n = 0;
    std::pair<int, int> chosen_pair{0, 1};
    bool shortcut_used = false;
    int t = -1;
    std::int64_t T_size = 0;
    std::int64_t S_size = 0;
    std::int64_t E_size = 0;
    std::int64_t lambda = 0;
    std::vector<std::int64_t> s_k;
    std::vector<RichInterval> intervals_1, intervals_2;
    std::int64_t q = 0;
    std::int64_t max_degree = 0;
    SubsequenceWitness witness;
    double guarantee_value = 0.0;
    bool asymptotic_flag = false;
    std::string stage;  // "shortcut" | "assembled" | "baseline"
    Thresholds thresholds;
    MatcherParams params;
};

/// The full pipeline. Any stage that comes up empty falls back to the best
/// witness so far, never below the all-zeros baseline. r = 0 returns the
/// baseline; r = 1 the better of baseline and shortcut.
MatcherReport run_matcher(std::span<const Word> family, const MatcherParams& params);

/// Fixed serialization: {pair, shortcut_used, t, sizes{T,S,E,lambda}, Q,
/// witness{length, indices_a, indices_b}, guarantee{value, asymptotic_flag},
/// params}.
nlohmann::ordered_json matcher_report_to_json(const MatcherReport& report);

}  // namespace lcsw
