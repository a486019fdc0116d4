#include "lcsw/matcher.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "lcsw/rng.hpp"
#include "lcsw/version.hpp"

namespace lcsw {

namespace {

// ceil with snapping, so that real thresholds that are integers up to
// floating-point noise materialize exactly
std::int64_t int_ceil(double x) {
    const double snapped = std::round(x);
    if (std::abs(x - snapped) < 1e-9 * std::max(1.0, std::abs(x)))
        return static_cast<std::int64_t>(snapped);
    return static_cast<std::int64_t>(std::ceil(x));
}

double power_shape(std::int64_t n, int r) {
    // n^{1-1/r}; the r <= 1 cases only feed the shortcut path
    if (r <= 1) return 1.0;
    return std::pow(static_cast<double>(n), 1.0 - 1.0 / static_cast<double>(r));
}

struct WordView {
    const Word* word = nullptr;
    std::vector<std::size_t> zero_pos;  // position of the j'th zero at [j-1]
    std::vector<std::size_t> one_pos;   // position of the j'th one at [j-1]

    explicit WordView(const Word& w) : word(&w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            (w[i] == 0 ? zero_pos : one_pos).push_back(i);
    }

    // number of ones with index < pos
    std::int64_t ones_before(std::size_t pos) const {
        return std::lower_bound(one_pos.begin(), one_pos.end(), pos) - one_pos.begin();
    }
    // number of ones with index <= pos
    std::int64_t ones_up_to(std::size_t pos) const {
        return std::upper_bound(one_pos.begin(), one_pos.end(), pos) - one_pos.begin();
    }
    // number of zeros with index <= pos
    std::int64_t zeros_up_to(std::size_t pos) const {
        return std::upper_bound(zero_pos.begin(), zero_pos.end(), pos) - zero_pos.begin();
    }
    std::int64_t zeros_before(std::size_t pos) const {
        return std::lower_bound(zero_pos.begin(), zero_pos.end(), pos) - zero_pos.begin();
    }
};

void require_balanced_binary(const Word& w) {
    if (w.alphabet_size != 2)
        throw std::invalid_argument("matcher needs binary words");
    if (!is_balanced(w))
        throw std::invalid_argument("matcher needs balanced words");
}

std::int64_t interval_length(std::int64_t n, int r, int t) {
    return std::max<std::int64_t>(
        1, int_ceil(std::pow(static_cast<double>(n),
                             static_cast<double>(t) / static_cast<double>(r))));
}

}  // namespace

MatcherParams MatcherParams::defaults(int r) {
    MatcherParams p;
    p.r = r;
    const double rr = std::max(1, r);
    p.alpha_eff = 1e-6 * std::pow(rr, -9.0);
    p.beta_eff = std::pow(rr, -6.0) / 40000.0;
    return p;
}

Thresholds compute_thresholds(std::int64_t n, const MatcherParams& params) {
    if (params.alpha_eff <= 0.0 || params.beta_eff <= 0.0)
        throw std::invalid_argument("alpha_eff and beta_eff must be positive");
    Thresholds th;
    th.n = n;
    const double shape = power_shape(n, params.r);
    th.deviation = params.alpha_eff * shape;
    th.deviation_int = std::max<std::int64_t>(1, int_ceil(th.deviation));
    th.block_ones = std::max<std::int64_t>(1, int_ceil(params.beta_eff * shape));
    for (int t = 0; t < params.r; ++t) {
        th.interval_len.push_back(interval_length(n, params.r, t));
        th.close_lp.push_back(std::max<std::int64_t>(
            1, int_ceil(std::pow(static_cast<double>(n),
                                 static_cast<double>(t) / params.r) /
                        20.0)));
    }
    return th;
}

std::vector<ZeroAnnotation> annotate_zeros(const Word& w, double threshold) {
    require_balanced_binary(w);
    std::vector<ZeroAnnotation> out;
    out.reserve(w.size() / 2);
    std::int64_t ones = 0;
    std::int64_t ordinal = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) {
            ++ones;
            continue;
        }
        ZeroAnnotation a;
        a.ordinal = ++ordinal;
        a.position = ones;
        a.expected = a.ordinal;
        a.deviation = a.position - a.expected;
        if (static_cast<double>(a.deviation) < -threshold)
            a.cls = ZeroClass::left_bad;
        else if (static_cast<double>(a.deviation) > threshold)
            a.cls = ZeroClass::right_bad;
        else
            a.cls = ZeroClass::good;
        out.push_back(a);
    }
    return out;
}

std::vector<ZeroAnnotation> annotate_zeros(const Word& w, const MatcherParams& params) {
    return annotate_zeros(w, compute_thresholds(w.size(), params).deviation);
}

void compute_types(const Word& w, std::vector<ZeroAnnotation>& annotations, int r) {
    if (r < 1) return;
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    std::vector<std::size_t> good;  // indices into annotations
    for (std::size_t i = 0; i < annotations.size(); ++i) {
        if (annotations[i].cls == ZeroClass::good) {
            annotations[i].type = 0;  // the length-1 interval always exists
            good.push_back(i);
        } else {
            annotations[i].type = -1;
        }
    }
    const std::int64_t g = static_cast<std::int64_t>(good.size());
    for (int t = 1; t < r; ++t) {
        const std::int64_t len = interval_length(n, r, t);
        if (len > g) break;
        // window i covers good zeros [i, i+len); ones inside the span are
        // position differences of the endpoints
        std::vector<std::int64_t> covered_from(g + 1, 0);
        bool any = false;
        for (std::int64_t i = 0; i + len <= g; ++i) {
            const std::int64_t ones = annotations[good[i + len - 1]].position -
                                      annotations[good[i]].position;
            if (ones <= len / 10) {
                covered_from[i] += 1;
                covered_from[i + len] -= 1;
                any = true;
            }
        }
        if (!any) continue;
        std::int64_t active = 0;
        for (std::int64_t m = 0; m < g; ++m) {
            active += covered_from[m];
            if (active > 0) annotations[good[m]].type = t;
        }
    }
}

std::int64_t BlockPartition::block_of(std::size_t symbol_index) const {
    if (symbol_index >= word_size) return -1;
    auto it = std::upper_bound(bounds.begin(), bounds.end(), symbol_index);
    return static_cast<std::int64_t>(it - bounds.begin()) - 1;
}

BlockPartition partition_blocks(const Word& w, std::int64_t ones_per_block) {
    if (w.alphabet_size != 2)
        throw std::invalid_argument("block partition needs binary words");
    if (ones_per_block < 1)
        throw std::invalid_argument("block size must be >= 1");
    BlockPartition part;
    part.ones_per_block = ones_per_block;
    part.word_size = w.size();
    part.bounds.push_back(0);
    std::int64_t ones = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 1) continue;
        ++ones;
        // a boundary sits at every (k*B+1)'th one
        if (ones % ones_per_block == 1 % ones_per_block && ones > ones_per_block)
            part.bounds.push_back(i);
    }
    return part;
}

BlockPartition partition_blocks(const Word& w, const MatcherParams& params) {
    return partition_blocks(w, compute_thresholds(w.size(), params).block_ones);
}

std::optional<ShortcutResult> bad_pair_shortcut(
    std::span<const Word> family,
    std::span<const std::vector<ZeroAnnotation>> annotations,
    const Thresholds& thresholds) {
    if (family.size() < 2 || annotations.size() != family.size())
        throw std::invalid_argument("shortcut needs annotated words");
    const std::size_t zeros = annotations.empty() ? 0 : annotations[0].size();

    auto build = [&](int a, int b, std::int64_t j, ZeroClass side) {
        ShortcutResult res;
        res.pair = {a, b};
        res.ordinal = j;
        res.side = side;
        WordView va(family[a]), vb(family[b]);
        const std::int64_t half = static_cast<std::int64_t>(va.zero_pos.size());
        const std::int64_t pa = annotations[a][j - 1].position;
        const std::int64_t pb = annotations[b][j - 1].position;
        SubsequenceWitness wit;
        wit.common.alphabet_size = 2;
        if (side == ZeroClass::left_bad) {
            // 0^j, then the shared count of ones right of the j'th zero
            const std::int64_t m = std::min(half - pa, half - pb);
            for (std::int64_t i = 0; i < j; ++i) {
                wit.idx_a.push_back(va.zero_pos[i]);
                wit.idx_b.push_back(vb.zero_pos[i]);
                wit.common.symbols.push_back(0);
            }
            for (std::int64_t i = 0; i < m; ++i) {
                wit.idx_a.push_back(va.one_pos[pa + i]);
                wit.idx_b.push_back(vb.one_pos[pb + i]);
                wit.common.symbols.push_back(1);
            }
        } else {
            // the shared count of ones left of the j'th zero, then 0's from j on
            const std::int64_t m = std::min(pa, pb);
            for (std::int64_t i = 0; i < m; ++i) {
                wit.idx_a.push_back(va.one_pos[i]);
                wit.idx_b.push_back(vb.one_pos[i]);
                wit.common.symbols.push_back(1);
            }
            for (std::int64_t i = j - 1; i < half; ++i) {
                wit.idx_a.push_back(va.zero_pos[i]);
                wit.idx_b.push_back(vb.zero_pos[i]);
                wit.common.symbols.push_back(0);
            }
        }
        res.witness = std::move(wit);
        (void)thresholds;
        return res;
    };

    for (std::size_t j = 1; j <= zeros; ++j) {
        int left_first = -1, left_second = -1;
        int right_first = -1, right_second = -1;
        for (std::size_t w = 0; w < family.size(); ++w) {
            const ZeroClass cls = annotations[w][j - 1].cls;
            if (cls == ZeroClass::left_bad) {
                if (left_first < 0)
                    left_first = static_cast<int>(w);
                else if (left_second < 0)
                    left_second = static_cast<int>(w);
            } else if (cls == ZeroClass::right_bad) {
                if (right_first < 0)
                    right_first = static_cast<int>(w);
                else if (right_second < 0)
                    right_second = static_cast<int>(w);
            }
        }
        if (left_second >= 0)
            return build(left_first, left_second, static_cast<std::int64_t>(j),
                         ZeroClass::left_bad);
        if (right_second >= 0)
            return build(right_first, right_second, static_cast<std::int64_t>(j),
                         ZeroClass::right_bad);
    }
    return std::nullopt;
}

std::optional<PairChoice> select_pair_and_type(
    std::span<const std::vector<ZeroAnnotation>> annotations, int r) {
    const int words = static_cast<int>(annotations.size());
    if (words < 2 || r < 2) return std::nullopt;
    const int types = r - 1;  // t in {0..r-2}
    std::vector<std::int64_t> counts(
        static_cast<std::size_t>(words) * words * types, 0);
    const std::size_t zeros = annotations[0].size();
    std::vector<int> bucket;
    for (std::size_t j = 0; j < zeros; ++j) {
        for (int t = 0; t < types; ++t) {
            bucket.clear();
            for (int w = 0; w < words; ++w)
                if (annotations[w][j].type == t) bucket.push_back(w);
            for (std::size_t x = 0; x < bucket.size(); ++x)
                for (std::size_t y = x + 1; y < bucket.size(); ++y)
                    ++counts[(static_cast<std::size_t>(bucket[x]) * words +
                              bucket[y]) *
                                 types +
                             t];
        }
    }
    PairChoice best;
    std::int64_t best_count = 0;
    for (int i1 = 0; i1 < words; ++i1)
        for (int i2 = i1 + 1; i2 < words; ++i2)
            for (int t = 0; t < types; ++t) {
                const std::int64_t c =
                    counts[(static_cast<std::size_t>(i1) * words + i2) * types + t];
                if (c > best_count) {
                    best_count = c;
                    best = PairChoice{i1, i2, t, {}};
                }
            }
    if (best_count == 0) return std::nullopt;
    for (std::size_t j = 0; j < zeros; ++j)
        if (annotations[best.i1][j].type == best.t &&
            annotations[best.i2][j].type == best.t)
            best.ordinals.push_back(static_cast<std::int64_t>(j + 1));
    return best;
}

std::optional<RichInterval> pick_rich_interval(const Word& w,
                                               std::span<const ZeroAnnotation> ann,
                                               std::int64_t ordinal,
                                               std::int64_t length) {
    // positions of good zeros, and the good-index of the requested ordinal
    std::vector<std::size_t> good;
    std::int64_t target = -1;
    std::vector<std::size_t> zero_pos;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0) zero_pos.push_back(i);
    for (std::size_t i = 0; i < ann.size(); ++i) {
        if (ann[i].cls != ZeroClass::good) continue;
        if (ann[i].ordinal == ordinal) target = static_cast<std::int64_t>(good.size());
        good.push_back(i);
    }
    if (target < 0) return std::nullopt;
    const std::int64_t g = static_cast<std::int64_t>(good.size());
    if (length > g) return std::nullopt;
    const std::int64_t lo = std::max<std::int64_t>(0, target - length + 1);
    const std::int64_t hi = std::min(target, g - length);
    for (std::int64_t i = lo; i <= hi; ++i) {
        const std::int64_t ones =
            ann[good[i + length - 1]].position - ann[good[i]].position;
        if (ones > length / 10) continue;
        RichInterval out;
        out.ordinal = ordinal;
        out.begin = zero_pos[good[i]];
        out.end = zero_pos[good[i + length - 1]];
        out.good_zeros = length;
        out.ones = ones;
        out.lp = ann[good[i]].position;
        out.rp = ann[good[i + length - 1]].position;
        return out;
    }
    return std::nullopt;
}

namespace {

// leftmost valid window per good zero, for one word; window i spans good
// zeros [i, i+len)
std::vector<RichInterval> intervals_for_word(const Word& w,
                                             std::span<const ZeroAnnotation> ann,
                                             const BlockPartition& blocks,
                                             std::span<const std::int64_t> ordinals,
                                             std::int64_t len) {
    std::vector<std::size_t> zero_pos;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == 0) zero_pos.push_back(i);
    std::vector<std::size_t> good;
    std::vector<std::int64_t> good_index_of_ordinal(ann.size() + 1, -1);
    for (std::size_t i = 0; i < ann.size(); ++i) {
        if (ann[i].cls != ZeroClass::good) continue;
        good_index_of_ordinal[ann[i].ordinal] = static_cast<std::int64_t>(good.size());
        good.push_back(i);
    }
    const std::int64_t g = static_cast<std::int64_t>(good.size());
    std::vector<RichInterval> out;
    if (len > g) return out;

    std::vector<char> valid(g, 0);
    for (std::int64_t i = 0; i + len <= g; ++i) {
        const std::int64_t ones =
            ann[good[i + len - 1]].position - ann[good[i]].position;
        valid[i] = ones <= len / 10 ? 1 : 0;
    }
    // next_valid[i]: smallest valid window start >= i
    std::vector<std::int64_t> next_valid(g + 1, g);
    for (std::int64_t i = g - 1; i >= 0; --i)
        next_valid[i] = valid[i] ? i : next_valid[i + 1];

    out.reserve(ordinals.size());
    for (std::int64_t ordinal : ordinals) {
        const std::int64_t m = good_index_of_ordinal[ordinal];
        if (m < 0) continue;  // ordinal not good in this word
        const std::int64_t start = next_valid[std::max<std::int64_t>(0, m - len + 1)];
        if (start > m || start + len > g) continue;
        RichInterval iv;
        iv.ordinal = ordinal;
        iv.begin = zero_pos[good[start]];
        iv.end = zero_pos[good[start + len - 1]];
        iv.good_zeros = len;
        iv.ones = ann[good[start + len - 1]].position - ann[good[start]].position;
        iv.lp = ann[good[start]].position;
        iv.rp = ann[good[start + len - 1]].position;
        const std::int64_t b0 = blocks.block_of(iv.begin);
        const std::int64_t b1 = blocks.block_of(iv.end);
        iv.block = b0 == b1 ? b0 : -1;
        out.push_back(iv);
    }
    return out;
}

std::vector<RichInterval> greedy_disjoint(std::vector<RichInterval> intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const RichInterval& a, const RichInterval& b) {
                  return a.begin != b.begin ? a.begin < b.begin
                                            : a.ordinal < b.ordinal;
              });
    std::vector<RichInterval> out;
    std::int64_t last_end = -1;
    for (const RichInterval& iv : intervals) {
        if (static_cast<std::int64_t>(iv.begin) > last_end) {
            out.push_back(iv);
            last_end = static_cast<std::int64_t>(iv.end);
        }
    }
    return out;
}

}  // namespace

IntervalStage choose_rich_intervals(const Word& w1,
                                    std::span<const ZeroAnnotation> ann1,
                                    const BlockPartition& blocks1, const Word& w2,
                                    std::span<const ZeroAnnotation> ann2,
                                    const BlockPartition& blocks2,
                                    std::span<const std::int64_t> ordinals, int t,
                                    const Thresholds& thresholds) {
    const std::int64_t len = thresholds.interval_len.at(t);
    IntervalStage stage;
    std::vector<RichInterval> iv1 =
        intervals_for_word(w1, ann1, blocks1, ordinals, len);
    std::vector<RichInterval> iv2 =
        intervals_for_word(w2, ann2, blocks2, ordinals, len);

    // consistent ordinals: both intervals inside same-index blocks
    const std::size_t block_count = std::max(blocks1.count(), blocks2.count());
    stage.per_block.assign(block_count, 0);
    std::vector<std::vector<RichInterval>> fam1(block_count), fam2(block_count);
    std::size_t p1 = 0, p2 = 0;
    for (std::int64_t ordinal : ordinals) {
        while (p1 < iv1.size() && iv1[p1].ordinal < ordinal) ++p1;
        while (p2 < iv2.size() && iv2[p2].ordinal < ordinal) ++p2;
        if (p1 >= iv1.size() || p2 >= iv2.size()) break;
        if (iv1[p1].ordinal != ordinal || iv2[p2].ordinal != ordinal) continue;
        if (iv1[p1].block < 0 || iv1[p1].block != iv2[p2].block) continue;
        stage.consistent.push_back(ordinal);
        ++stage.per_block[iv1[p1].block];
        fam1[iv1[p1].block].push_back(iv1[p1]);
        fam2[iv2[p2].block].push_back(iv2[p2]);
    }
    for (std::size_t b = 0; b < block_count; ++b) {
        std::vector<RichInterval> d1 = greedy_disjoint(std::move(fam1[b]));
        std::vector<RichInterval> d2 = greedy_disjoint(std::move(fam2[b]));
        stage.family_1.insert(stage.family_1.end(), d1.begin(), d1.end());
        stage.family_2.insert(stage.family_2.end(), d2.begin(), d2.end());
    }
    return stage;
}

ClosePairGraph best_shift(std::vector<RichInterval> left,
                          std::vector<RichInterval> right, int t,
                          const Thresholds& thresholds, const MatcherParams& params) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("best_shift needs nonempty interval families");
    ClosePairGraph graph;
    graph.t = t;
    graph.close_bound = thresholds.close_lp.at(t);
    const std::int64_t b = thresholds.block_ones;
    const std::int64_t q_lo = -(b - 1), q_hi = b - 1;
    const std::int64_t half = thresholds.n / 2;
    for (const auto& family : {left, right})
        for (const RichInterval& iv : family)
            if (iv.lp < 0 || iv.lp > half)
                throw std::invalid_argument("interval position outside [0, n/2]");

    // histogram of LP differences d = lp2 - lp1, offset by `half`
    std::vector<std::int64_t> hist(2 * half + 1, 0);
#pragma omp parallel
    {
        std::vector<std::int64_t> local(hist.size(), 0);
#pragma omp for schedule(static) nowait
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j)
                ++local[right[j].lp - left[i].lp + half];
#pragma omp critical
        for (std::size_t d = 0; d < hist.size(); ++d) hist[d] += local[d];
    }
    std::vector<std::int64_t> prefix(hist.size() + 1, 0);
    for (std::size_t d = 0; d < hist.size(); ++d) prefix[d + 1] = prefix[d] + hist[d];
    auto count_for = [&](std::int64_t q) {
        const std::int64_t lo =
            std::clamp<std::int64_t>(q - graph.close_bound + half, 0,
                                     static_cast<std::int64_t>(hist.size()));
        const std::int64_t hi =
            std::clamp<std::int64_t>(q + graph.close_bound + half + 1, 0,
                                     static_cast<std::int64_t>(hist.size()));
        return hi > lo ? prefix[hi] - prefix[lo] : 0;
    };

    // ties prefer the smaller |Q| (then the smaller Q): the assembly pays
    // |Q| dropped ones, so among equal edge counts the cheaper shift wins
    std::int64_t best_q = 0, best_count = -1;
    auto consider = [&](std::int64_t q, std::int64_t c) {
        if (c > best_count ||
            (c == best_count &&
             (std::abs(q) < std::abs(best_q) ||
              (std::abs(q) == std::abs(best_q) && q < best_q))))
            best_count = c, best_q = q;
    };
    if (params.shift == ShiftStrategy::exhaustive) {
        graph.q_candidates = q_hi - q_lo + 1;
        for (std::int64_t q = q_lo; q <= q_hi; ++q) {
            const std::int64_t c = count_for(q);
            graph.edge_total_over_q += c;
            consider(q, c);
        }
    } else {
        SplitMix64 rng(params.seed, 0);
        const std::int64_t range = q_hi - q_lo + 1;
        const std::int64_t samples = std::max<std::int64_t>(1, params.shift_samples);
        std::vector<std::int64_t> qs;
        qs.reserve(samples);
        for (std::int64_t i = 0; i < samples; ++i)
            qs.push_back(q_lo + static_cast<std::int64_t>(
                                    rng.next_below(static_cast<std::uint64_t>(range))));
        std::sort(qs.begin(), qs.end());
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        graph.q_candidates = static_cast<std::int64_t>(qs.size());
        for (std::int64_t q : qs) {
            const std::int64_t c = count_for(q);
            graph.edge_total_over_q += c;
            consider(q, c);
        }
    }
    graph.q = best_q;

    // materialize the edges at the chosen shift, in (left, right) order
    std::vector<std::int64_t> right_lp(right.size());
    for (std::size_t j = 0; j < right.size(); ++j) right_lp[j] = right[j].lp;
    std::vector<std::int64_t> right_deg(right.size(), 0);
    for (std::size_t i = 0; i < left.size(); ++i) {
        const auto lo = std::lower_bound(right_lp.begin(), right_lp.end(),
                                         left[i].lp + best_q - graph.close_bound);
        const auto hi = std::upper_bound(right_lp.begin(), right_lp.end(),
                                         left[i].lp + best_q + graph.close_bound);
        const std::int64_t deg = hi - lo;
        graph.max_degree = std::max(graph.max_degree, deg);
        for (auto it = lo; it != hi; ++it) {
            const std::int32_t j = static_cast<std::int32_t>(it - right_lp.begin());
            graph.edges.emplace_back(static_cast<std::int32_t>(i), j);
            ++right_deg[j];
        }
    }
    for (std::int64_t d : right_deg) graph.max_degree = std::max(graph.max_degree, d);
    graph.left = std::move(left);
    graph.right = std::move(right);
    return graph;
}

std::vector<std::pair<std::int32_t, std::int32_t>> noncrossing_matching(
    const ClosePairGraph& graph) {
    std::vector<char> used_l(graph.left.size(), 0), used_r(graph.right.size(), 0);
    std::vector<std::pair<std::int32_t, std::int32_t>> matched;
    for (const auto& e : graph.edges) {
        if (used_l[e.first] || used_r[e.second]) continue;
        used_l[e.first] = used_r[e.second] = 1;
        matched.push_back(e);
    }
    std::sort(matched.begin(), matched.end());
    // uncross: swapping the partners of a crossing pair keeps both edges
    // close, and each swap removes at least one inversion
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < matched.size(); ++i) {
            if (matched[i].second > matched[i + 1].second) {
                std::swap(matched[i].second, matched[i + 1].second);
                swapped = true;
            }
        }
    }
    return matched;
}

SubsequenceWitness assemble_witness(
    const ClosePairGraph& graph,
    std::span<const std::pair<std::int32_t, std::int32_t>> matching, const Word& w1,
    const Word& w2) {
    WordView v1(w1), v2(w2);
    const std::int64_t drop1 = graph.q < 0 ? -graph.q : 0;
    const std::int64_t drop2 = graph.q > 0 ? graph.q : 0;
    SubsequenceWitness wit;
    wit.common.alphabet_size = 2;

    struct Segment {
        std::int64_t one_from_1, one_count;      // ordinal range in w1
        std::int64_t one_from_2;
        std::int64_t zero_from_1, zero_count;    // zero ordinal range in w1
        std::int64_t zero_from_2;
    };

    const std::size_t lambda = matching.size();
    std::vector<Segment> segments;
    segments.reserve(lambda + 1);
    for (std::size_t i = 0; i <= lambda; ++i) {
        // gap before interval i (or the tail after the last interval)
        const std::int64_t lo1 =
            i == 0 ? 0 : v1.ones_up_to(graph.left[matching[i - 1].first].end);
        const std::int64_t lo2 =
            i == 0 ? 0 : v2.ones_up_to(graph.right[matching[i - 1].second].end);
        const std::int64_t hi1 =
            i == lambda ? static_cast<std::int64_t>(v1.one_pos.size())
                        : v1.ones_before(graph.left[matching[i].first].begin);
        const std::int64_t hi2 =
            i == lambda ? static_cast<std::int64_t>(v2.one_pos.size())
                        : v2.ones_before(graph.right[matching[i].second].begin);
        // ones of each gap that survive the dropped prefix
        const std::int64_t from1 = std::max(lo1, drop1);
        const std::int64_t from2 = std::max(lo2, drop2);
        const std::int64_t ones = std::min(std::max<std::int64_t>(0, hi1 - from1),
                                           std::max<std::int64_t>(0, hi2 - from2));
        Segment seg{};
        seg.one_from_1 = from1;
        seg.one_from_2 = from2;
        seg.one_count = ones;
        if (i < lambda) {
            const RichInterval& a = graph.left[matching[i].first];
            const RichInterval& b = graph.right[matching[i].second];
            const std::int64_t za_from = v1.zeros_before(a.begin);
            const std::int64_t za_to = v1.zeros_up_to(a.end);
            const std::int64_t zb_from = v2.zeros_before(b.begin);
            const std::int64_t zb_to = v2.zeros_up_to(b.end);
            seg.zero_from_1 = za_from;
            seg.zero_from_2 = zb_from;
            seg.zero_count = std::min(za_to - za_from, zb_to - zb_from);
        }
        segments.push_back(seg);
    }

    for (const Segment& seg : segments) {
        for (std::int64_t x = 0; x < seg.one_count; ++x) {
            wit.idx_a.push_back(v1.one_pos[seg.one_from_1 + x]);
            wit.idx_b.push_back(v2.one_pos[seg.one_from_2 + x]);
            wit.common.symbols.push_back(1);
        }
        for (std::int64_t x = 0; x < seg.zero_count; ++x) {
            wit.idx_a.push_back(v1.zero_pos[seg.zero_from_1 + x]);
            wit.idx_b.push_back(v2.zero_pos[seg.zero_from_2 + x]);
            wit.common.symbols.push_back(0);
        }
    }
    return wit;
}

SubsequenceWitness baseline_witness(const Word& w1, const Word& w2) {
    WordView v1(w1), v2(w2);
    const std::size_t zeros = std::min(v1.zero_pos.size(), v2.zero_pos.size());
    SubsequenceWitness wit;
    wit.common.alphabet_size = 2;
    wit.common.symbols.assign(zeros, 0);
    wit.idx_a.assign(v1.zero_pos.begin(), v1.zero_pos.begin() + zeros);
    wit.idx_b.assign(v2.zero_pos.begin(), v2.zero_pos.begin() + zeros);
    return wit;
}

MatcherReport run_matcher(std::span<const Word> family, const MatcherParams& params) {
    if (static_cast<int>(family.size()) != params.r + 2)
        throw std::invalid_argument("matcher needs exactly r+2 words");
    for (const Word& w : family) {
        require_balanced_binary(w);
        if (w.size() != family[0].size())
            throw std::invalid_argument("matcher needs words of equal length");
    }
    const std::int64_t n = static_cast<std::int64_t>(family[0].size());

    MatcherReport report;
    report.n = n;
    report.params = params;
    report.thresholds = compute_thresholds(n, params);
    const double r10 = 10.0 * std::max(1, params.r);
    report.asymptotic_flag =
        params.r >= 2 &&
        params.alpha_eff == MatcherParams::defaults(params.r).alpha_eff &&
        params.beta_eff == MatcherParams::defaults(params.r).beta_eff &&
        static_cast<double>(n) >= std::pow(r10, 9.0 * params.r);

    auto finish_baseline = [&](int i1, int i2) {
        report.chosen_pair = {i1, i2};
        report.witness = baseline_witness(family[i1], family[i2]);
        report.stage = "baseline";
        report.guarantee_value = static_cast<double>(n) / 2.0;
        return report;
    };

    if (params.r == 0) return finish_baseline(0, 1);

    std::vector<std::vector<ZeroAnnotation>> annotations;
    annotations.reserve(family.size());
    for (const Word& w : family)
        annotations.push_back(annotate_zeros(w, report.thresholds.deviation));

    auto shortcut = bad_pair_shortcut(family, annotations, report.thresholds);
    if (params.r == 1) {
        if (shortcut &&
            shortcut->witness.length() >= static_cast<std::size_t>(n / 2)) {
            report.chosen_pair = shortcut->pair;
            report.shortcut_used = true;
            report.witness = std::move(shortcut->witness);
            report.stage = "shortcut";
            report.guarantee_value =
                static_cast<double>(n) / 2.0 +
                static_cast<double>(report.thresholds.deviation_int);
            return report;
        }
        return finish_baseline(0, 1);
    }

    if (shortcut) {
        report.chosen_pair = shortcut->pair;
        report.shortcut_used = true;
        report.witness = std::move(shortcut->witness);
        report.stage = "shortcut";
        report.guarantee_value =
            static_cast<double>(n) / 2.0 +
            static_cast<double>(report.thresholds.deviation_int);
        return report;
    }

    for (std::size_t w = 0; w < family.size(); ++w)
        compute_types(family[w], annotations[w], params.r);

    auto choice = select_pair_and_type(annotations, params.r);
    if (!choice) return finish_baseline(0, 1);
    report.chosen_pair = {choice->i1, choice->i2};
    report.t = choice->t;
    report.T_size = static_cast<std::int64_t>(choice->ordinals.size());

    const Word& w1 = family[choice->i1];
    const Word& w2 = family[choice->i2];
    const BlockPartition blocks1 = partition_blocks(w1, report.thresholds.block_ones);
    const BlockPartition blocks2 = partition_blocks(w2, report.thresholds.block_ones);
    IntervalStage stage = choose_rich_intervals(
        w1, annotations[choice->i1], blocks1, w2, annotations[choice->i2], blocks2,
        choice->ordinals, choice->t, report.thresholds);
    report.S_size = static_cast<std::int64_t>(stage.consistent.size());
    report.s_k = stage.per_block;
    report.intervals_1 = stage.family_1;
    report.intervals_2 = stage.family_2;
    if (stage.family_1.empty() || stage.family_2.empty())
        return finish_baseline(choice->i1, choice->i2);

    ClosePairGraph graph = best_shift(stage.family_1, stage.family_2, choice->t,
                                      report.thresholds, params);
    report.q = graph.q;
    report.E_size = static_cast<std::int64_t>(graph.edges.size());
    report.max_degree = graph.max_degree;
    if (graph.edges.empty()) return finish_baseline(choice->i1, choice->i2);

    auto matching = noncrossing_matching(graph);
    report.lambda = static_cast<std::int64_t>(matching.size());
    SubsequenceWitness assembled = assemble_witness(graph, matching, w1, w2);
    SubsequenceWitness base = baseline_witness(w1, w2);
    if (assembled.length() >= base.length()) {
        report.witness = std::move(assembled);
        report.stage = "assembled";
        report.guarantee_value =
            static_cast<double>(n) / 2.0 - static_cast<double>(std::abs(report.q)) +
            0.5 * static_cast<double>(report.lambda) *
                static_cast<double>(report.thresholds.interval_len.at(choice->t));
    } else {
        report.witness = std::move(base);
        report.stage = "baseline";
        report.guarantee_value = static_cast<double>(n) / 2.0;
    }
    return report;
}

nlohmann::ordered_json matcher_report_to_json(const MatcherReport& report) {
    nlohmann::ordered_json j;
    j["pair"] = {report.chosen_pair.first, report.chosen_pair.second};
    j["shortcut_used"] = report.shortcut_used;
    j["t"] = report.t;
    j["sizes"] = {{"T", report.T_size},
                  {"S", report.S_size},
                  {"E", report.E_size},
                  {"lambda", report.lambda}};
    j["Q"] = report.q;
    j["witness"] = {{"length", static_cast<std::int64_t>(report.witness.length())},
                    {"indices_a", report.witness.idx_a},
                    {"indices_b", report.witness.idx_b}};
    j["guarantee"] = {{"value", report.guarantee_value},
                      {"asymptotic_flag", report.asymptotic_flag}};
    nlohmann::ordered_json params;
    params["r"] = report.params.r;
    params["alpha_eff"] = report.params.alpha_eff;
    params["beta_eff"] = report.params.beta_eff;
    params["shift_strategy"] =
        report.params.shift == ShiftStrategy::exhaustive ? "exhaustive" : "sampled";
    params["shift_samples"] = report.params.shift_samples;
    params["seed"] = report.params.seed;
    params["n"] = report.n;
    params["thresholds"] = {{"deviation", report.thresholds.deviation_int},
                            {"block_ones", report.thresholds.block_ones},
                            {"interval_len", report.thresholds.interval_len},
                            {"close_lp", report.thresholds.close_lp}};
    params["stage"] = report.stage;
    params["max_degree"] = report.max_degree;
    params["s_k"] = report.s_k;
    params["version"] = std::string(kVersion);
    j["params"] = std::move(params);
    return j;
}

}  // namespace lcsw
