#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcsw/construct.hpp"
#include "lcsw/lcs.hpp"
#include "lcsw/matcher.hpp"
#include "lcsw/rng.hpp"

using namespace lcsw;

namespace {

double alpha_for(std::int64_t n, int r, double threshold) {
    return threshold / std::pow(static_cast<double>(n), 1.0 - 1.0 / r);
}

double beta_for(std::int64_t n, int r, std::int64_t block_ones) {
    return static_cast<double>(block_ones) /
           std::pow(static_cast<double>(n), 1.0 - 1.0 / r);
}

MatcherParams scaled_params(std::int64_t n, int r, double threshold,
                            std::int64_t block_ones) {
    MatcherParams p;
    p.r = r;
    p.alpha_eff = alpha_for(n, r, threshold);
    p.beta_eff = beta_for(n, r, block_ones);
    return p;
}

std::int64_t max_abs_deviation(const Word& w) {
    std::int64_t worst = 0;
    for (const ZeroAnnotation& a : annotate_zeros(w, 1e18))
        worst = std::max(worst, std::abs(a.deviation));
    return worst;
}

}  // namespace

TEST_CASE("threshold materialization") {
    const MatcherParams defaults = MatcherParams::defaults(2);
    const Thresholds th = compute_thresholds(256, defaults);
    CHECK(th.deviation < 1.0);       // default multipliers at desk scale
    CHECK(th.deviation_int == 1);    // ceiled to an integer >= 1
    CHECK(th.block_ones == 1);
    CHECK(th.interval_len == std::vector<std::int64_t>{1, 16});
    CHECK(th.close_lp == std::vector<std::int64_t>{1, 1});

    const Thresholds big = compute_thresholds(4096, scaled_params(4096, 2, 4.0, 8));
    CHECK(big.deviation == doctest::Approx(4.0));
    CHECK(big.deviation_int == 4);
    CHECK(big.block_ones == 8);
    CHECK(big.interval_len == std::vector<std::int64_t>{1, 64});
    CHECK(big.close_lp == std::vector<std::int64_t>{1, 4});  // ceil(64/20)

    MatcherParams bad = defaults;
    bad.alpha_eff = 0.0;
    CHECK_THROWS_AS(compute_thresholds(256, bad), std::invalid_argument);
}

TEST_CASE("annotate_zeros positions, deviations and classes") {
    const std::vector<ZeroAnnotation> a = annotate_zeros(parse_word("0101", 2), 1.0);
    REQUIRE(a.size() == 2);
    CHECK(a[0].ordinal == 1);
    CHECK(a[0].position == 0);
    CHECK(a[0].expected == 1);
    CHECK(a[0].deviation == -1);
    CHECK(a[0].cls == ZeroClass::good);  // |dev| <= 1

    const std::vector<ZeroAnnotation> b = annotate_zeros(parse_word("1100", 2), 1.0);
    CHECK(b[0].position == 2);
    CHECK(b[0].deviation == 1);
    CHECK(b[0].cls == ZeroClass::good);

    // below-one thresholds (the default multipliers at small n) make them bad
    CHECK(annotate_zeros(parse_word("0101", 2), 0.5)[0].cls == ZeroClass::left_bad);
    CHECK(annotate_zeros(parse_word("1100", 2), 0.5)[0].cls == ZeroClass::right_bad);

    CHECK_THROWS_AS(annotate_zeros(parse_word("0001", 2), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(annotate_zeros(parse_word("012", 3), 1.0), std::invalid_argument);
}

TEST_CASE("types: every good zero has one, alternating words stay at zero") {
    const Word w = power(parse_word("01", 2), 8);  // n = 16
    std::vector<ZeroAnnotation> ann = annotate_zeros(w, 1.0);
    compute_types(w, ann, 2);
    for (const ZeroAnnotation& a : ann) {
        CHECK(a.cls == ZeroClass::good);
        CHECK(a.type == 0);  // four good zeros always span three ones
    }

    // a long zero run supports the larger interval length
    const Word blocky = build_layer_word(64, 2, 32, false);  // 0^32 1^32
    std::vector<ZeroAnnotation> ann2 = annotate_zeros(blocky, 1e9);
    compute_types(blocky, ann2, 2);
    CHECK(ann2[0].type == 1);  // ceil(sqrt(64)) = 8 zeros, zero ones
}

TEST_CASE("bad_pair_shortcut") {
    const Thresholds th = compute_thresholds(8, scaled_params(8, 2, 1.0, 2));

    SUBCASE("two right-bad zeros give the mirrored witness") {
        const std::vector<Word> family{parse_word("11110000", 2),
                                       parse_word("11110000", 2)};
        std::vector<std::vector<ZeroAnnotation>> ann;
        for (const Word& w : family) ann.push_back(annotate_zeros(w, th.deviation));
        const auto res = bad_pair_shortcut(family, ann, th);
        REQUIRE(res.has_value());
        CHECK(res->side == ZeroClass::right_bad);
        CHECK(res->ordinal == 1);
        CHECK(res->witness.length() == 8);  // 1111 then 0000
        CHECK(validate_witness(res->witness, family[0], family[1]));
        CHECK(static_cast<std::int64_t>(res->witness.length()) >=
              4 + th.deviation_int);
    }

    SUBCASE("opposite-side bad zeros do not trigger") {
        const std::vector<Word> family{parse_word("00001111", 2),
                                       parse_word("11110000", 2)};
        std::vector<std::vector<ZeroAnnotation>> ann;
        for (const Word& w : family) ann.push_back(annotate_zeros(w, 3.0));
        CHECK_FALSE(bad_pair_shortcut(family, ann,
                                      compute_thresholds(8, scaled_params(8, 2, 3.0, 2)))
                        .has_value());
    }

    SUBCASE("good-only families do not trigger") {
        const std::vector<Word> family{parse_word("01010101", 2),
                                       parse_word("10101010", 2)};
        std::vector<std::vector<ZeroAnnotation>> ann;
        for (const Word& w : family) ann.push_back(annotate_zeros(w, 1.0));
        CHECK_FALSE(bad_pair_shortcut(family, ann, th).has_value());
    }

    SUBCASE("left-bad witness length clears the threshold") {
        SplitMix64 rng(61);
        // words starting with a zero run are left-bad early
        Word w1 = parse_word("0001011011", 2);
        Word w2 = parse_word("0001101101", 2);
        std::vector<std::vector<ZeroAnnotation>> ann;
        for (const Word* w : {&w1, &w2}) ann.push_back(annotate_zeros(*w, 1.0));
        const std::vector<Word> family{w1, w2};
        const Thresholds th10 = compute_thresholds(10, scaled_params(10, 2, 1.0, 2));
        const auto res = bad_pair_shortcut(family, ann, th10);
        REQUIRE(res.has_value());
        CHECK(res->side == ZeroClass::left_bad);
        CHECK(validate_witness(res->witness, w1, w2));
        CHECK(static_cast<std::int64_t>(res->witness.length()) >=
              5 + th10.deviation_int);
    }
}

TEST_CASE("select_pair_and_type maximizes the shared-type count") {
    const std::size_t n = 32;
    const Word alt = power(parse_word("01", 2), n / 2);
    std::vector<Word> family{alt, alt, alt, alt};
    std::vector<std::vector<ZeroAnnotation>> ann;
    for (const Word& w : family) {
        ann.push_back(annotate_zeros(w, 2.0));
        compute_types(w, ann.back(), 2);
    }
    const auto choice = select_pair_and_type(ann, 2);
    REQUIRE(choice.has_value());
    CHECK(choice->i1 == 0);
    CHECK(choice->i2 == 1);
    CHECK(choice->t == 0);
    CHECK(choice->ordinals.size() == n / 2);  // all good ordinals

    // pigeonhole floor: when every ordinal is covered by some same-type
    // pair, the best pair-type class holds its share
    const std::int64_t covered = n / 2;
    const std::int64_t classes = 4 * 3 / 2 * (2 - 1);
    CHECK(static_cast<std::int64_t>(choice->ordinals.size()) * classes >= covered);
}

TEST_CASE("partition_blocks boundaries sit at every (kB+1)'th one") {
    const BlockPartition p1 = partition_blocks(parse_word("01010101", 2), 2);
    REQUIRE(p1.bounds == std::vector<std::size_t>{0, 5});
    CHECK(p1.block_of(0) == 0);
    CHECK(p1.block_of(4) == 0);
    CHECK(p1.block_of(5) == 1);
    CHECK(p1.block_of(7) == 1);

    const BlockPartition p2 = partition_blocks(parse_word("11110000", 2), 2);
    REQUIRE(p2.bounds == std::vector<std::size_t>{0, 2});  // "11" and "110000"

    const BlockPartition p3 = partition_blocks(parse_word("01010101", 2), 4);
    CHECK(p3.bounds == std::vector<std::size_t>{0});  // B >= n/2: single block

    SplitMix64 rng(67);
    for (int it = 0; it < 40; ++it) {
        const Word w = random_balanced_binary(rng, 2 * (4 + rng.next_below(60)));
        const std::int64_t b = 1 + rng.next_below(8);
        const BlockPartition part = partition_blocks(w, b);
        // every non-final block holds exactly b ones
        for (std::size_t blk = 0; blk + 1 < part.count(); ++blk) {
            std::int64_t ones = 0;
            for (std::size_t i = part.bounds[blk]; i < part.bounds[blk + 1]; ++i)
                ones += w[i];
            CHECK(ones == b);
        }
    }
}

TEST_CASE("pick_rich_interval returns the leftmost valid window") {
    // 0^8 1^8: the first eight zeros form a zero-rich window of length 8
    const Word w = parse_word("0000000011111111", 2);
    std::vector<ZeroAnnotation> ann = annotate_zeros(w, 1e9);
    const auto iv = pick_rich_interval(w, ann, 5, 8);
    REQUIRE(iv.has_value());
    CHECK(iv->begin == 0);
    CHECK(iv->end == 7);
    CHECK(iv->good_zeros == 8);
    CHECK(iv->ones == 0);
    CHECK(iv->lp == 0);
    CHECK(iv->rp == 0);

    // length 1 always exists for a good zero
    const auto single = pick_rich_interval(w, ann, 3, 1);
    REQUIRE(single.has_value());
    CHECK(single->begin == single->end);

    // an alternating word has no ones-free window of length 4
    const Word alt = power(parse_word("01", 2), 8);
    std::vector<ZeroAnnotation> ann2 = annotate_zeros(alt, 2.0);
    CHECK_FALSE(pick_rich_interval(alt, ann2, 3, 4).has_value());
}

TEST_CASE("choose_rich_intervals: identical words give S = T and full coverage") {
    const std::size_t n = 64;
    const Word w = power(parse_word("01", 2), n / 2);
    const MatcherParams params = scaled_params(n, 2, 2.0, 8);
    const Thresholds th = compute_thresholds(n, params);
    std::vector<ZeroAnnotation> ann = annotate_zeros(w, th.deviation);
    compute_types(w, ann, 2);
    std::vector<std::int64_t> ordinals;
    for (const ZeroAnnotation& a : ann)
        if (a.type == 0) ordinals.push_back(a.ordinal);
    const BlockPartition blocks = partition_blocks(w, th.block_ones);
    const IntervalStage stage =
        choose_rich_intervals(w, ann, blocks, w, ann, blocks, ordinals, 0, th);
    CHECK(stage.consistent == ordinals);
    CHECK(stage.family_1.size() == ordinals.size());  // singles never overlap
    CHECK(stage.family_2.size() == ordinals.size());

    // per-block greedy count inequality: |I_k| * 3 * L_t >= s_k
    std::vector<std::int64_t> per_block_family(stage.per_block.size(), 0);
    for (const RichInterval& iv : stage.family_1) ++per_block_family[iv.block];
    for (std::size_t b = 0; b < stage.per_block.size(); ++b)
        CHECK(per_block_family[b] * 3 * th.interval_len[0] >= stage.per_block[b]);
}

TEST_CASE("greedy disjoint selection covers a third on staggered intervals") {
    // three staggered windows of eight zeros: picking the leftmost discards
    // both overlaps, and one selected interval out of three ordinals is
    // enough for the one-third count bound
    Word w{{}, 2};
    for (int i = 0; i < 12; ++i) w.symbols.push_back(0);
    for (int i = 0; i < 12; ++i) w.symbols.push_back(1);
    std::vector<ZeroAnnotation> ann = annotate_zeros(w, 1e9);
    compute_types(w, ann, 2);
    const MatcherParams params = scaled_params(24, 2, 1e9, 100);
    const Thresholds th = compute_thresholds(24, params);
    const BlockPartition blocks = partition_blocks(w, th.block_ones);
    const std::vector<std::int64_t> ordinals{1, 5, 9};
    const IntervalStage stage = choose_rich_intervals(w, ann, blocks, w, ann, blocks,
                                                      ordinals, 1, th);
    REQUIRE(th.interval_len[1] == 5);  // ceil(24^{1/2})
    CHECK(stage.consistent.size() == 3);
    CHECK(stage.family_1.size() >= 1);
    CHECK(stage.family_1.size() * 3 * th.interval_len[1] >=
          static_cast<std::int64_t>(stage.consistent.size()));
    // chosen intervals are pairwise disjoint
    for (std::size_t i = 1; i < stage.family_1.size(); ++i)
        CHECK(stage.family_1[i].begin > stage.family_1[i - 1].end);
}

TEST_CASE("best_shift maximizes the close-pair count") {
    const MatcherParams params = scaled_params(64, 2, 2.0, 8);
    const Thresholds th = compute_thresholds(64, params);

    SUBCASE("aligned families peak at Q = 0") {
        std::vector<RichInterval> left, right;
        for (int i = 0; i < 6; ++i) {
            RichInterval iv;
            iv.lp = iv.rp = 4 * i;
            iv.begin = iv.end = static_cast<std::size_t>(8 * i);
            iv.good_zeros = 1;
            iv.block = i / 2;
            iv.ordinal = i + 1;
            left.push_back(iv);
            right.push_back(iv);
        }
        const ClosePairGraph graph = best_shift(left, right, 0, th, params);
        CHECK(graph.q == 0);
        CHECK(graph.edges.size() == 6);  // lp spacing 4 > close bound 1
        for (const auto& e : graph.edges) CHECK(e.first == e.second);
    }

    SUBCASE("a single offset pair is found at the edge of its window") {
        std::vector<RichInterval> left(1), right(1);
        left[0].lp = 10;
        right[0].lp = 13;
        const ClosePairGraph graph = best_shift(left, right, 0, th, params);
        // every Q in [2, 4] yields the one edge; ties take the smallest
        CHECK(graph.q == 2);
        REQUIRE(graph.edges.size() == 1);
        CHECK(std::abs(right[0].lp - left[0].lp - graph.q) <= graph.close_bound);
    }

    SUBCASE("exhaustive maximum clears the range average") {
        SplitMix64 rng(71);
        std::vector<RichInterval> left, right;
        for (int i = 0; i < 40; ++i) {
            RichInterval iv;
            iv.lp = static_cast<std::int64_t>(rng.next_below(32));
            left.push_back(iv);
            iv.lp = static_cast<std::int64_t>(rng.next_below(32));
            right.push_back(iv);
        }
        auto by_lp = [](const RichInterval& a, const RichInterval& b) {
            return a.lp < b.lp;
        };
        std::sort(left.begin(), left.end(), by_lp);
        std::sort(right.begin(), right.end(), by_lp);
        const ClosePairGraph graph = best_shift(left, right, 0, th, params);
        CHECK(static_cast<std::int64_t>(graph.edges.size()) * graph.q_candidates >=
              graph.edge_total_over_q);
    }

    SUBCASE("sampled strategy is deterministic per seed") {
        std::vector<RichInterval> left(3), right(3);
        for (int i = 0; i < 3; ++i) {
            left[i].lp = 3 * i;
            right[i].lp = 3 * i + 2;
        }
        MatcherParams sampled = params;
        sampled.shift = ShiftStrategy::sampled;
        sampled.shift_samples = 5;
        sampled.seed = 99;
        const ClosePairGraph g1 = best_shift(left, right, 0, th, sampled);
        const ClosePairGraph g2 = best_shift(left, right, 0, th, sampled);
        CHECK(g1.q == g2.q);
        CHECK(g1.edges == g2.edges);
    }

    CHECK_THROWS_AS(best_shift({}, {}, 0, th, params), std::invalid_argument);
}

TEST_CASE("noncrossing_matching uncrosses and stays within the edge set") {
    ClosePairGraph graph;
    graph.left.resize(2);
    graph.right.resize(2);
    graph.left[0].lp = 0;
    graph.left[1].lp = 1;
    graph.right[0].lp = 0;
    graph.right[1].lp = 1;
    graph.q = 0;
    graph.close_bound = 2;
    graph.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const auto matching = noncrossing_matching(graph);
    REQUIRE(matching.size() == 2);
    CHECK(matching[0] == std::pair<std::int32_t, std::int32_t>{0, 0});
    CHECK(matching[1] == std::pair<std::int32_t, std::int32_t>{1, 1});

    graph.edges = {{1, 0}};
    CHECK(noncrossing_matching(graph).size() == 1);

    // crossing-only matchable pairs get uncrossed
    graph.edges = {{0, 1}, {1, 0}};
    const auto uncrossed = noncrossing_matching(graph);
    REQUIRE(uncrossed.size() == 2);
    CHECK(uncrossed[0].second < uncrossed[1].second);
    for (const auto& e : uncrossed)
        CHECK(std::abs(graph.right[e.second].lp - graph.left[e.first].lp - graph.q) <=
              graph.close_bound);
}

TEST_CASE("run_matcher on four copies of one word returns the whole word") {
    const std::size_t n = 64;
    const Word w = power(parse_word("01", 2), n / 2);
    const std::vector<Word> family{w, w, w, w};
    const MatcherParams params = scaled_params(n, 2, 2.0, 8);
    const MatcherReport report = run_matcher(family, params);
    CHECK(report.chosen_pair == std::pair<int, int>{0, 1});
    CHECK_FALSE(report.shortcut_used);
    CHECK(report.witness.length() == n);
    CHECK(validate_witness(report.witness, family[0], family[1]));
    CHECK(report.stage == "assembled");
    CHECK(report.lambda == static_cast<std::int64_t>(n / 2));
}

TEST_CASE("run_matcher on binary layer families") {
    const std::int64_t n = 1024;
    std::vector<Word> family;
    for (std::int64_t i = 0; i <= 2; ++i)
        family.push_back(build_layer_word(n, 2, scale_m(n, 2, 2, i).m, false));
    family.push_back(build_layer_word(n, 2, scale_m(n, 2, 2, 2).m, true));
    const MatcherParams params = scaled_params(n, 2, 32.0, 32);
    const MatcherReport report = run_matcher(family, params);
    const Word& a = family[report.chosen_pair.first];
    const Word& b = family[report.chosen_pair.second];
    CHECK(validate_witness(report.witness, a, b));
    CHECK(static_cast<std::int64_t>(report.witness.length()) >= n / 2);
    CHECK(static_cast<std::int64_t>(report.witness.length()) <= lcs_len(a, b));
}

TEST_CASE("run_matcher r = 0 and r = 1") {
    SplitMix64 rng(73);
    const Word a = random_balanced_binary(rng, 8);
    const Word b = random_balanced_binary(rng, 8);
    MatcherParams p0 = MatcherParams::defaults(0);
    const MatcherReport r0 = run_matcher(std::vector<Word>{a, b}, p0);
    CHECK(r0.witness.length() == 4);
    CHECK(r0.stage == "baseline");

    // three blocky words: some ordinal is right-bad in two of them
    const std::vector<Word> triple{parse_word("11110000", 2),
                                   parse_word("11100100", 2),
                                   parse_word("01011010", 2)};
    MatcherParams p1 = MatcherParams::defaults(1);
    const MatcherReport r1 = run_matcher(triple, p1);
    CHECK(static_cast<std::int64_t>(r1.witness.length()) >= 5);  // n/2 + 1
    CHECK(validate_witness(r1.witness,
                           triple[r1.chosen_pair.first],
                           triple[r1.chosen_pair.second]));
}

TEST_CASE("run_matcher validates its inputs") {
    const Word w = parse_word("0101", 2);
    MatcherParams params = MatcherParams::defaults(2);
    CHECK_THROWS_AS(run_matcher(std::vector<Word>{w, w}, params),
                    std::invalid_argument);  // needs r+2 = 4 words
    CHECK_THROWS_AS(
        run_matcher(std::vector<Word>{w, w, w, parse_word("0001", 2)}, params),
        std::invalid_argument);  // unbalanced
    CHECK_THROWS_AS(
        run_matcher(std::vector<Word>{w, w, w, parse_word("010101", 2)}, params),
        std::invalid_argument);  // length mismatch
}

TEST_CASE("run_matcher is deterministic and serializes the fixed schema") {
    SplitMix64 rng(79);
    std::vector<Word> family;
    for (int i = 0; i < 4; ++i) family.push_back(random_balanced_binary(rng, 256));
    const MatcherParams params = scaled_params(256, 2, 8.0, 8);
    const MatcherReport r1 = run_matcher(family, params);
    const MatcherReport r2 = run_matcher(family, params);
    const std::string j1 = matcher_report_to_json(r1).dump(2);
    const std::string j2 = matcher_report_to_json(r2).dump(2);
    CHECK(j1 == j2);

    const nlohmann::ordered_json j = matcher_report_to_json(r1);
    CHECK(j.contains("pair"));
    CHECK(j.contains("shortcut_used"));
    CHECK(j.contains("t"));
    CHECK(j["sizes"].contains("T"));
    CHECK(j["sizes"].contains("S"));
    CHECK(j["sizes"].contains("E"));
    CHECK(j["sizes"].contains("lambda"));
    CHECK(j.contains("Q"));
    CHECK(j["witness"].contains("length"));
    CHECK(j["witness"].contains("indices_a"));
    CHECK(j["witness"].contains("indices_b"));
    CHECK(j["guarantee"].contains("value"));
    CHECK(j["guarantee"].contains("asymptotic_flag"));
    CHECK(j.contains("params"));
    CHECK(j["witness"]["length"] == static_cast<std::int64_t>(r1.witness.length()));
}

TEST_CASE("density bound: a subword with N ones holds few good zeros") {
    SplitMix64 rng(83);
    for (double threshold : {1.0, 3.0, 7.5}) {
        for (int it = 0; it < 60; ++it) {
            const std::size_t n = 2 * (8 + rng.next_below(120));
            const Word w = it % 2 == 0 ? random_balanced_binary(rng, n)
                                       : build_layer_word(n, 2, 1 + rng.next_below(n / 2),
                                                          false);
            const std::vector<ZeroAnnotation> ann = annotate_zeros(w, threshold);
            const std::int64_t dev_floor =
                static_cast<std::int64_t>(std::floor(threshold));
            for (int rep = 0; rep < 8; ++rep) {
                std::size_t lo = rng.next_below(n);
                std::size_t hi = rng.next_below(n);
                if (lo > hi) std::swap(lo, hi);
                std::int64_t ones = 0, good = 0;
                std::size_t zero_idx = 0;
                for (std::size_t i = 0; i <= hi; ++i) {
                    if (w[i] == 1) {
                        if (i >= lo) ++ones;
                        continue;
                    }
                    if (i >= lo && ann[zero_idx].cls == ZeroClass::good) ++good;
                    ++zero_idx;
                }
                // ordinal-span argument: at most N + 2*floor(threshold) + 1
                CHECK(good <= ones + 2 * dev_floor + 1);
            }
        }
    }
}

TEST_CASE("matcher witnesses never beat the DP length on random families") {
    SplitMix64 rng(89);
    for (int it = 0; it < 25; ++it) {
        const std::size_t n = 2 * (16 + rng.next_below(200));
        std::vector<Word> family;
        for (int i = 0; i < 4; ++i) family.push_back(random_balanced_binary(rng, n));
        const MatcherParams params =
            scaled_params(n, 2, 1.0 + rng.next_below(6), 1 + rng.next_below(12));
        const MatcherReport report = run_matcher(family, params);
        const Word& a = family[report.chosen_pair.first];
        const Word& b = family[report.chosen_pair.second];
        CHECK(validate_witness(report.witness, a, b));
        CHECK(static_cast<std::int64_t>(report.witness.length()) >=
              static_cast<std::int64_t>(n / 2));
        CHECK(static_cast<std::int64_t>(report.witness.length()) <= lcs_len(a, b));
    }
}

TEST_CASE("assembled witnesses on shifted copies exercise nonzero Q") {
    // two words that are one-block rotations of each other favor |Q| > 0
    const std::size_t n = 256;
    Word base{{}, 2};
    SplitMix64 rng(97);
    base = random_balanced_binary(rng, n);
    Word shifted{{}, 2};
    shifted.symbols.assign(base.symbols.begin() + 16, base.symbols.end());
    shifted.symbols.insert(shifted.symbols.end(), base.symbols.begin(),
                           base.symbols.begin() + 16);
    if (!is_balanced(shifted)) return;  // rotation kept the balance here
    std::vector<Word> family{base, shifted, reverse(base), reverse(shifted)};
    const MatcherParams params = scaled_params(n, 2, 20.0, 16);
    const MatcherReport report = run_matcher(family, params);
    const Word& a = family[report.chosen_pair.first];
    const Word& b = family[report.chosen_pair.second];
    CHECK(validate_witness(report.witness, a, b));
    CHECK(report.witness.length() >= n / 2);
}

TEST_CASE("max deviation helper sanity") {
    CHECK(max_abs_deviation(parse_word("01010101", 2)) == 1);
    CHECK(max_abs_deviation(parse_word("11110000", 2)) == 3);
}
