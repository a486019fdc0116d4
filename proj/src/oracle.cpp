#include "lcsw/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lcsw/lcs.hpp"

namespace lcsw {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::int64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap + 1;  // saturate just beyond the cap
    return a * b;
}

std::int64_t selection_count(std::int64_t m, std::int64_t t, bool distinct,
                             std::int64_t cap) {
    // C(m, t) or C(m+t-1, t), saturating at cap+1
    if (distinct && t > m) return 0;
    const std::int64_t top = distinct ? m : m + t - 1;
    __int128 result = 1;
    for (std::int64_t i = 0; i < t; ++i) {
        result = result * (top - i) / (i + 1);  // exact: C(top, i+1)
        if (result > cap) return cap + 1;
    }
    return static_cast<std::int64_t>(result);
}

}  // namespace

std::int64_t lcs_reference(const Word& u, const Word& w) {
    if (u.alphabet_size != w.alphabet_size)
        throw std::invalid_argument("alphabet size mismatch");
    const std::size_t n = u.size(), m = w.size();
    std::vector<std::int32_t> memo((n + 1) * (m + 1), -1);
    std::function<std::int32_t(std::size_t, std::size_t)> go =
        [&](std::size_t i, std::size_t j) -> std::int32_t {
        if (i == n || j == m) return 0;
        std::int32_t& slot = memo[i * (m + 1) + j];
        if (slot >= 0) return slot;
        if (u[i] == w[j])
            slot = 1 + go(i + 1, j + 1);
        else
            slot = std::max(go(i + 1, j), go(i, j + 1));
        return slot;
    };
    return go(0, 0);
}

BalancedStream::BalancedStream(std::int64_t n, Symbol k) {
    if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
    if (n < 0 || n % k != 0)
        throw std::invalid_argument("balanced words need k to divide n");
    current_.alphabet_size = k;
    current_.symbols.reserve(n);
    for (Symbol s = 0; s < k; ++s)
        current_.symbols.insert(current_.symbols.end(), n / k, s);
}

bool BalancedStream::next(Word& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = current_;
        return true;
    }
    if (!std::next_permutation(current_.symbols.begin(), current_.symbols.end())) {
        done_ = true;
        return false;
    }
    out = current_;
    return true;
}

std::int64_t count_balanced(std::int64_t n, Symbol k, std::int64_t budget) {
    if (k < 1 || n < 0 || n % k != 0)
        throw std::invalid_argument("balanced words need k to divide n");
    // multinomial(n; n/k, ..., n/k), accumulated as a product of binomials
    __int128 count = 1;
    std::int64_t placed = 0;
    for (Symbol s = 0; s < k; ++s) {
        for (std::int64_t i = 1; i <= n / k; ++i) {
            count = count * (placed + i) / i;  // exact at every step
            if (count > budget)
                throw BudgetError("balanced enumeration of " + std::to_string(n) +
                                  " symbols over " + std::to_string(k) +
                                  " letters exceeds budget " + std::to_string(budget));
        }
        placed += n / k;
    }
    return static_cast<std::int64_t>(count);
}

std::vector<Word> enumerate_balanced(std::int64_t n, Symbol k, std::int64_t budget) {
    const std::int64_t count = count_balanced(n, k, budget);
    std::vector<Word> out;
    out.reserve(count);
    BalancedStream stream(n, k);
    Word w;
    while (stream.next(w)) out.push_back(w);
    return out;
}

std::vector<Word> enumerate_all(std::int64_t n, Symbol k, std::int64_t budget) {
    if (k < 1 || n < 0) throw std::invalid_argument("bad word space");
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        count = checked_mul(count, k, budget);
        if (count > budget)
            throw BudgetError("enumerating [" + std::to_string(k) + "]^" +
                              std::to_string(n) + " exceeds budget " +
                              std::to_string(budget));
    }
    std::vector<Word> out;
    out.reserve(count);
    Word w{std::vector<Symbol>(n, 0), k};
    while (true) {
        out.push_back(w);
        std::int64_t pos = n - 1;
        while (pos >= 0 && w.symbols[pos] == k - 1) w.symbols[pos--] = 0;
        if (pos < 0) break;
        ++w.symbols[pos];
    }
    return out;
}

MinFamilyResult min_family_lcs(const FamilySpace& space, bool distinct,
                               std::int64_t budget, bool parallel) {
    if (space.t < 2) throw std::invalid_argument("family size t must be >= 2");
    std::vector<Word> universe = space.universe == Universe::balanced_only
                                     ? enumerate_balanced(space.n, space.k, budget)
                                     : enumerate_all(space.n, space.k, budget);
    const std::int64_t m = static_cast<std::int64_t>(universe.size());
    if (distinct && space.t > m)
        throw std::invalid_argument("distinct selection larger than the universe");

    const std::int64_t cells = (space.n + 1) * (space.n + 1);
    const std::int64_t dp_work = checked_mul(m * (m - 1) / 2, cells, budget);
    const std::int64_t selections = selection_count(m, space.t, distinct, budget);
    const std::int64_t scan_work =
        checked_mul(selections, space.t * (space.t - 1) / 2, budget);
    if (dp_work > budget || scan_work > budget || dp_work + scan_work > budget)
        throw BudgetError("min_family_lcs work " + std::to_string(dp_work) + "+" +
                          std::to_string(scan_work) + " exceeds budget " +
                          std::to_string(budget));

    // pairwise LCS matrix over the universe
    std::vector<std::int32_t> pair_lcs(m * m, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = i + 1; j < m; ++j) {
            const std::int32_t v =
                static_cast<std::int32_t>(lcs_reference(universe[i], universe[j]));
            pair_lcs[i * m + j] = v;
            pair_lcs[j * m + i] = v;
        }
        pair_lcs[i * m + i] = static_cast<std::int32_t>(universe[i].size());
    }

    // scan all t-selections; ties keep the lexicographically first selection
    struct Best {
        std::int64_t value = -1;
        std::vector<std::size_t> indices;
    };
    auto scan_range = [&](std::int64_t first_lo, std::int64_t first_hi) {
        Best best;
        std::vector<std::size_t> sel(space.t);
        for (std::int64_t first = first_lo; first < first_hi; ++first) {
            sel[0] = first;
            // iterative t-1 nested choice with nondecreasing/increasing indices
            std::int64_t depth = 1;
            std::vector<std::int64_t> cursor(space.t, 0);
            cursor[1] = distinct ? first + 1 : first;
            while (depth >= 1) {
                if (depth == space.t) {
                    std::int64_t worst = 0;
                    for (std::int64_t x = 0; x < space.t && worst >= 0; ++x)
                        for (std::int64_t y = x + 1; y < space.t; ++y)
                            worst = std::max(worst,
                                             static_cast<std::int64_t>(
                                                 pair_lcs[sel[x] * m + sel[y]]));
                    if (best.value < 0 || worst < best.value) {
                        best.value = worst;
                        best.indices.assign(sel.begin(), sel.end());
                    }
                    --depth;
                    continue;
                }
                if (cursor[depth] >= m) {
                    --depth;
                    continue;
                }
                sel[depth] = cursor[depth];
                ++cursor[depth];
                if (depth + 1 < space.t)
                    cursor[depth + 1] = distinct ? sel[depth] + 1 : sel[depth];
                ++depth;
            }
        }
        return best;
    };

    Best best;
    if (parallel) {
        const int shards = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(m, 64)));
        std::vector<Best> partial(shards);
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < shards; ++s) {
            const std::int64_t lo = m * s / shards;
            const std::int64_t hi = m * (s + 1) / shards;
            partial[s] = scan_range(lo, hi);
        }
        for (const Best& b : partial) {
            if (b.value < 0) continue;
            if (best.value < 0 || b.value < best.value ||
                (b.value == best.value && b.indices < best.indices))
                best = b;
        }
    } else {
        best = scan_range(0, m);
    }

    MinFamilyResult res;
    res.value = best.value;
    res.indices = best.indices;
    for (std::size_t idx : best.indices) res.family.push_back(universe[idx]);
    return res;
}

}  // namespace lcsw
