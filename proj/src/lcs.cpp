#include "lcsw/lcs.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lcsw {

namespace {

using Row = std::vector<std::int32_t>;
using Sym = std::span<const Symbol>;

void check_alphabets(const Word& u, const Word& w) {
    if (u.alphabet_size != w.alphabet_size)
        throw std::invalid_argument("alphabet size mismatch");
}

// row[j] = LCS(a, b[0..j))
void lcs_row_forward(Sym a, Sym b, Row& row) {
    row.assign(b.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int32_t diag = 0;
        const Symbol ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::int32_t up = row[j + 1];
            const std::int32_t left = row[j];
            row[j + 1] = ai == b[j] ? diag + 1 : std::max(up, left);
            diag = up;
        }
    }
}

// row[j] = LCS(a, b[j..))
void lcs_row_backward(Sym a, Sym b, Row& row) {
    row.assign(b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- > 0;) {
        std::int32_t diag = 0;
        const Symbol ai = a[i];
        for (std::size_t j = b.size(); j-- > 0;) {
            const std::int32_t down = row[j];
            const std::int32_t right = row[j + 1];
            row[j] = ai == b[j] ? diag + 1 : std::max(down, right);
            diag = down;
        }
    }
}

void hirschberg(Sym a, Sym b, std::size_t a_off, std::size_t b_off,
                std::vector<std::pair<std::size_t, std::size_t>>& out) {
    if (a.empty() || b.empty()) return;
    if (a.size() == 1) {
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] == a[0]) {
                out.emplace_back(a_off, b_off + j);
                return;
            }
        return;
    }
    const std::size_t mid = a.size() / 2;
    Row fwd, bwd;
    lcs_row_forward(a.subspan(0, mid), b, fwd);
    lcs_row_backward(a.subspan(mid), b, bwd);
    std::size_t split = 0;
    std::int32_t best = -1;
    for (std::size_t j = 0; j <= b.size(); ++j)
        if (fwd[j] + bwd[j] > best) {
            best = fwd[j] + bwd[j];
            split = j;
        }
    fwd.clear();
    fwd.shrink_to_fit();
    bwd.clear();
    bwd.shrink_to_fit();
    hirschberg(a.subspan(0, mid), b.subspan(0, split), a_off, b_off, out);
    hirschberg(a.subspan(mid), b.subspan(split), a_off + mid, b_off + split, out);
}

}  // namespace

std::int64_t lcs_len(const Word& u, const Word& w) {
    check_alphabets(u, w);
    // roll rows over the shorter word
    const Word& a = u.size() >= w.size() ? u : w;
    const Word& b = u.size() >= w.size() ? w : u;
    Row row;
    lcs_row_forward(a.symbols, b.symbols, row);
    return row.empty() ? 0 : row.back();
}

std::int64_t lcs_len_par(const Word& u, const Word& w, std::size_t tile) {
    check_alphabets(u, w);
    if (tile < 1) throw std::invalid_argument("tile must be >= 1");
    if (u.empty() || w.empty()) return 0;

    const Sym a = u.symbols;
    const Sym b = w.symbols;
    const std::size_t rows = a.size(), cols = b.size();
    const std::size_t si = (rows + tile - 1) / tile;
    const std::size_t sj = (cols + tile - 1) / tile;

    // h: bottom DP row of the last finished tile per column stripe;
    // v: right DP column per row stripe; tiles on one anti-diagonal touch
    // disjoint stripes. Corner values are double-buffered across rounds
    // because the neighbour tiles overwrite h/v before they are consumed.
    Row h(cols, 0), v(rows, 0);
    Row corner_cur(sj + 1, 0), corner_next(sj + 1, 0);

    for (std::size_t round = 0; round < si + sj - 1; ++round) {
        const std::size_t i_lo = round >= sj ? round - sj + 1 : 0;
        const std::size_t i_hi = std::min(si - 1, round);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t ti = i_lo; ti <= i_hi; ++ti) {
            const std::size_t tj = round - ti;
            const std::size_t r0 = ti * tile, r1 = std::min(rows, r0 + tile);
            const std::size_t c0 = tj * tile, c1 = std::min(cols, c0 + tile);
            const std::size_t tw = c1 - c0;

            corner_next[tj + 1] = h[c1 - 1];  // DP[r0-1][c1-1], saved before overwrite
            const std::int32_t corner = (ti == 0 || tj == 0) ? 0 : corner_cur[tj];

            Row left_col(r1 - r0);
            for (std::size_t ii = 0; ii < r1 - r0; ++ii)
                left_col[ii] = tj == 0 ? 0 : v[r0 + ii];

            Row row(tw);
            for (std::size_t jj = 0; jj < tw; ++jj) row[jj] = ti == 0 ? 0 : h[c0 + jj];

            for (std::size_t i = r0; i < r1; ++i) {
                const Symbol ai = a[i];
                const std::size_t ii = i - r0;
                std::int32_t diag = ii == 0 ? corner : left_col[ii - 1];
                std::int32_t left = left_col[ii];
                for (std::size_t jj = 0; jj < tw; ++jj) {
                    const std::int32_t up = row[jj];
                    const std::int32_t cell =
                        ai == b[c0 + jj] ? diag + 1 : std::max(up, left);
                    row[jj] = cell;
                    diag = up;
                    left = cell;
                }
                v[i] = left;
            }
            for (std::size_t jj = 0; jj < tw; ++jj) h[c0 + jj] = row[jj];
        }
        std::swap(corner_cur, corner_next);
    }
    return h[cols - 1];
}

SubsequenceWitness lcs_witness(const Word& u, const Word& w) {
    check_alphabets(u, w);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    hirschberg(u.symbols, w.symbols, 0, 0, pairs);
    SubsequenceWitness wit;
    wit.common.alphabet_size = u.alphabet_size;
    wit.common.symbols.reserve(pairs.size());
    wit.idx_a.reserve(pairs.size());
    wit.idx_b.reserve(pairs.size());
    for (auto [ia, ib] : pairs) {
        wit.common.symbols.push_back(u[ia]);
        wit.idx_a.push_back(ia);
        wit.idx_b.push_back(ib);
    }
    return wit;
}

std::vector<std::int64_t> pairwise_lcs_matrix(std::span<const Word> family, bool parallel) {
    const std::size_t m = family.size();
    for (std::size_t i = 1; i < m; ++i)
        if (family[i].alphabet_size != family[0].alphabet_size)
            throw std::invalid_argument("family words must share an alphabet size");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::int64_t> lens(pairs.size(), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t p = 0; p < pairs.size(); ++p)
            lens[p] = lcs_len(family[pairs[p].first], family[pairs[p].second]);
    } else {
        for (std::size_t p = 0; p < pairs.size(); ++p)
            lens[p] = lcs_len(family[pairs[p].first], family[pairs[p].second]);
    }
    return lens;
}

FamilyLcsResult family_lcs(std::span<const Word> family, bool parallel) {
    if (family.size() < 2)
        throw std::invalid_argument("family_lcs needs at least two words");
    const std::vector<std::int64_t> lens = pairwise_lcs_matrix(family, parallel);
    FamilyLcsResult res;
    res.length = -1;
    std::size_t p = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j, ++p)
            if (lens[p] > res.length) {
                res.length = lens[p];
                res.i = i;
                res.j = j;
            }
    res.witness = lcs_witness(family[res.i], family[res.j]);
    return res;
}

}  // namespace lcsw
