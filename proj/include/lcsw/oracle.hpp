// oracle.hpp -- brute-force references with a hard exhaustiveness budget
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcsw/word.hpp"

namespace lcsw {

/// Raised when an exhaustive computation would exceed its budget.
/// Oracles are exhaustive or absent; they never sample silently.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

/// LCS length by memoized recursion over suffixes; deliberately a different
/// shape from the iterative kernel it cross-checks.
std::int64_t lcs_reference(const Word& u, const Word& w);

/// Streams the balanced words of [k]^n in lexicographic order.
class BalancedStream {
public:
    BalancedStream(std::int64_t n, Symbol k);
    bool next(Word& out);  // false once exhausted

private:
    Word current_;
    bool done_ = false;
    bool first_ = true;
};

/// Number of balanced words of [k]^n; throws BudgetError beyond `budget`.
std::int64_t count_balanced(std::int64_t n, Symbol k, std::int64_t budget);

/// All balanced words, lexicographic; cardinality capped by `budget`.
std::vector<Word> enumerate_balanced(std::int64_t n, Symbol k,
                                     std::int64_t budget = kDefaultBudget);

/// All words of [k]^n, lexicographic; cardinality capped by `budget`.
std::vector<Word> enumerate_all(std::int64_t n, Symbol k,
                                std::int64_t budget = kDefaultBudget);

enum class Universe { all_words, balanced_only };

struct FamilySpace {
    std::int64_t n = 0;
    Symbol k = 2;
    Universe universe = Universe::all_words;
    std::int64_t t = 2;  // family size
};

struct MinFamilyResult {
    std::int64_t value = 0;
    std::vector<std::size_t> indices;  // into the enumerated universe
    std::vector<Word> family;
};

/// Exact minimum of the family LCS over all t-selections from the universe.
/// `distinct` selects subsets; multisets allow repeats (a repeated word
/// forces the pair value |w|, so bound checks use distinct mode).
/// Work is budgeted as DP cells for the pair matrix plus selection scans.
MinFamilyResult min_family_lcs(const FamilySpace& space, bool distinct = true,
                               std::int64_t budget = kDefaultBudget,
                               bool parallel = true);

}  // namespace lcsw
