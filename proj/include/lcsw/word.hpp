// word.hpp -- words over {0,...,k-1}, basic predicates and the word file format
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcsw {

using Symbol = std::uint32_t;

/// Finite sequence of symbols from the alphabet {0, ..., alphabet_size-1}.
/// Occurrences are distinguishable through their index into `symbols`.
struct Word {
    std::vector<Symbol> symbols;
    Symbol alphabet_size = 2;

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    Symbol operator[](std::size_t i) const { return symbols[i]; }

    bool operator==(const Word&) const = default;
};

/// A common subsequence of two words A and B together with the strictly
/// increasing index lists that realize it in each.
struct SubsequenceWitness {
    Word common;
    std::vector<std::size_t> idx_a;
    std::vector<std::size_t> idx_b;

    std::size_t length() const { return common.size(); }
};

/// Checks |common| = |idx_a| = |idx_b|, strict monotonicity of both index
/// lists, and symbol agreement with both words.
bool validate_witness(const SubsequenceWitness& wit, const Word& a, const Word& b);

/// Builds a word, throwing std::invalid_argument if any symbol is out of range.
Word make_word(std::vector<Symbol> symbols, Symbol alphabet_size);

/// Shorthand for tests: word from ASCII digits, alphabet_size <= 10.
Word make_word(std::string_view digits, Symbol alphabet_size);

/// Parses one line of the word file format: contiguous ASCII digits when
/// k <= 10, comma-separated decimal symbol indices when k > 10.
Word parse_word(std::string_view text, Symbol alphabet_size);

/// Inverse of parse_word for the same alphabet size.
std::string format_word(const Word& w);

/// True iff u embeds into w order-preservingly. Both words must share an
/// alphabet size.
bool is_subsequence(const Word& u, const Word& w);

/// True iff every symbol of the alphabet occurs exactly n/k times.
bool is_balanced(const Word& w);

Word reverse(const Word& w);

/// Concatenation of m copies of w.
Word power(const Word& w, std::size_t m);

/// Subsequence of w retaining exactly the symbols listed in `keep`.
Word project(const Word& w, std::span<const Symbol> keep);

std::int64_t count_symbol(const Word& w, Symbol s);
std::vector<std::int64_t> symbol_counts(const Word& w);

/// Contents of one word file: words, the alphabet size they were read
/// under, and any "key=value" tokens found on '#' header lines.
struct WordFileData {
    std::vector<Word> words;
    Symbol alphabet_size = 1;
    std::map<std::string, std::string> meta;
};

/// Reads the word file format: one word per line, '#' comment lines,
/// blank lines ignored. The alphabet size is `force_k` when given, else a
/// "k=" header token, else the largest symbol seen plus one.
WordFileData read_words(std::istream& in, std::optional<Symbol> force_k = {});

/// Writes words in the file format, preceded by '#'-prefixed header lines.
void write_words(std::ostream& out, std::span<const Word> words,
                 std::span<const std::string> header_lines = {});

}  // namespace lcsw
