#include "lcsw/word.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lcsw {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

Symbol parse_symbol(std::string_view tok, Symbol k) {
    Symbol v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed symbol '" + std::string(tok) + "'");
    if (v >= k)
        throw std::invalid_argument("symbol " + std::string(tok) +
                                    " out of range for alphabet size " + std::to_string(k));
    return v;
}

// Form chosen by content rather than by k: used by the file reader so that
// digit-form lines stay readable under an inferred k > 10 and vice versa.
std::vector<Symbol> parse_line_adaptive(std::string_view text, Symbol bound) {
    text = trim(text);
    std::vector<Symbol> symbols;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : comma - pos));
            if (tok.empty()) throw std::invalid_argument("empty symbol in comma-separated word");
            symbols.push_back(parse_symbol(tok, bound));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("malformed word character '") + c + "'");
            Symbol v = static_cast<Symbol>(c - '0');
            if (v >= bound)
                throw std::invalid_argument("symbol " + std::string(1, c) +
                                            " out of range for alphabet size " +
                                            std::to_string(bound));
            symbols.push_back(v);
        }
    }
    return symbols;
}

}  // namespace

bool validate_witness(const SubsequenceWitness& wit, const Word& a, const Word& b) {
    const std::size_t len = wit.common.size();
    if (wit.idx_a.size() != len || wit.idx_b.size() != len) return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (wit.idx_a[i] >= a.size() || wit.idx_b[i] >= b.size()) return false;
        if (i > 0 && (wit.idx_a[i] <= wit.idx_a[i - 1] || wit.idx_b[i] <= wit.idx_b[i - 1]))
            return false;
        if (a[wit.idx_a[i]] != wit.common[i] || b[wit.idx_b[i]] != wit.common[i])
            return false;
    }
    return true;
}

Word make_word(std::vector<Symbol> symbols, Symbol alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
    for (Symbol s : symbols)
        if (s >= alphabet_size)
            throw std::invalid_argument("symbol out of range for alphabet size " +
                                        std::to_string(alphabet_size));
    return Word{std::move(symbols), alphabet_size};
}

Word make_word(std::string_view digits, Symbol alphabet_size) {
    return parse_word(digits, alphabet_size);
}

Word parse_word(std::string_view text, Symbol alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
    text = trim(text);
    std::vector<Symbol> symbols;
    if (alphabet_size <= 10) {
        symbols.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("malformed word character '") + c + "'");
            Symbol v = static_cast<Symbol>(c - '0');
            if (v >= alphabet_size)
                throw std::invalid_argument("symbol " + std::string(1, c) +
                                            " out of range for alphabet size " +
                                            std::to_string(alphabet_size));
            symbols.push_back(v);
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : comma - pos));
            if (tok.empty()) throw std::invalid_argument("empty symbol in comma-separated word");
            symbols.push_back(parse_symbol(tok, alphabet_size));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return Word{std::move(symbols), alphabet_size};
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.alphabet_size <= 10) {
        out.reserve(w.size());
        for (Symbol s : w.symbols) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(w.symbols[i]);
        }
    }
    return out;
}

bool is_subsequence(const Word& u, const Word& w) {
    if (u.alphabet_size != w.alphabet_size)
        throw std::invalid_argument("alphabet size mismatch");
    std::size_t i = 0;
    for (std::size_t j = 0; i < u.size() && j < w.size(); ++j)
        if (u[i] == w[j]) ++i;
    return i == u.size();
}

bool is_balanced(const Word& w) {
    if (w.size() % w.alphabet_size != 0) return false;
    const std::int64_t quota = static_cast<std::int64_t>(w.size() / w.alphabet_size);
    std::vector<std::int64_t> counts(w.alphabet_size, 0);
    for (Symbol s : w.symbols) ++counts[s];
    return std::all_of(counts.begin(), counts.end(),
                       [quota](std::int64_t c) { return c == quota; });
}

Word reverse(const Word& w) {
    Word out = w;
    std::reverse(out.symbols.begin(), out.symbols.end());
    return out;
}

Word power(const Word& w, std::size_t m) {
    Word out{{}, w.alphabet_size};
    out.symbols.reserve(w.size() * m);
    for (std::size_t i = 0; i < m; ++i)
        out.symbols.insert(out.symbols.end(), w.symbols.begin(), w.symbols.end());
    return out;
}

Word project(const Word& w, std::span<const Symbol> keep) {
    std::vector<bool> mask(w.alphabet_size, false);
    for (Symbol s : keep) {
        if (s >= w.alphabet_size)
            throw std::invalid_argument("projection symbol out of range");
        mask[s] = true;
    }
    Word out{{}, w.alphabet_size};
    for (Symbol s : w.symbols)
        if (mask[s]) out.symbols.push_back(s);
    return out;
}

std::int64_t count_symbol(const Word& w, Symbol s) {
    return std::count(w.symbols.begin(), w.symbols.end(), s);
}

std::vector<std::int64_t> symbol_counts(const Word& w) {
    std::vector<std::int64_t> counts(w.alphabet_size, 0);
    for (Symbol s : w.symbols) ++counts[s];
    return counts;
}

WordFileData read_words(std::istream& in, std::optional<Symbol> force_k) {
    std::vector<std::string> lines;
    WordFileData out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            // header tokens: whitespace-separated key=value pairs
            sv.remove_prefix(1);
            std::size_t pos = 0;
            while (pos < sv.size()) {
                std::size_t end = sv.find_first_of(" \t", pos);
                std::string_view tok = sv.substr(pos, end == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : end - pos);
                std::size_t eq = tok.find('=');
                if (eq != std::string_view::npos && eq > 0)
                    out.meta.emplace(std::string(tok.substr(0, eq)),
                                     std::string(tok.substr(eq + 1)));
                if (end == std::string_view::npos) break;
                pos = end + 1;
            }
            continue;
        }
        lines.emplace_back(sv);
    }

    Symbol k = 1;
    if (force_k) {
        k = *force_k;
        if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
    } else if (auto it = out.meta.find("k"); it != out.meta.end()) {
        k = parse_symbol(it->second, std::numeric_limits<Symbol>::max());
        if (k < 1) throw std::invalid_argument("header k must be >= 1");
    } else {
        Symbol max_sym = 0;
        for (const std::string& l : lines)
            for (Symbol s : parse_line_adaptive(l, std::numeric_limits<Symbol>::max()))
                max_sym = std::max(max_sym, s);
        k = max_sym + 1;
    }

    for (const std::string& l : lines)
        out.words.push_back(make_word(parse_line_adaptive(l, k), k));
    out.alphabet_size = k;
    return out;
}

void write_words(std::ostream& out, std::span<const Word> words,
                 std::span<const std::string> header_lines) {
    for (const std::string& h : header_lines) out << "# " << h << '\n';
    for (const Word& w : words) out << format_word(w) << '\n';
}

}  // namespace lcsw
