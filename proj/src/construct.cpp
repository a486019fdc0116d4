#include "lcsw/construct.hpp"

#include <cmath>
#include <stdexcept>

namespace lcsw {

LayerScale scale_m(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t i) {
    if (k < 2 || r < 1 || i < 0 || i > r || n < k)
        throw std::invalid_argument("scale_m needs k >= 2, r >= 1, 0 <= i <= r, n >= k");
    LayerScale scale{n, k, r, i, 1};
    if (i == 0) return scale;
    if (i == r) {
        scale.m = std::max<std::int64_t>(1, n / k);
        return scale;
    }
    const double x = std::pow(static_cast<double>(n) / static_cast<double>(k),
                              static_cast<double>(i) / static_cast<double>(r));
    // round to nearest, ties up
    scale.m = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(x + 0.5)));
    return scale;
}

Word build_layer_word(std::int64_t n, std::int64_t k, std::int64_t m, bool reversed) {
    if (k < 2 || m < 1 || n < 0)
        throw std::invalid_argument("build_layer_word needs k >= 2, m >= 1, n >= 0");
    if (n % k != 0)
        throw std::invalid_argument("layer word needs n divisible by k");
    if (n < k * m)
        throw std::invalid_argument("layer word needs n >= k*m");

    Word w{{}, static_cast<Symbol>(k)};
    w.symbols.reserve(n);
    auto emit_runs = [&](std::int64_t run) {
        for (std::int64_t s = 0; s < k; ++s) {
            const Symbol sym = static_cast<Symbol>(reversed ? k - 1 - s : s);
            w.symbols.insert(w.symbols.end(), run, sym);
        }
    };
    const std::int64_t full_blocks = n / (k * m);
    for (std::int64_t b = 0; b < full_blocks; ++b) emit_runs(m);
    // truncated final block: one cycle of equal runs tops every symbol up
    // to exactly n/k occurrences (the leftover per symbol is (n/k) mod m)
    const std::int64_t need = n / k - full_blocks * m;
    if (need > 0) emit_runs(need);
    return w;
}

std::vector<Word> build_family_main(std::int64_t n, std::int64_t k, std::int64_t r) {
    if (k < 2 || r < 1 || n < k || n % k != 0)
        throw std::invalid_argument(
            "build_family_main needs k >= 2, r >= 1, n >= k, k | n");
    std::vector<Word> family;
    family.reserve(r + k + 2);
    for (std::int64_t i = 0; i <= r; ++i)
        family.push_back(build_layer_word(n, k, scale_m(n, k, r, i).m, false));
    family.push_back(build_layer_word(n, k, scale_m(n, k, r, r).m, true));
    for (std::int64_t s = 0; s < k; ++s)
        family.push_back(Word{std::vector<Symbol>(n, static_cast<Symbol>(s)),
                              static_cast<Symbol>(k)});
    return family;
}

std::vector<Word> build_baseline_family(std::int64_t n, std::int64_t k,
                                        BaselineMode mode, std::int64_t t) {
    if (k < 1 || n < 0) throw std::invalid_argument("bad baseline parameters");
    std::vector<Word> family;
    if (mode == BaselineMode::unary) {
        if (t == 0) t = k;
        if (t < 2 || t > k)
            throw std::invalid_argument("unary family needs 2 <= t <= k");
        for (std::int64_t s = 0; s < t; ++s)
            family.push_back(Word{std::vector<Symbol>(n, static_cast<Symbol>(s)),
                                  static_cast<Symbol>(k)});
    } else {
        if (k < 2 || n % k != 0)
            throw std::invalid_argument("k-plus-1 family needs k >= 2 and k | n");
        for (std::int64_t s = 0; s < k; ++s)
            family.push_back(Word{std::vector<Symbol>(n, static_cast<Symbol>(s)),
                                  static_cast<Symbol>(k)});
        family.push_back(build_layer_word(n, k, 1, false));  // (01...k-1)^{n/k}
    }
    return family;
}

std::pair<BoundValue, BoundValue> bound_values(std::int64_t n, std::int64_t k,
                                               std::int64_t r, double c_lower) {
    if (k < 2 || r < 1) throw std::invalid_argument("bound_values needs k >= 2, r >= 1");
    const double dn = static_cast<double>(n);
    const double shape = std::pow(dn, 1.0 - 1.0 / static_cast<double>(r));
    BoundValue upper{n, k, r,
                     dn / static_cast<double>(k) +
                         std::pow(static_cast<double>(k), 1.0 / static_cast<double>(r)) *
                             shape};
    BoundValue lower{n, k, r, dn / static_cast<double>(k) + c_lower * shape};
    return {upper, lower};
}

std::vector<std::string> family_header(std::int64_t n, std::int64_t k, std::int64_t r,
                                       const std::string& mode,
                                       const std::vector<std::int64_t>& m_list) {
    std::string m_str;
    for (std::size_t i = 0; i < m_list.size(); ++i) {
        if (i > 0) m_str.push_back(',');
        m_str += std::to_string(m_list[i]);
    }
    std::string line = "lcsw-family n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " r=" + std::to_string(r) + " mode=" + mode;
    if (!m_list.empty()) line += " m=" + m_str;
    return {line};
}

}  // namespace lcsw
