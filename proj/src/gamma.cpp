#include "lcsw/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lcsw/lcs.hpp"
#include "lcsw/oracle.hpp"
#include "lcsw/rng.hpp"

namespace lcsw {

GammaEstimate estimate_gamma(std::int64_t k, std::int64_t n, std::int64_t samples,
                             std::uint64_t seed, bool parallel,
                             std::int64_t work_budget) {
    if (k < 1 || n < 1) throw std::invalid_argument("estimate_gamma needs k, n >= 1");
    if (samples < 2) throw std::invalid_argument("estimate_gamma needs samples >= 2");
    const std::int64_t cells = (n + 1) * (n + 1);
    if (cells > work_budget / samples)
        throw BudgetError("gamma sampling work " + std::to_string(samples) + "x" +
                          std::to_string(cells) + " cells exceeds budget " +
                          std::to_string(work_budget));

    std::vector<std::int64_t> lengths(samples, 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < samples; ++i) {
        SplitMix64 rng(seed, static_cast<std::uint64_t>(i));
        const Word u = random_word(rng, n, static_cast<Symbol>(k));
        const Word w = random_word(rng, n, static_cast<Symbol>(k));
        lengths[i] = lcs_len(u, w);
    }

    GammaEstimate est;
    est.k = k;
    est.n = n;
    est.samples = samples;
    est.seed = seed;
    double sum = 0.0;
    for (std::int64_t len : lengths) sum += static_cast<double>(len);
    est.mean_lcs = sum / static_cast<double>(samples);
    est.mean_ratio = est.mean_lcs / static_cast<double>(n);
    double sq = 0.0;
    for (std::int64_t len : lengths) {
        const double d = static_cast<double>(len) - est.mean_lcs;
        sq += d * d;
    }
    est.std_dev = std::sqrt(sq / static_cast<double>(samples - 1));
    const double sem = est.std_dev / std::sqrt(static_cast<double>(samples));
    est.ci_lo = est.mean_ratio - 1.96 * sem / static_cast<double>(n);
    est.ci_hi = est.mean_ratio + 1.96 * sem / static_cast<double>(n);
    est.gamma_sqrtk = est.mean_ratio * std::sqrt(static_cast<double>(k));
    return est;
}

}  // namespace lcsw
