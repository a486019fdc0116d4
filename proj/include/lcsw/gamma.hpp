// gamma.hpp -- Monte Carlo estimation of the random-word LCS ratio
#pragma once

#include <cstdint>

#include "lcsw/word.hpp"

namespace lcsw {

struct GammaEstimate {
    std::int64_t k = 2;
    std::int64_t n = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double mean_lcs = 0.0;
    double mean_ratio = 0.0;  // gamma hat
    double std_dev = 0.0;     // sample standard deviation of the LCS lengths
    double ci_lo = 0.0;       // 95% interval for the ratio
    double ci_hi = 0.0;
    double gamma_sqrtk = 0.0;
};

/// Draws `samples` independent word pairs from [k]^n (sample i uses RNG
/// substream i, so the result is independent of evaluation order) and
/// reports the LCS statistics. Deterministic per (k, n, samples, seed).
GammaEstimate estimate_gamma(std::int64_t k, std::int64_t n, std::int64_t samples,
                             std::uint64_t seed, bool parallel = true,
                             std::int64_t work_budget = 10'000'000'000);

}  // namespace lcsw
