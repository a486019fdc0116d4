// bench.cpp -- timings of the OpenMP kernels against their serial references
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcsw/gamma.hpp"
#include "lcsw/lcs.hpp"
#include "lcsw/oracle.hpp"
#include "lcsw/rng.hpp"

using namespace lcsw;

namespace {

template <typename F>
double time_ms(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif
    SplitMix64 rng(2024);

    {
        const std::size_t n = 12000;
        const Word u = random_word(rng, n, 4);
        const Word w = random_word(rng, n, 4);
        std::int64_t serial_len = 0, par_len = 0;
        const double serial = time_ms([&] { serial_len = lcs_len(u, w); });
        const double par = time_ms([&] { par_len = lcs_len_par(u, w); });
        std::printf("lcs_len %zux%zu        serial %8.1f ms   wavefront %8.1f ms   "
                    "(len %lld/%lld)\n",
                    n, n, serial, par, static_cast<long long>(serial_len),
                    static_cast<long long>(par_len));
    }

    {
        std::vector<Word> family;
        for (int i = 0; i < 12; ++i) family.push_back(random_word(rng, 2500, 3));
        std::int64_t a = 0, b = 0;
        const double serial = time_ms([&] { a = family_lcs(family, false).length; });
        const double par = time_ms([&] { b = family_lcs(family, true).length; });
        std::printf("family_lcs 12x2500     serial %8.1f ms   pairs-omp %8.1f ms   "
                    "(len %lld/%lld)\n",
                    serial, par, static_cast<long long>(a), static_cast<long long>(b));
    }

    {
        double a = 0.0, b = 0.0;
        const double serial =
            time_ms([&] { a = estimate_gamma(4, 1200, 64, 7, false).mean_lcs; });
        const double par =
            time_ms([&] { b = estimate_gamma(4, 1200, 64, 7, true).mean_lcs; });
        std::printf("gamma k=4 n=1200 s=64  serial %8.1f ms   samples-omp %6.1f ms  "
                    "(mean %.2f/%.2f)\n",
                    serial, par, a, b);
    }

    {
        const FamilySpace space{8, 2, Universe::balanced_only, 3};
        std::int64_t a = 0, b = 0;
        const double serial = time_ms(
            [&] { a = min_family_lcs(space, true, 100'000'000, false).value; });
        const double par = time_ms(
            [&] { b = min_family_lcs(space, true, 100'000'000, true).value; });
        std::printf("scan balanced n=8 t=3  serial %8.1f ms   shards-omp %7.1f ms  "
                    "(min %lld/%lld)\n",
                    serial, par, static_cast<long long>(a), static_cast<long long>(b));
    }
    return 0;
}
