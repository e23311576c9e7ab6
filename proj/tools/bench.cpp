// Times the parallel kernels against their serial reference on realistic
// data (quintic-flavored series with large exact rationals) and a prime
// sweep. Wall-clock only; results vary with --jobs.

#include "mirrorlab/dwork.hpp"
#include "mirrorlab/hypergeom.hpp"
#include "mirrorlab/series.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace mirrorlab;

namespace {

double time_ms(const std::function<void()>& fn, int reps)
{
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"kernel benchmarks: serial reference vs OpenMP"};
    std::size_t order = 160;
    int reps = 3;
    unsigned jobs = 0;
    app.add_option("--order", order, "Series truncation order");
    app.add_option("--reps", reps, "Repetitions per measurement");
    app.add_option("--jobs", jobs, "Worker threads (0 = library default)");
    CLI11_PARSE(app, argc, argv);
    if (jobs > 0) omp_set_num_threads(static_cast<int>(jobs));

    HGParams quintic = HGParams::parse("1/5,2/5,3/5,4/5");
    Series F = series_F(quintic, order);
    Series G = series_G(quintic, order);

    std::printf("threads: %d, order: %zu, reps: %d\n", omp_get_max_threads(), order, reps);

    volatile bool sink = false;
    double serial = time_ms([&] { sink = mul_serial(F, G)[order - 1] == 0; }, reps);
    double parallel = time_ms([&] { sink = (F * G)[order - 1] == 0; }, reps);
    std::printf("%-28s %10.2f ms\n", "product (serial)", serial);
    std::printf("%-28s %10.2f ms   speedup %.2fx\n", "product (parallel)", parallel,
                serial / parallel);

    double div_ms = time_ms([&] { sink = (G / F)[order - 1] == 0; }, reps);
    std::printf("%-28s %10.2f ms\n", "quotient (parallel dots)", div_ms);

    Series q = mirror_q(quintic, order);
    auto primes = primes_up_to(31);
    CellChecks checks;
    double sweep_serial = time_ms(
        [&] {
            for (unsigned long p : primes) {
                if (!quintic.is_good_prime(p)) continue;
                auto rep = integrality_report(quintic, q, p, order - 1, checks);
                sink = rep.condition_holds;
            }
        },
        reps);
    double sweep_parallel = time_ms(
        [&] {
            std::vector<unsigned long> good;
            for (unsigned long p : primes) {
                if (quintic.is_good_prime(p)) good.push_back(p);
            }
            std::vector<IntegralityReport> reports(good.size());
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(good.size()); ++i) {
                reports[i] = integrality_report(quintic, q, good[i], order - 1, checks);
            }
            sink = reports.back().condition_holds;
        },
        reps);
    std::printf("%-28s %10.2f ms\n", "prime sweep (serial)", sweep_serial);
    std::printf("%-28s %10.2f ms   speedup %.2fx\n", "prime sweep (parallel)", sweep_parallel,
                sweep_serial / sweep_parallel);
    return 0;
}
