// Timing comparison between the serial reference enumeration and the
// OpenMP radical-sorted search, plus the single-c census at 1 vs P threads.
//
//   abc-bench [N] [census_c]      defaults: N = 100000, census_c = 10000000

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "abc/exhaustive.hpp"

using namespace abc;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timed(F&& f, size_t& out_size) {
    const auto t0 = Clock::now();
    auto result = f();
    out_size = result.size();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const uint32_t N = argc > 1 ? std::atoi(argv[1]) : 100000;
    const uint64_t census_c = argc > 2 ? std::atoll(argv[2]) : 10000000ull;
    const int max_threads = omp_get_max_threads();

    std::printf("enumeration to N = %u\n", N);
    size_t n_oracle = 0, n_fast1 = 0, n_fastP = 0;
    const double t_oracle = timed([&] { return exhaustive::oracle_enumerate(N); }, n_oracle);
    std::printf("  %-32s %8.3fs  (%zu triples)\n", "oracle (serial reference)", t_oracle,
                n_oracle);

    omp_set_num_threads(1);
    const double t1 = timed([&] { return exhaustive::abchome_search(N); }, n_fast1);
    std::printf("  %-32s %8.3fs  (%zu triples)\n", "radical-sorted, 1 thread", t1, n_fast1);

    omp_set_num_threads(max_threads);
    const double tP = timed([&] { return exhaustive::abchome_search(N); }, n_fastP);
    std::printf("  %-32s %8.3fs  (%zu triples)  speedup %.2fx over serial search\n",
                "radical-sorted, max threads", tP, n_fastP, t1 / tP);

    if (n_oracle != n_fast1 || n_fast1 != n_fastP) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }

    std::printf("census at c = %llu\n", static_cast<unsigned long long>(census_c));
    size_t nc1 = 0, ncP = 0;
    omp_set_num_threads(1);
    const double c1 = timed([&] { return exhaustive::census_exact_c(census_c); }, nc1);
    std::printf("  %-32s %8.3fs  (%zu triples)\n", "1 thread", c1, nc1);
    omp_set_num_threads(max_threads);
    const double cP = timed([&] { return exhaustive::census_exact_c(census_c); }, ncP);
    std::printf("  %-32s %8.3fs  (%zu triples)  speedup %.2fx\n", "max threads", cP, ncP,
                c1 / cP);
    if (nc1 != ncP) {
        std::printf("MISMATCH between 1-thread and parallel census\n");
        return 1;
    }
    return 0;
}
