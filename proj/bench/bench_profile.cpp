// Serial vs OpenMP exhaustive profiling. Usage: bench_profile [n_min] [n_max] [reps]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "symbool/report.hpp"
#include "symbool/search.hpp"

using namespace symbool;

namespace {

template <class Run>
double best_of(int reps, Run&& run)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        run();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv)
{
    const int lo = argc > 1 ? std::atoi(argv[1]) : 8;
    const int hi = argc > 2 ? std::atoi(argv[2]) : kMaxSearchVars;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 3;
    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%4s %12s %12s %8s %s\n", "n", "serial_s", "parallel_s", "speedup", "same");
    for (int n = lo; n <= hi; ++n) {
        SearchReport s, p;
        const double ts = best_of(reps, [&] { s = profile_all_serial(n); });
        const double tp = best_of(reps, [&] { p = profile_all(n); });
        const bool same = search_report_json(s).dump() == search_report_json(p).dump();
        std::printf("%4d %12.4f %12.4f %8.2f %s\n", n, ts, tp, ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
