// Times the parallel census kernels against their single-threaded
// references and checks that both produce identical censuses.
#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "hvg/enumerate.hpp"
#include "hvg/error.hpp"

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void compare(const char* label, const hvg::Census& serial, const hvg::Census& parallel) {
    if (serial.graphs != parallel.graphs) {
        throw hvg::Error(std::string("census mismatch in ") + label);
    }
}

} // namespace

int main(int argc, char** argv) {
    int workers = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    std::printf("census kernels, serial vs %d worker(s); times in ms\n\n", workers);

    std::printf("pairwise-distinct universe\n");
    std::printf("  n     serial   parallel    graphs\n");
    for (int n = 6; n <= 9; ++n) {
        hvg::Census serial, parallel;
        double serial_ms = time_ms([&] { serial = hvg::enumerate_distinct_reference(n); });
        double parallel_ms =
            time_ms([&] { parallel = hvg::enumerate_distinct_bruteforce(n, workers); });
        compare("distinct census", serial, parallel);
        std::printf("%3d %10.1f %10.1f %9zu\n", n, serial_ms, parallel_ms,
                    serial.graphs.size());
    }

    std::printf("\nunrestricted universe\n");
    std::printf("  n     serial   parallel    graphs\n");
    for (int n = 6; n <= 8; ++n) {
        hvg::Census serial, parallel;
        double serial_ms = time_ms([&] { serial = hvg::enumerate_all_reference(n); });
        double parallel_ms =
            time_ms([&] { parallel = hvg::enumerate_all_bruteforce(n, workers); });
        compare("unrestricted census", serial, parallel);
        std::printf("%3d %10.1f %10.1f %9zu\n", n, serial_ms, parallel_ms,
                    serial.graphs.size());
    }

    std::printf("\nsampled visibility-graph census, n=6, 200000 trials\n");
    std::printf("  workers     ms   distinct\n");
    std::size_t base = 0;
    for (int w = 1; w <= workers * 2; w *= 2) {
        std::size_t found = 0;
        double ms = time_ms([&] { found = hvg::vg_census_random(6, 200000, 42, 1000000000LL, w); });
        if (base == 0) base = found;
        if (found != base) throw hvg::Error("sampled census depends on worker count");
        std::printf("%9d %6.1f %10zu\n", w, ms, found);
    }
    std::printf("\nall comparisons matched\n");
    return 0;
}
