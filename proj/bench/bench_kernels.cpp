// Compares the OpenMP kernels against their serial reference
// implementations and reports timings plus result equality.
//
//   bench_kernels [--large]
//
// --large adds the 2^32-word RM(5,4) coset scan (tens of seconds serial).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include <omp.h>

#include "rmcap/bounds.hpp"
#include "rmcap/capability.hpp"
#include "rmcap/montecarlo.hpp"
#include "rmcap/rm_code.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool profiles_equal(const rmcap::CapabilityProfile& a, const rmcap::CapabilityProfile& b) {
    return a.correctable == b.correctable && a.covering_radius == b.covering_radius &&
           a.num_cosets == b.num_cosets;
}

void bench_profile(int n, int r) {
    const auto code = rmcap::build_rm(n, r);
    auto t0 = Clock::now();
    const auto serial = rmcap::exact_capability_profile_serial(code);
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const auto parallel = rmcap::exact_capability_profile(code);
    const double parallel_ms = ms_since(t0);

    std::printf("coset scan RM(%d,%d)   serial %10.2f ms   parallel %10.2f ms   x%.2f   %s\n",
                n, r, serial_ms, parallel_ms, serial_ms / parallel_ms,
                profiles_equal(serial, parallel) ? "results match" : "MISMATCH");
}

void bench_mc(int n, int r, uint64_t trials) {
    const auto code = rmcap::build_rm(n, r);
    const auto params = rmcap::threshold(1.0, n, r);
    const uint64_t t = static_cast<uint64_t>(params.t_c);

    auto t0 = Clock::now();
    const auto serial = rmcap::estimate_correctable_fraction_serial(code, t, trials, 42);
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const auto parallel = rmcap::estimate_correctable_fraction(code, t, trials, 42);
    const double parallel_ms = ms_since(t0);

    std::printf("mc RM(%d,%d) %6lu@t=%lu  serial %10.2f ms   parallel %10.2f ms   x%.2f   %s\n",
                n, r, static_cast<unsigned long>(trials), static_cast<unsigned long>(t),
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                serial.successes == parallel.successes ? "results match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    bool large = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--large") == 0) large = true;

    std::printf("workers available: %d\n", omp_get_max_threads());
    bench_profile(4, 1);
    bench_profile(4, 2);
    bench_mc(12, 1, 20000);
    bench_mc(10, 2, 2000);
    if (large) bench_profile(5, 4);
    return 0;
}
