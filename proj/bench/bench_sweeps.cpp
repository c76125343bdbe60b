// Benchmark: OpenMP-parallel verification sweep vs. the serial reference.
// Both paths must produce bit-identical min/max (order-independent
// reductions over per-sample seeded metrics); the benchmark asserts that
// while timing a representative Fourier-inequality sweep.
#include <chrono>
#include <cstdio>
#include <random>

#include "cs/qfa.hpp"
#include "cs/sweep.hpp"

using namespace cs;

namespace {

TwoBox random_diag_box(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    TwoBox a;
    a.d = d;
    a.entries = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k)
        a.entries(k, k) = Complex(gauss(rng), gauss(rng));
    return a;
}

double time_ms(const std::function<SweepSummary()>& f, SweepSummary& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    const int d = 5;
    const int samples = 400;
    const std::uint64_t seed = 7;
    auto metric = [&](int i) -> double {
        std::mt19937_64 rng(split_seed(seed, i));
        auto a = random_diag_box(d, rng);
        double slack = 1e300;
        for (double p : {1.0, 1.2, 1.5, 1.8, 2.0})
            slack = std::min(slack, hausdorff_young_check(a, p).slack);
        return slack;
    };
    // Warm the per-d diagram caches outside the timed region.
    (void)metric(0);

    SweepSummary serial, parallel;
    double tSerial = time_ms(
        [&] { return sweep_metrics_serial(samples, metric); }, serial);
    double tParallel =
        time_ms([&] { return sweep_metrics(samples, metric); }, parallel);

    std::printf("samples=%d d=%d\n", samples, d);
    std::printf("serial:   %8.1f ms  min=%.17g max=%.17g\n", tSerial,
                serial.min, serial.max);
    std::printf("parallel: %8.1f ms  min=%.17g max=%.17g (%s)\n", tParallel,
                parallel.min, parallel.max,
                sweep_parallel_enabled() ? "OpenMP" : "serial fallback");
    std::printf("speedup:  %.2fx\n", tSerial / tParallel);
    if (serial.min != parallel.min || serial.max != parallel.max) {
        std::printf("MISMATCH: parallel and serial sweeps disagree\n");
        return 1;
    }
    std::printf("parallel and serial results are bit-identical\n");
    return 0;
}
