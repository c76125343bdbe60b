#include "cs/sweep.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef CS_HAVE_OPENMP
#include <omp.h>
#endif

namespace cs {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SweepSummary sweep_metrics_serial(int samples,
                                  const std::function<double(int)>& metric) {
    if (samples < 0) throw std::invalid_argument("sweep: negative samples");
    SweepSummary out;
    out.samples = samples;
    out.min = std::numeric_limits<double>::infinity();
    out.max = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        double v = metric(i);
        out.min = std::min(out.min, v);
        out.max = std::max(out.max, v);
    }
    if (samples == 0) out.min = out.max = 0;
    return out;
}

SweepSummary sweep_metrics(int samples,
                           const std::function<double(int)>& metric) {
#ifdef CS_HAVE_OPENMP
    if (samples < 0) throw std::invalid_argument("sweep: negative samples");
    SweepSummary out;
    out.samples = samples;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(dynamic) reduction(min : lo) \
    reduction(max : hi)
    for (int i = 0; i < samples; ++i) {
        double v = metric(i);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out.min = samples == 0 ? 0 : lo;
    out.max = samples == 0 ? 0 : hi;
    return out;
#else
    return sweep_metrics_serial(samples, metric);
#endif
}

bool sweep_parallel_enabled() {
#ifdef CS_HAVE_OPENMP
    return omp_get_max_threads() > 1;
#else
    return false;
#endif
}

}  // namespace cs
