#pragma once

#include <cstdint>
#include <functional>

namespace cs {

/// Summary of a randomized verification sweep: the extreme values of the
/// per-sample metric. Min/max reductions are order-independent, so the
/// parallel and serial paths produce bit-identical results.
struct SweepSummary {
    double min = 0;
    double max = 0;
    int samples = 0;
};

/// Evaluates metric(i) for i in [0, samples). Parallelized with OpenMP
/// when available; the metric must be thread-safe (derive per-sample
/// randomness from the index, e.g. via split_seed).
SweepSummary sweep_metrics(int samples,
                           const std::function<double(int)>& metric);

/// Serial reference implementation (kept for testing and benchmarking).
SweepSummary sweep_metrics_serial(int samples,
                                  const std::function<double(int)>& metric);

/// True when the parallel path actually runs multi-threaded.
bool sweep_parallel_enabled();

/// splitmix64 stream: derives a per-sample RNG seed from (seed, index) so
/// sweeps are deterministic and order-independent.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cs
