#pragma once

#include <cstddef>
#include <optional>

namespace radixplan {

/// Throughput/bandwidth description of the two worker pools.
struct MachineProfile {
  double bandwidth_gbs = 0.0;  // host <-> device memory bandwidth, GB/s
  double p_cpu_gflops = 0.0;
  double p_gpu_gflops = 0.0;
  std::optional<double> watts_cpu;
  std::optional<double> watts_gpu;

  void validate() const;  // every present value must be > 0
};

/// Static assignment of a batch of S identical tasks to the two pools.
struct SplitDecision {
  double cpu_ratio = 0.0;
  std::size_t s_cpu = 0;
  std::size_t s_gpu = 0;
  std::size_t batch = 0;
};

/// Flop-count convention used throughout: 5 * N * log2(N) per complex FFT.
double fft_flops(std::size_t n);

/// Bandwidth-bound throughput ceiling, 5*N*log2(N)*B / (2*4*N) GFlops.
double max_throughput(std::size_t fft_size, double bandwidth_gbs);

/// count FFTs of size n in `elapsed_seconds`, as GFlops.
double achieved_gflops(std::size_t fft_size, std::size_t count, double elapsed_seconds);

double gflops_per_watt(double gflops, double watts);

/// Fraction of the batch the CPU pool should take so both pools finish
/// together: 1 / (p_gpu/p_cpu + 1).
double optimal_cpu_ratio(double p_cpu_gflops, double p_gpu_gflops);

/// Same, with the CPU contributing only cpu_load_cap of its throughput.
double constrained_cpu_ratio(double p_cpu_gflops, double p_gpu_gflops, double cpu_load_cap);

/// s_cpu = floor(S * ratio); the remainder goes to the GPU pool.
SplitDecision split_batch(std::size_t batch, double ratio);

}  // namespace radixplan
