#include "radixplan/perf_model.hpp"

#include <cmath>
#include <stdexcept>

#include "radixplan/fft.hpp"

namespace radixplan {

void MachineProfile::validate() const {
  if (bandwidth_gbs <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
  if (p_cpu_gflops <= 0.0 || p_gpu_gflops <= 0.0)
    throw std::invalid_argument("pool throughput must be > 0");
  if ((watts_cpu && *watts_cpu <= 0.0) || (watts_gpu && *watts_gpu <= 0.0))
    throw std::invalid_argument("wattage must be > 0");
}

double fft_flops(std::size_t n) {
  return 5.0 * static_cast<double>(n) * static_cast<double>(log2_exact(n));
}

double max_throughput(std::size_t fft_size, double bandwidth_gbs) {
  if (fft_size < 2 || !is_power_of_two(fft_size))
    throw std::invalid_argument("FFT size must be a power of two >= 2");
  if (bandwidth_gbs <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
  const double n = static_cast<double>(fft_size);
  return fft_flops(fft_size) * bandwidth_gbs / (2.0 * 4.0 * n);
}

double achieved_gflops(std::size_t fft_size, std::size_t count, double elapsed_seconds) {
  if (elapsed_seconds <= 0.0) throw std::invalid_argument("elapsed time must be > 0");
  return static_cast<double>(count) * fft_flops(fft_size) / elapsed_seconds / 1e9;
}

double gflops_per_watt(double gflops, double watts) {
  if (watts <= 0.0) throw std::invalid_argument("wattage must be > 0");
  return gflops / watts;
}

double optimal_cpu_ratio(double p_cpu_gflops, double p_gpu_gflops) {
  if (p_cpu_gflops <= 0.0 || p_gpu_gflops <= 0.0)
    throw std::invalid_argument("pool throughput must be > 0");
  return 1.0 / (p_gpu_gflops / p_cpu_gflops + 1.0);
}

double constrained_cpu_ratio(double p_cpu_gflops, double p_gpu_gflops, double cpu_load_cap) {
  if (cpu_load_cap <= 0.0 || cpu_load_cap > 1.0)
    throw std::invalid_argument("cpu load cap must be in (0, 1]");
  return optimal_cpu_ratio(p_cpu_gflops * cpu_load_cap, p_gpu_gflops);
}

SplitDecision split_batch(std::size_t batch, double ratio) {
  if (ratio < 0.0 || ratio > 1.0) throw std::invalid_argument("ratio must be in [0, 1]");
  SplitDecision split;
  split.cpu_ratio = ratio;
  split.batch = batch;
  split.s_cpu = static_cast<std::size_t>(std::floor(static_cast<double>(batch) * ratio));
  split.s_gpu = batch - split.s_cpu;
  return split;
}

}  // namespace radixplan
