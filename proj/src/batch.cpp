#include "radixplan/batch.hpp"

#include <chrono>
#include <span>
#include <stdexcept>

#include "radixplan/perf_model.hpp"

namespace radixplan {

namespace {

void check_grid(const SignalGrid& grid, const MixedRadixFft& fft) {
  if (grid.cols != fft.size())
    throw std::invalid_argument("grid row length does not match transform size");
}

SignalGrid random_grid(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  SignalGrid grid(rows, cols);
  const Signal samples = random_signal(rows * cols, seed);
  std::copy(samples.begin(), samples.end(), grid.data.begin());
  return grid;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void fft_rows_serial(SignalGrid& grid, const MixedRadixFft& fft, Direction direction) {
  check_grid(grid, fft);
  for (std::size_t r = 0; r < grid.rows; ++r)
    fft.execute_inplace(std::span(grid.row(r), grid.cols), direction);
}

void fft_rows_parallel(SignalGrid& grid, const MixedRadixFft& fft, Direction direction) {
  check_grid(grid, fft);
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < grid.rows; ++r)
    fft.execute_inplace(std::span(grid.row(r), grid.cols), direction);
}

namespace {

template <typename SweepFn>
double best_gflops(const MixedRadixFft& fft, std::size_t rows, int reps, std::uint64_t seed,
                   SweepFn&& sweep) {
  if (reps < 1) throw std::invalid_argument("need at least one repetition");
  SignalGrid grid = random_grid(rows, fft.size(), seed);
  double best = 0.0;
  for (int i = 0; i < reps + 1; ++i) {  // first sweep is warmup
    const auto t0 = std::chrono::steady_clock::now();
    sweep(grid);
    const double elapsed = seconds_since(t0);
    if (i > 0) best = std::max(best, achieved_gflops(fft.size(), rows, elapsed));
  }
  return best;
}

}  // namespace

double measure_rows_gflops_serial(const MixedRadixFft& fft, std::size_t rows, int reps,
                                  std::uint64_t seed) {
  return best_gflops(fft, rows, reps, seed,
                     [&](SignalGrid& g) { fft_rows_serial(g, fft, Direction::forward); });
}

double measure_rows_gflops_parallel(const MixedRadixFft& fft, std::size_t rows, int reps,
                                    std::uint64_t seed) {
  return best_gflops(fft, rows, reps, seed,
                     [&](SignalGrid& g) { fft_rows_parallel(g, fft, Direction::forward); });
}

double measure_transpose_gbs(std::size_t rows, std::size_t cols, std::size_t block, bool parallel,
                             int reps, std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("need at least one repetition");
  const SignalGrid grid = random_grid(rows, cols, seed);
  const double bytes_moved = 2.0 * static_cast<double>(rows * cols * sizeof(ComplexSample));
  double best_seconds = 1e300;
  SignalGrid out;
  for (int i = 0; i < reps + 1; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    out = parallel ? blocked_transpose_parallel(grid, block) : blocked_transpose(grid, block);
    const double elapsed = seconds_since(t0);
    if (i > 0) best_seconds = std::min(best_seconds, elapsed);
  }
  return bytes_moved / best_seconds / 1e9;
}

}  // namespace radixplan
