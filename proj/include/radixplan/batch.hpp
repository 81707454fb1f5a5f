#pragma once

#include <cstdint>

#include "radixplan/fft.hpp"
#include "radixplan/grid.hpp"

namespace radixplan {

/// Transforms every row of the grid in place, one row after another.
/// Reference implementation for the OpenMP kernel below.
void fft_rows_serial(SignalGrid& grid, const MixedRadixFft& fft, Direction direction);

/// Same result, rows spread across the OpenMP team.
void fft_rows_parallel(SignalGrid& grid, const MixedRadixFft& fft, Direction direction);

/// Sustained single-thread throughput of the row kernel in GFlops
/// (best of `reps` timed sweeps over a `rows` x fft.size() grid).
double measure_rows_gflops_serial(const MixedRadixFft& fft, std::size_t rows, int reps,
                                  std::uint64_t seed);

/// OpenMP counterpart of measure_rows_gflops_serial.
double measure_rows_gflops_parallel(const MixedRadixFft& fft, std::size_t rows, int reps,
                                    std::uint64_t seed);

/// Sustained corner-turn bandwidth in GB/s (read + write bytes over the best
/// of `reps` timed turns).
double measure_transpose_gbs(std::size_t rows, std::size_t cols, std::size_t block, bool parallel,
                             int reps, std::uint64_t seed);

}  // namespace radixplan
