#pragma once

#include <cstddef>
#include <vector>

#include "radixplan/fft.hpp"

namespace radixplan {

/// Row-major matrix of complex samples.
struct SignalGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<ComplexSample> data;

  SignalGrid() = default;
  SignalGrid(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  ComplexSample* row(std::size_t r) { return data.data() + r * cols; }
  const ComplexSample* row(std::size_t r) const { return data.data() + r * cols; }
  ComplexSample& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const ComplexSample& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool operator==(const SignalGrid&) const = default;
};

/// Element-by-element reference transpose.
SignalGrid naive_transpose(const SignalGrid& m);

/// Cache-blocked corner turn over block x block tiles; bitwise-identical to
/// naive_transpose for every block >= 1.
SignalGrid blocked_transpose(const SignalGrid& m, std::size_t block);

/// OpenMP variant of the blocked corner turn (parallel over tile rows).
SignalGrid blocked_transpose_parallel(const SignalGrid& m, std::size_t block);

}  // namespace radixplan
