#include "radixplan/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace radixplan {

SignalGrid naive_transpose(const SignalGrid& m) {
  SignalGrid out(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

namespace {

inline void transpose_tile(const SignalGrid& m, SignalGrid& out, std::size_t r0, std::size_t c0,
                           std::size_t block) {
  const std::size_t r1 = std::min(r0 + block, m.rows);
  const std::size_t c1 = std::min(c0 + block, m.cols);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) out.at(c, r) = m.at(r, c);
}

}  // namespace

SignalGrid blocked_transpose(const SignalGrid& m, std::size_t block) {
  if (block < 1) throw std::invalid_argument("transpose block must be >= 1");
  SignalGrid out(m.cols, m.rows);
  for (std::size_t r0 = 0; r0 < m.rows; r0 += block)
    for (std::size_t c0 = 0; c0 < m.cols; c0 += block) transpose_tile(m, out, r0, c0, block);
  return out;
}

SignalGrid blocked_transpose_parallel(const SignalGrid& m, std::size_t block) {
  if (block < 1) throw std::invalid_argument("transpose block must be >= 1");
  SignalGrid out(m.cols, m.rows);
  const std::size_t tile_rows = (m.rows + block - 1) / block;
#pragma omp parallel for schedule(static)
  for (std::size_t tr = 0; tr < tile_rows; ++tr) {
    const std::size_t r0 = tr * block;
    for (std::size_t c0 = 0; c0 < m.cols; c0 += block) transpose_tile(m, out, r0, c0, block);
  }
  return out;
}

}  // namespace radixplan
