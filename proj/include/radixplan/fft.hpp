#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace radixplan {

using ComplexSample = std::complex<float>;
using Signal = std::vector<ComplexSample>;

enum class Direction { forward, inverse };

constexpr bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// Exact log2 of a power of two; throws std::invalid_argument otherwise.
int log2_exact(std::size_t v);

/// Ordered list of butterfly radixes, executed smallest span first.
/// Each entry is 2, 4 or 8; the log2 values must sum to log2(N) for the
/// transform size the plan targets.
struct RadixPlan {
  std::vector<int> radixes;

  int log2_sum() const;
  bool valid_for(std::size_t n) const;
  void validate_for(std::size_t n) const;

  std::string str() const;                        // "4,8,8,4"
  static RadixPlan parse(std::string_view text);  // inverse of str()

  bool operator==(const RadixPlan&) const = default;
  auto operator<=>(const RadixPlan&) const = default;
};

/// Canonical valid plan for a 2^n transform (largest radixes first).
RadixPlan default_plan(int n);

/// Precomputed w_N^k = e^(-2*pi*i*k/N) for k = 0..N-1 (sign flipped for the
/// inverse direction). Immutable after make(); safe to share across threads.
struct TwiddleTable {
  std::size_t size = 0;
  Direction direction = Direction::forward;
  std::vector<ComplexSample> factors;

  static TwiddleTable make(std::size_t n, Direction direction);
};

/// Direct O(N^2) DFT evaluated in double precision, rounded to single at the
/// end. Accepts any length >= 1. The inverse applies the 1/N normalization.
Signal dft_oracle(const Signal& input, Direction direction);

/// One in-place pass of N/radix butterflies of the given radix.
/// stage_index counts log2 progress from 0: a radix-8 stage starting at s
/// consumes logical stages s, s+1, s+2. Direction comes from the table.
/// No 1/N normalization is applied here.
void apply_radix_stage(std::span<ComplexSample> data, int radix, int stage_index,
                       const TwiddleTable& twiddles);

/// Mixed-radix digit-reversal gather map for the plan: out[i] = in[map[i]]
/// puts the input in the order the plan's first stage expects.
std::vector<std::uint32_t> digit_reversal_permutation(std::size_t n, const RadixPlan& plan);

/// Executable transform for one (N, plan) pair. The permutation and twiddle
/// tables are computed once at construction; execute() is const and safe to
/// call concurrently, one thread per buffer.
class MixedRadixFft {
 public:
  MixedRadixFft(std::size_t n, RadixPlan plan);

  std::size_t size() const { return n_; }
  const RadixPlan& plan() const { return plan_; }
  const TwiddleTable& twiddles(Direction d) const {
    return d == Direction::forward ? forward_ : inverse_;
  }

  /// out[] = transform(in[]); in and out must not alias.
  void execute(std::span<const ComplexSample> in, std::span<ComplexSample> out,
               Direction direction) const;

  /// In-place convenience wrapper (uses a per-thread scratch buffer).
  void execute_inplace(std::span<ComplexSample> data, Direction direction) const;

 private:
  std::size_t n_;
  RadixPlan plan_;
  std::vector<std::uint32_t> gather_;
  TwiddleTable forward_;
  TwiddleTable inverse_;
};

/// Full mixed-radix FFT: digit-reversal permutation followed by the plan's
/// stages, natural-order output. Executors are cached per (N, plan).
Signal run_plan(const Signal& input, const RadixPlan& plan, Direction direction);

/// N-point forward FFT via the four-step decomposition with N = base_size * M:
/// M strided base-size FFTs, w_N^(j*k) scaling, M-point FFTs over the base_size
/// contiguous rows, final transpose to natural order.
Signal large_fft_fourstep(const Signal& input, std::size_t base_size,
                          const RadixPlan& base_plan);

/// Uniform random samples in [-1, 1]^2, reproducible from the seed.
Signal random_signal(std::size_t n, std::uint64_t seed);

/// ||got - want||_2 / ||want||_2 accumulated in double precision.
/// Falls back to the absolute norm when want is identically zero.
double rel_l2_error(std::span<const ComplexSample> got, std::span<const ComplexSample> want);

}  // namespace radixplan
