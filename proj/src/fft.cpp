#include "radixplan/fft.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace radixplan {

int log2_exact(std::size_t v) {
  if (!is_power_of_two(v)) throw std::invalid_argument("not a power of two");
  int n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

int RadixPlan::log2_sum() const {
  int sum = 0;
  for (int r : radixes) sum += log2_exact(static_cast<std::size_t>(r));
  return sum;
}

bool RadixPlan::valid_for(std::size_t n) const {
  if (radixes.empty() || !is_power_of_two(n)) return false;
  for (int r : radixes)
    if (r != 2 && r != 4 && r != 8) return false;
  return log2_sum() == log2_exact(n);
}

void RadixPlan::validate_for(std::size_t n) const {
  if (radixes.empty()) throw std::invalid_argument("empty radix plan");
  for (int r : radixes)
    if (r != 2 && r != 4 && r != 8)
      throw std::invalid_argument("unsupported radix " + std::to_string(r));
  if (!is_power_of_two(n) || n < 2)
    throw std::invalid_argument("transform size must be a power of two >= 2");
  if (log2_sum() != log2_exact(n))
    throw std::invalid_argument("radix logs do not sum to log2 N (plan " + str() + ", N = " +
                                std::to_string(n) + ")");
}

std::string RadixPlan::str() const {
  std::string out;
  for (std::size_t i = 0; i < radixes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(radixes[i]);
  }
  return out;
}

RadixPlan RadixPlan::parse(std::string_view text) {
  RadixPlan plan;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int r = 0;
    try {
      r = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad radix token '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw std::invalid_argument("bad radix token '" + token + "'");
    plan.radixes.push_back(r);
  }
  if (plan.radixes.empty()) throw std::invalid_argument("empty radix plan");
  return plan;
}

RadixPlan default_plan(int n) {
  if (n < 1) throw std::invalid_argument("default_plan needs n >= 1");
  RadixPlan plan;
  int rem = n;
  while (rem >= 5 || rem == 3) {
    plan.radixes.push_back(8);
    rem -= 3;
  }
  switch (rem) {
    case 0: break;
    case 1: plan.radixes.push_back(2); break;
    case 2: plan.radixes.push_back(4); break;
    case 4:
      plan.radixes.push_back(4);
      plan.radixes.push_back(4);
      break;
  }
  return plan;
}

TwiddleTable TwiddleTable::make(std::size_t n, Direction direction) {
  if (!is_power_of_two(n)) throw std::invalid_argument("twiddle table size must be a power of two");
  TwiddleTable table;
  table.size = n;
  table.direction = direction;
  table.factors.resize(n);
  const double sign = direction == Direction::forward ? -1.0 : 1.0;
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::complex<double> w = std::polar(1.0, step * static_cast<double>(k));
    table.factors[k] = ComplexSample(static_cast<float>(w.real()), static_cast<float>(w.imag()));
  }
  return table;
}

Signal dft_oracle(const Signal& input, Direction direction) {
  if (input.empty()) throw std::invalid_argument("empty signal");
  const std::size_t n = input.size();
  const double sign = direction == Direction::forward ? -1.0 : 1.0;
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<std::complex<double>> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = std::polar(1.0, step * static_cast<double>(k));

  Signal out(n);
  const double scale = direction == Direction::inverse ? 1.0 / static_cast<double>(n) : 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      acc += std::complex<double>(input[i]) * w[(i * k) % n];
    }
    acc *= scale;
    out[k] = ComplexSample(static_cast<float>(acc.real()), static_cast<float>(acc.imag()));
  }
  return out;
}

namespace {

// Hand-written complex multiply so the compiler can contract to FMA without
// the NaN-propagation helper calls std::complex operator* pulls in.
inline ComplexSample cmul(ComplexSample a, ComplexSample b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

// Multiply by -i (forward) or +i (inverse).
template <bool Forward>
inline ComplexSample rot90(ComplexSample z) {
  if constexpr (Forward)
    return {z.imag(), -z.real()};
  else
    return {-z.imag(), z.real()};
}

template <bool Forward>
void pass_radix2(std::span<ComplexSample> data, std::size_t span_len, const ComplexSample* w,
                 std::size_t twiddle_step) {
  const std::size_t n = data.size();
  const std::size_t block = span_len * 2;
  for (std::size_t base = 0; base < n; base += block) {
    ComplexSample* d = data.data() + base;
    for (std::size_t p = 0; p < span_len; ++p) {
      const ComplexSample a = d[p];
      const ComplexSample b = cmul(d[p + span_len], w[p * twiddle_step]);
      d[p] = a + b;
      d[p + span_len] = a - b;
    }
  }
}

template <bool Forward>
void pass_radix4(std::span<ComplexSample> data, std::size_t span_len, const ComplexSample* w,
                 std::size_t twiddle_step) {
  const std::size_t n = data.size();
  const std::size_t block = span_len * 4;
  for (std::size_t base = 0; base < n; base += block) {
    ComplexSample* d = data.data() + base;
    for (std::size_t p = 0; p < span_len; ++p) {
      const std::size_t tw = p * twiddle_step;
      const ComplexSample t0 = d[p];
      const ComplexSample t1 = cmul(d[p + span_len], w[tw]);
      const ComplexSample t2 = cmul(d[p + 2 * span_len], w[2 * tw]);
      const ComplexSample t3 = cmul(d[p + 3 * span_len], w[3 * tw]);
      const ComplexSample s0 = t0 + t2;
      const ComplexSample s1 = t0 - t2;
      const ComplexSample s2 = t1 + t3;
      const ComplexSample s3 = rot90<Forward>(t1 - t3);
      d[p] = s0 + s2;
      d[p + span_len] = s1 + s3;
      d[p + 2 * span_len] = s0 - s2;
      d[p + 3 * span_len] = s1 - s3;
    }
  }
}

template <bool Forward>
void pass_radix8(std::span<ComplexSample> data, std::size_t span_len, const ComplexSample* w,
                 std::size_t twiddle_step) {
  constexpr float kHalfSqrt2 = 0.70710678118654752f;
  // w_8^1 and w_8^3 for the chosen direction.
  constexpr ComplexSample w81 = Forward ? ComplexSample{kHalfSqrt2, -kHalfSqrt2}
                                        : ComplexSample{kHalfSqrt2, kHalfSqrt2};
  constexpr ComplexSample w83 = Forward ? ComplexSample{-kHalfSqrt2, -kHalfSqrt2}
                                        : ComplexSample{-kHalfSqrt2, kHalfSqrt2};
  const std::size_t n = data.size();
  const std::size_t block = span_len * 8;
  for (std::size_t base = 0; base < n; base += block) {
    ComplexSample* d = data.data() + base;
    for (std::size_t p = 0; p < span_len; ++p) {
      const std::size_t tw = p * twiddle_step;
      const ComplexSample t0 = d[p];
      const ComplexSample t1 = cmul(d[p + span_len], w[tw]);
      const ComplexSample t2 = cmul(d[p + 2 * span_len], w[2 * tw]);
      const ComplexSample t3 = cmul(d[p + 3 * span_len], w[3 * tw]);
      const ComplexSample t4 = cmul(d[p + 4 * span_len], w[4 * tw]);
      const ComplexSample t5 = cmul(d[p + 5 * span_len], w[5 * tw]);
      const ComplexSample t6 = cmul(d[p + 6 * span_len], w[6 * tw]);
      const ComplexSample t7 = cmul(d[p + 7 * span_len], w[7 * tw]);

      // DFT-4 of the even inputs.
      const ComplexSample e0 = t0 + t4;
      const ComplexSample e1 = t0 - t4;
      const ComplexSample e2 = t2 + t6;
      const ComplexSample e3 = rot90<Forward>(t2 - t6);
      const ComplexSample ev0 = e0 + e2;
      const ComplexSample ev1 = e1 + e3;
      const ComplexSample ev2 = e0 - e2;
      const ComplexSample ev3 = e1 - e3;

      // DFT-4 of the odd inputs.
      const ComplexSample o0 = t1 + t5;
      const ComplexSample o1 = t1 - t5;
      const ComplexSample o2 = t3 + t7;
      const ComplexSample o3 = rot90<Forward>(t3 - t7);
      const ComplexSample od0 = o0 + o2;
      const ComplexSample od1 = o1 + o3;
      const ComplexSample od2 = o0 - o2;
      const ComplexSample od3 = o1 - o3;

      const ComplexSample u1 = cmul(od1, w81);
      const ComplexSample u2 = rot90<Forward>(od2);
      const ComplexSample u3 = cmul(od3, w83);

      d[p] = ev0 + od0;
      d[p + span_len] = ev1 + u1;
      d[p + 2 * span_len] = ev2 + u2;
      d[p + 3 * span_len] = ev3 + u3;
      d[p + 4 * span_len] = ev0 - od0;
      d[p + 5 * span_len] = ev1 - u1;
      d[p + 6 * span_len] = ev2 - u2;
      d[p + 7 * span_len] = ev3 - u3;
    }
  }
}

void radix_pass(std::span<ComplexSample> data, int radix, int stage_index,
                const TwiddleTable& twiddles) {
  const std::size_t n = data.size();
  const std::size_t span_len = std::size_t{1} << stage_index;
  const std::size_t block = span_len * static_cast<std::size_t>(radix);
  // w_block^j sliced out of the full-size table.
  const std::size_t twiddle_step = n / block;
  const ComplexSample* w = twiddles.factors.data();
  const bool fwd = twiddles.direction == Direction::forward;
  switch (radix) {
    case 2: fwd ? pass_radix2<true>(data, span_len, w, twiddle_step)
                : pass_radix2<false>(data, span_len, w, twiddle_step);
      break;
    case 4: fwd ? pass_radix4<true>(data, span_len, w, twiddle_step)
                : pass_radix4<false>(data, span_len, w, twiddle_step);
      break;
    case 8: fwd ? pass_radix8<true>(data, span_len, w, twiddle_step)
                : pass_radix8<false>(data, span_len, w, twiddle_step);
      break;
    default: throw std::invalid_argument("unsupported radix " + std::to_string(radix));
  }
}

}  // namespace

void apply_radix_stage(std::span<ComplexSample> data, int radix, int stage_index,
                       const TwiddleTable& twiddles) {
  if (radix != 2 && radix != 4 && radix != 8)
    throw std::invalid_argument("unsupported radix " + std::to_string(radix));
  const std::size_t n = data.size();
  if (n != twiddles.size) throw std::invalid_argument("twiddle table size mismatch");
  const int total = log2_exact(n);
  if (stage_index < 0 || stage_index + log2_exact(static_cast<std::size_t>(radix)) > total)
    throw std::invalid_argument("plan exceeds transform size (stage " +
                                std::to_string(stage_index) + ", radix " + std::to_string(radix) +
                                ", log2 N = " + std::to_string(total) + ")");
  radix_pass(data, radix, stage_index, twiddles);
}

std::vector<std::uint32_t> digit_reversal_permutation(std::size_t n, const RadixPlan& plan) {
  plan.validate_for(n);
  // Index i with digits (j_S .. j_1) extracted least-significant-first against
  // the reversed radix list moves to sum_t j_t * (r_1 * ... * r_{t-1}).
  std::vector<std::uint32_t> gather(n);
  const std::size_t stages = plan.radixes.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rem = i;
    std::size_t pos = 0;
    std::size_t place = 1;
    for (std::size_t t = 0; t < stages; ++t) {
      const auto radix = static_cast<std::size_t>(plan.radixes[stages - 1 - t]);
      pos += (rem % radix) * place;
      rem /= radix;
      place *= static_cast<std::size_t>(plan.radixes[t]);
    }
    gather[pos] = static_cast<std::uint32_t>(i);
  }
  return gather;
}

MixedRadixFft::MixedRadixFft(std::size_t n, RadixPlan plan)
    : n_(n),
      plan_(std::move(plan)),
      gather_(digit_reversal_permutation(n, plan_)),
      forward_(TwiddleTable::make(n, Direction::forward)),
      inverse_(TwiddleTable::make(n, Direction::inverse)) {}

void MixedRadixFft::execute(std::span<const ComplexSample> in, std::span<ComplexSample> out,
                            Direction direction) const {
  if (in.size() != n_ || out.size() != n_)
    throw std::invalid_argument("buffer length does not match transform size");
  for (std::size_t i = 0; i < n_; ++i) out[i] = in[gather_[i]];
  const TwiddleTable& table = twiddles(direction);
  int stage = 0;
  for (int r : plan_.radixes) {
    radix_pass(out, r, stage, table);
    stage += log2_exact(static_cast<std::size_t>(r));
  }
  if (direction == Direction::inverse) {
    const float scale = 1.0f / static_cast<float>(n_);
    for (auto& v : out) v *= scale;
  }
}

void MixedRadixFft::execute_inplace(std::span<ComplexSample> data, Direction direction) const {
  thread_local std::vector<ComplexSample> scratch;
  scratch.resize(n_);
  execute(data, scratch, direction);
  std::copy(scratch.begin(), scratch.end(), data.begin());
}

namespace {

// run_plan memoizes executors so the permutation and twiddles are computed
// once per (N, plan).
const MixedRadixFft& cached_executor(std::size_t n, const RadixPlan& plan) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::vector<int>>, std::unique_ptr<MixedRadixFft>> cache;
  std::scoped_lock lock(mutex);
  auto key = std::make_pair(n, plan.radixes);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), std::make_unique<MixedRadixFft>(n, plan)).first;
  return *it->second;
}

}  // namespace

Signal run_plan(const Signal& input, const RadixPlan& plan, Direction direction) {
  plan.validate_for(input.size());
  const MixedRadixFft& fft = cached_executor(input.size(), plan);
  Signal out(input.size());
  fft.execute(input, out, direction);
  return out;
}

Signal large_fft_fourstep(const Signal& input, std::size_t base_size,
                          const RadixPlan& base_plan) {
  const std::size_t n = input.size();
  if (!is_power_of_two(base_size)) throw std::invalid_argument("base size must be a power of two");
  if (!is_power_of_two(n) || n % base_size != 0)
    throw std::invalid_argument("input length must be a power-of-two multiple of base size");
  base_plan.validate_for(base_size);
  if (n == base_size) return run_plan(input, base_plan, Direction::forward);

  const std::size_t m = n / base_size;
  Signal work = input;

  // M base-size FFTs down the stride-M columns of the base x M view.
  const MixedRadixFft& column_fft = cached_executor(base_size, base_plan);
  Signal column(base_size), column_out(base_size);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < base_size; ++j) column[j] = work[j * m + k];
    column_fft.execute(column, column_out, Direction::forward);
    for (std::size_t j = 0; j < base_size; ++j) work[j * m + k] = column_out[j];
  }

  // Element (j, k) picks up w_N^(j*k); j*k < N so the table index is direct.
  const TwiddleTable table = TwiddleTable::make(n, Direction::forward);
  for (std::size_t j = 1; j < base_size; ++j)
    for (std::size_t k = 1; k < m; ++k) work[j * m + k] = cmul(work[j * m + k], table.factors[j * k]);

  // M-point FFTs over the base_size contiguous rows.
  const MixedRadixFft& row_fft = cached_executor(m, default_plan(log2_exact(m)));
  for (std::size_t j = 0; j < base_size; ++j)
    row_fft.execute_inplace(std::span(work).subspan(j * m, m), Direction::forward);

  // Transpose to natural order: X(j + base*l) = work(j, l).
  Signal out(n);
  for (std::size_t j = 0; j < base_size; ++j)
    for (std::size_t l = 0; l < m; ++l) out[j + base_size * l] = work[j * m + l];
  return out;
}

Signal random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  Signal out(n);
  for (auto& v : out) v = ComplexSample(dist(rng), dist(rng));
  return out;
}

double rel_l2_error(std::span<const ComplexSample> got, std::span<const ComplexSample> want) {
  if (got.size() != want.size()) throw std::invalid_argument("length mismatch");
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const std::complex<double> d = std::complex<double>(got[i]) - std::complex<double>(want[i]);
    diff += std::norm(d);
    ref += std::norm(std::complex<double>(want[i]));
  }
  if (ref == 0.0) return std::sqrt(diff);
  return std::sqrt(diff / ref);
}

}  // namespace radixplan
