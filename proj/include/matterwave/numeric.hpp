#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>

namespace mw {

/// Pairwise (cascade) summation; result depends only on the input order.
double pairwise_sum(std::span<const double> values);

/// Shortest decimal that round-trips to the same IEEE-754 double.
std::string format_double(double value);

/// True unless MW_NO_PARALLEL=1 is set in the environment.
bool parallel_enabled();

/// Splits [0, n) into contiguous chunks and runs chunk_body(begin, end) on each.
/// Each index must write only its own output slot; the result is then identical
/// whether or not threads are used.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_body);

/// Seeded generator with a portable uniform mapping (std::uniform_real_distribution
/// is not specified bit-for-bit across standard libraries).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace mw
