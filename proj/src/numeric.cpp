#include <matterwave/numeric.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace mw {

namespace {

double pairwise_sum_range(const double* data, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_range(data, half) + pairwise_sum_range(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_sum_range(values.data(), values.size());
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

bool parallel_enabled() {
  const char* flag = std::getenv("MW_NO_PARALLEL");
  return !(flag != nullptr && std::strcmp(flag, "1") == 0);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_body) {
  if (n == 0) return;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = parallel_enabled() ? std::min<std::size_t>(hw, n / 4096 + 1) : 1;
  if (workers <= 1) {
    chunk_body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&chunk_body, begin, end] { chunk_body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace mw
