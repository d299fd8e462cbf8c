#pragma once

// Exhaustive mixed-radix enumeration with a deterministic block reduction.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ecm/error.hpp"

namespace ecm::detail {

inline double power_estimate(double base, std::size_t exponent) {
  return std::pow(base, static_cast<double>(exponent));
}

inline void require_terms(const std::string& what, double terms, std::uint64_t cap) {
  if (terms > static_cast<double>(cap)) throw CapExceeded(what, terms, cap);
}

/// Sums term(digits) over all digit vectors in radix^sites, digits[0] most
/// significant. Blocks are fixed by the total count, so the floating-point
/// reduction order does not depend on the thread count.
template <class T, class Fn>
T sum_configurations(int radix, std::size_t sites, Fn&& term) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < sites; ++i) total *= static_cast<std::uint64_t>(radix);
  if (radix == 0 && sites > 0) return T{};

  const std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
  std::vector<T> partial(static_cast<std::size_t>(blocks), T{});
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    std::vector<int> digits(sites);
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::uint64_t lo = total * b / blocks;
      const std::uint64_t hi = total * (b + 1) / blocks;
      std::uint64_t rest = lo;
      for (std::size_t i = sites; i-- > 0;) {
        digits[i] = static_cast<int>(rest % static_cast<std::uint64_t>(radix));
        rest /= static_cast<std::uint64_t>(radix);
      }
      T acc{};
      for (std::uint64_t t = lo; t < hi; ++t) {
        acc += term(std::span<const int>(digits));
        for (std::size_t i = sites; i-- > 0;) {
          if (++digits[i] < radix) break;
          digits[i] = 0;
        }
      }
      partial[static_cast<std::size_t>(b)] = acc;
    }
  };

  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const auto nthreads = static_cast<unsigned>(std::min<std::uint64_t>(hw, blocks));
  if (nthreads <= 1 || total < 4096) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  T sum{};
  for (const auto& p : partial) sum += p;
  return sum;
}

/// Calls visit(digits) for every configuration in ascending mixed-radix order.
template <class Fn>
void for_each_configuration(int radix, std::size_t sites, Fn&& visit) {
  if (radix == 0 && sites > 0) return;
  std::vector<int> digits(sites, 0);
  for (;;) {
    visit(std::span<const int>(digits));
    std::size_t i = sites;
    for (; i-- > 0;) {
      if (++digits[i] < radix) break;
      digits[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace ecm::detail
