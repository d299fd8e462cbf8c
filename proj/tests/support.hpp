#pragma once

#include <complex>
#include <random>

#include <doctest.h>

#include "ecm/abelian.hpp"

namespace test {

inline bool near(ecm::Complex a, ecm::Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline ecm::QFunction random_function(const ecm::Group& g, int arity, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return ecm::QFunction::tabulate(g, arity, [&](std::span<const int>) {
    const double re = u(rng);
    return ecm::Complex(re, u(rng));
  });
}

inline ecm::Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

}  // namespace test
