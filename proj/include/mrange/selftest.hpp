#pragma once

// Randomised identity checks for matrix functions plus the split-pattern
// oracle grid, runnable from the CLI on any build.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mrange/matrix.hpp"
#include "mrange/poly.hpp"

namespace mrange {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  /// First failing instance, if any.
  std::string first_failure;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool green() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240531;

SelftestReport run_selftest(std::uint64_t seed = kDefaultSeed);

/// Generators shared by the selftest and the test suites.
namespace gen {

using Rng = std::mt19937_64;

/// Gaussian integer with both parts in [-bound, bound].
GaussianRational gaussian_int(Rng& rng, int bound);
/// Gaussian rational with numerators in [-bound, bound], denominators in [1, den].
GaussianRational gaussian_rational(Rng& rng, int bound, int den);
/// Polynomial of exact degree `degree` with Gaussian-integer coefficients.
Poly poly(Rng& rng, int degree, int bound);
MatrixQi matrix(Rng& rng, int n, int bound);
/// Unimodular-style invertible matrix: product of random unit triangular
/// factors and a permutation, so its inverse stays small.
MatrixQi invertible(Rng& rng, int n, int bound);

}  // namespace gen

}  // namespace mrange
