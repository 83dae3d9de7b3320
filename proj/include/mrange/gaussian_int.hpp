#pragma once

// Arithmetic in Z[i], used by the rational-root search.

#include <optional>
#include <utility>
#include <vector>

#include "mrange/scalar.hpp"

namespace mrange::gaussint {

struct GaussInt {
  BigInt re{0};
  BigInt im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  BigInt norm() const { return re * re + im * im; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }

  GaussianRational to_rational() const { return {BigRational(re), BigRational(im)}; }
};

/// a / b when b divides a in Z[i].
std::optional<GaussInt> exact_quotient(const GaussInt& a, const GaussInt& b);

/// Euclidean gcd (rounded division); defined up to a unit.
GaussInt gcd(GaussInt a, GaussInt b);

/// The four units 1, i, -1, -i.
const std::vector<GaussInt>& units();

/// Prime factorisation of a positive integer: (prime, exponent) pairs in
/// increasing order. Trial division for small factors, Pollard-Brent rho for
/// the rest.
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n);

/// Gaussian prime factorisation of a nonzero g, up to a unit.
std::vector<std::pair<GaussInt, int>> factor(const GaussInt& g);

/// Every divisor of a nonzero g, one representative per associate class.
std::vector<GaussInt> divisors_up_to_units(const GaussInt& g);

}  // namespace mrange::gaussint
