#pragma once

// Exact arithmetic over the Gaussian rationals Q(i).
//
// BigRational is GMP's mpq_class; every value produced by the helpers below
// and by mpq_class arithmetic is kept in canonical reduced form (positive
// denominator, coprime numerator and denominator).

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace mrange {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// "p" when the denominator is 1, otherwise "p/q".
std::string render_rational(const BigRational& q);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integer literals are scalars
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(BigRational re, BigRational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const noexcept { return re_; }
  const BigRational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2; zero iff the value is zero.
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws DivisionByZero when o == 0.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical scalar order: lexicographic on (re, im). Used for block
  /// layout and every deterministic tie-break.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  /// Canonical whitespace-free rendering: "p/q" for reals, "p/q+r/si" or
  /// "p/q-r/si" otherwise, with "/1" denominators dropped.
  std::string to_string() const;

  /// Accepts the canonical forms plus integer shorthand, a bare imaginary
  /// part ("3i", "-1/2i", "i") and surrounding whitespace. Throws ParseError.
  static GaussianRational parse(std::string_view text);

 private:
  BigRational re_{0};
  BigRational im_{0};
};

BigRational norm(const GaussianRational& x);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace mrange
