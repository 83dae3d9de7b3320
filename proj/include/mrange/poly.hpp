#pragma once

// Univariate polynomials over Q(i).

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mrange/scalar.hpp"

namespace mrange {

/// Dense coefficient vector, index k holds the coefficient of z^k. Trailing
/// zeros are always trimmed, so the zero polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs);
  Poly(std::initializer_list<GaussianRational> coeffs);

  static Poly constant(const GaussianRational& c);
  static Poly monomial(const GaussianRational& c, int degree);
  /// z - root
  static Poly linear(const GaussianRational& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  GaussianRational coeff(int k) const;
  /// Zero for the zero polynomial.
  GaussianRational leading() const;

  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(unsigned e) const;

  /// Human-readable sum of terms, e.g. "z^2-3z+2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

struct RootWithMultiplicity {
  GaussianRational root;
  int multiplicity = 1;

  friend bool operator==(const RootWithMultiplicity&, const RootWithMultiplicity&) = default;
};

struct SquarefreeFactor {
  Poly factor;  // monic, square-free, degree >= 1
  int multiplicity = 1;

  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Horner evaluation.
GaussianRational eval(const Poly& p, const GaussianRational& z);

Poly derivative(const Poly& p);

/// Quotient and remainder with deg(remainder) < deg(divisor). Throws
/// DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// p / q when q divides p, nullopt otherwise. Throws DivisionByZero for q == 0.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

/// Monic gcd. Throws DomainError when both arguments are zero.
Poly gcd_monic(const Poly& p, const Poly& q);

/// Yun's algorithm. p = leading(p) * prod factor^multiplicity with pairwise
/// coprime monic square-free factors, listed by increasing multiplicity.
/// Throws DomainError for zero or constant p.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

/// Monic product of the distinct irreducible factors of p.
Poly squarefree_part(const Poly& p);

/// Multiset of root multiplicities over C, one entry per root, derived from
/// the square-free decomposition. Sorted ascending.
std::vector<int> root_multiplicities(const Poly& p);

/// All roots of p in Q(i) with their exact multiplicities, sorted in the
/// canonical scalar order. Throws DomainError for zero or constant p.
std::vector<RootWithMultiplicity> gaussian_rational_roots(const Poly& p);

/// Res(p, q) computed through the Euclidean remainder sequence.
GaussianRational resultant(const Poly& p, const Poly& q);

/// Interpolating polynomial of degree < points.size(). Abscissae must be
/// pairwise distinct.
Poly interpolate(const std::vector<GaussianRational>& xs, const std::vector<GaussianRational>& ys);

/// D(a) = Res_z(p(z) - a, p'(z)), whose roots are exactly the critical values
/// of p. Built from deg p exact resultants at a = 0, 1, 2, ... and
/// interpolation. Throws DomainError when deg p < 2.
Poly critical_value_polynomial(const Poly& p);

}  // namespace mrange
