#pragma once

// The function model: exact polynomials plus two closed-form transcendental
// families whose ramification data is known exactly.
//
//   SinFamily      f(z) = ((a - b)/2) sin(cz + d) + (a + b)/2,  a != b, c != 0
//                  Totally ramified at a and b; every preimage of a or b
//                  has multiplicity exactly 2.
//   ExpPolyFamily  f(z) = v + P(z) e^(cz + d),  P monic, c != 0
//                  Omits v when P = 1; otherwise v is the only candidate
//                  totally ramified value, attained exactly at the zeros of P.

#include <variant>
#include <vector>

#include "mrange/poly.hpp"
#include "mrange/scalar.hpp"

namespace mrange {

struct PolynomialFunction {
  Poly p;
  friend bool operator==(const PolynomialFunction&, const PolynomialFunction&) = default;
};

struct SinFamily {
  GaussianRational a, b, c, d;
  friend bool operator==(const SinFamily&, const SinFamily&) = default;
};

struct ExpPolyFamily {
  GaussianRational v;
  Poly p;
  GaussianRational c, d;
  friend bool operator==(const ExpPolyFamily&, const ExpPolyFamily&) = default;
};

/// A non-constant entire function. Construction validates the family
/// premises and throws DomainError when they fail.
class EntireFunction {
 public:
  using Variant = std::variant<PolynomialFunction, SinFamily, ExpPolyFamily>;

  static EntireFunction polynomial(Poly p);
  static EntireFunction sin_family(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);
  static EntireFunction exp_poly(GaussianRational v, Poly p, GaussianRational c, GaussianRational d);

  const Variant& variant() const noexcept { return v_; }
  bool is_polynomial() const noexcept { return std::holds_alternative<PolynomialFunction>(v_); }
  /// Throws DomainError unless is_polynomial().
  const Poly& as_polynomial() const;

  friend bool operator==(const EntireFunction&, const EntireFunction&) = default;

 private:
  explicit EntireFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

enum class TheoremCase { OmitsValue, NoTRV, OneTRV, TwoTRV };

/// Roman numeral of the range theorem case: "I" .. "IV".
const char* case_label(TheoremCase c);

struct TrvEntry {
  GaussianRational value;
  /// Distinct multiplicities of the preimages of value, ascending, all >= 2.
  /// For a polynomial, the full multiset is in root_multiset.
  std::vector<int> multiplicities;
  /// Every root multiplicity of f - value, one entry per root (finite case).
  std::vector<int> root_multiset;
  bool infinitely_many_preimages = false;

  friend bool operator==(const TrvEntry&, const TrvEntry&) = default;
};

struct RamificationProfile {
  std::vector<GaussianRational> omitted_values;
  std::vector<TrvEntry> trv_entries;
  TheoremCase theorem_case = TheoremCase::NoTRV;
};

RamificationProfile ramification_profile(const EntireFunction& f);

/// Totally ramified values of a polynomial: values a at which every root of
/// p - a is multiple. Candidates are the roots of the linear square-free
/// factors of the critical value polynomial; a totally ramified value is a
/// root of it with multiplicity above half its degree, so no other root can
/// qualify. deg p == 1
/// yields none. Throws InternalError if more than one is found.
std::vector<TrvEntry> polynomial_trvs(const Poly& p);

struct PreimageFinite {
  /// Roots of f - a lying in Q(i), canonical order.
  std::vector<RootWithMultiplicity> roots;
  /// Every multiplicity, one per root over C, ascending.
  std::vector<int> multiplicity_multiset;
  /// True when roots accounts for every root.
  bool complete = false;
};
struct PreimageInfinitelyManySimple {};
struct PreimageInfinitelyManyDouble {};
struct PreimageEmpty {};

using PreimageSet = std::variant<PreimageFinite, PreimageInfinitelyManySimple, PreimageInfinitelyManyDouble, PreimageEmpty>;

PreimageSet preimage_roots(const EntireFunction& f, const GaussianRational& a);

/// Re-derives the profile and checks the structural limits on omitted and
/// totally ramified values. Throws DomainError for constant functions or
/// broken family premises, InternalError for an inconsistent profile.
void validate(const EntireFunction& f);

}  // namespace mrange
