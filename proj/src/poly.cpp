#include "mrange/poly.hpp"

#include <algorithm>
#include <cmath>

#include "mrange/errors.hpp"
#include "mrange/gaussian_int.hpp"

namespace mrange {

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const GaussianRational& c) { return Poly(std::vector<GaussianRational>{c}); }

Poly Poly::monomial(const GaussianRational& c, int degree) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const GaussianRational& root) { return Poly{-root, GaussianRational(1)}; }

GaussianRational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

GaussianRational Poly::leading() const { return is_zero() ? GaussianRational() : coeffs_.back(); }

Poly Poly::monic() const {
  if (is_zero()) return {};
  const GaussianRational inv = GaussianRational(1) / leading();
  return *this * inv;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1);
  Poly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string term;
    if (k > 0 && c == GaussianRational(1)) {
      term = "";
    } else if (k > 0 && c == GaussianRational(-1)) {
      term = "-";
    } else if (c.is_real() || sgn(c.re()) == 0) {
      term = c.to_string();
      if (!c.is_real()) term = "(" + term + ")";
    } else {
      term = "(" + c.to_string() + ")";
    }
    if (k >= 1) term += "z";
    if (k >= 2) term += "^" + std::to_string(k);
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

GaussianRational eval(const Poly& p, const GaussianRational& z) {
  GaussianRational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<GaussianRational> d(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) d[static_cast<std::size_t>(k - 1)] = p.coeff(k) * GaussianRational(k);
  return Poly(std::move(d));
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly(), dividend};
  std::vector<GaussianRational> rem = dividend.coeffs();
  std::vector<GaussianRational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const GaussianRational inv_lc = GaussianRational(1) / divisor.leading();
  for (int k = dividend.degree(); k >= dd; --k) {
    const GaussianRational c = rem[static_cast<std::size_t>(k)] * inv_lc;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

Poly gcd_monic(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials is undefined");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

void require_nonconstant(const Poly& p, const char* what) {
  if (p.is_zero()) throw DomainError(std::string(what) + ": zero polynomial");
  if (p.is_constant()) throw DomainError(std::string(what) + ": constant polynomial");
}

Poly quotient_or_throw(const Poly& p, const Poly& q) {
  auto r = exact_divide(p, q);
  if (!r) throw InternalError("expected exact polynomial division");
  return *r;
}

BigInt lcm_int(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Scales p to a primitive polynomial with coefficients in Z[i].
std::vector<gaussint::GaussInt> integer_coefficients(const Poly& p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm_int(lcm_int(den, c.re().get_den()), c.im().get_den());
  std::vector<gaussint::GaussInt> out;
  out.reserve(p.coeffs().size());
  gaussint::GaussInt content;
  for (const auto& c : p.coeffs()) {
    BigRational re = c.re() * den;
    BigRational im = c.im() * den;
    out.push_back({re.get_num(), im.get_num()});
    content = gaussint::gcd(content, out.back());
  }
  for (auto& c : out) c = *gaussint::exact_quotient(c, content);
  return out;
}

// Roots in Q(i) of a square-free polynomial via the rational-root theorem
// in the UFD Z[i]: a root p/q in lowest terms has p | c_0 and q | c_n.
std::vector<GaussianRational> squarefree_roots(const Poly& s) {
  std::vector<GaussianRational> roots;
  Poly rest = s.monic();
  if (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
    roots.emplace_back();
    rest = quotient_or_throw(rest, Poly::monomial(1, 1));
  }
  if (rest.degree() == 1) {
    roots.push_back(-rest.coeff(0));
    return roots;
  }
  if (rest.degree() < 1) return roots;

  const auto ints = integer_coefficients(rest);
  const int n = rest.degree();
  // Fujiwara bound on |root|, padded against rounding.
  double bound = 0;
  for (int k = 1; k <= n; ++k) {
    const double ratio = std::sqrt(norm(rest.coeff(n - k)).get_d());
    bound = std::max(bound, 2 * std::pow(ratio, 1.0 / k));
  }
  const double bound_sq = bound * bound * (1 + 1e-6) + 1e-9;

  // A root p/q in lowest terms makes q t - p divide F(t) for every t in Z[i].
  gaussint::GaussInt at_one, at_minus_one;
  for (int k = 0; k <= n; ++k) {
    const auto& c = ints[static_cast<std::size_t>(k)];
    at_one.re += c.re;
    at_one.im += c.im;
    at_minus_one.re += (k % 2 == 0) ? c.re : BigInt(-c.re);
    at_minus_one.im += (k % 2 == 0) ? c.im : BigInt(-c.im);
  }
  auto divides = [](const gaussint::GaussInt& d, const gaussint::GaussInt& value) {
    if (value.is_zero()) return true;
    if (d.is_zero()) return false;
    return gaussint::exact_quotient(value, d).has_value();
  };

  const auto numerators = gaussint::divisors_up_to_units(ints.front());
  const auto denominators = gaussint::divisors_up_to_units(ints.back());
  std::vector<double> numerator_norms;
  for (const auto& p : numerators) numerator_norms.push_back(p.norm().get_d());
  int found = static_cast<int>(roots.size());
  const int target = found + n;
  for (const auto& q : denominators) {
    const double limit = bound_sq * q.norm().get_d();
    const GaussianRational qr = q.to_rational();
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      if (numerator_norms[i] > limit) continue;
      for (const auto& u : gaussint::units()) {
        const gaussint::GaussInt p = numerators[i] * u;
        if (!divides({q.re - p.re, q.im - p.im}, at_one)) continue;
        if (!divides({q.re + p.re, q.im + p.im}, at_minus_one)) continue;
        GaussianRational cand = p.to_rational() / qr;
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (eval(rest, cand).is_zero()) {
          roots.push_back(std::move(cand));
          if (++found == target) return roots;
        }
      }
    }
  }
  return roots;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
  require_nonconstant(p, "square-free decomposition");
  const Poly f = p.monic();
  const Poly df = derivative(f);
  const Poly a0 = gcd_monic(f, df);
  Poly b = quotient_or_throw(f, a0);
  Poly c = quotient_or_throw(df, a0);
  Poly d = c - derivative(b);
  std::vector<SquarefreeFactor> out;
  for (int i = 1; b.degree() > 0; ++i) {
    Poly a = gcd_monic(b, d);
    b = quotient_or_throw(b, a);
    c = quotient_or_throw(d, a);
    d = c - derivative(b);
    if (a.degree() >= 1) out.push_back({std::move(a), i});
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  require_nonconstant(p, "square-free part");
  return quotient_or_throw(p, gcd_monic(p, derivative(p))).monic();
}

std::vector<int> root_multiplicities(const Poly& p) {
  std::vector<int> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) out.insert(out.end(), static_cast<std::size_t>(factor.degree()), mult);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootWithMultiplicity> gaussian_rational_roots(const Poly& p) {
  std::vector<RootWithMultiplicity> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    for (auto& r : squarefree_roots(factor)) out.push_back({std::move(r), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.root < y.root; });
  return out;
}

GaussianRational resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const int m = p.degree();
  const int n = q.degree();
  auto power = [](GaussianRational base, int e) {
    GaussianRational r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
  };
  if (n == 0) return power(q.leading(), m);
  if (m == 0) return power(p.leading(), n);
  const GaussianRational sign((m * n) % 2 == 0 ? 1 : -1);
  if (m < n) return sign * resultant(q, p);
  // Res(p, q) = (-1)^{mn} Res(q, p) = (-1)^{mn} lc(q)^{m - deg r} Res(q, r)
  Poly r = divmod(p, q).second;
  if (r.is_zero()) return {};
  return sign * power(q.leading(), m - r.degree()) * resultant(q, r);
}

Poly interpolate(const std::vector<GaussianRational>& xs, const std::vector<GaussianRational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: mismatched sample counts");
  const std::size_t n = xs.size();
  // Newton divided differences, in place.
  std::vector<GaussianRational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      const GaussianRational dx = xs[k] - xs[k - level];
      if (dx.is_zero()) throw DomainError("interpolate: repeated abscissa");
      dd[k] = (dd[k] - dd[k - 1]) / dx;
    }
  }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    result *= Poly::linear(xs[k]);
    result += Poly::constant(dd[k]);
  }
  return result;
}

Poly critical_value_polynomial(const Poly& p) {
  if (p.degree() < 2) throw DomainError("critical value polynomial needs degree >= 2");
  const Poly dp = derivative(p);
  const int samples = p.degree();
  std::vector<GaussianRational> xs, ys;
  for (int j = 0; j < samples; ++j) {
    const GaussianRational a(j);
    xs.push_back(a);
    ys.push_back(resultant(p - Poly::constant(a), dp));
  }
  return interpolate(xs, ys);
}

}  // namespace mrange
