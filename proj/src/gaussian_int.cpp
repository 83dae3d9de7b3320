#include "mrange/gaussian_int.hpp"

#include <algorithm>
#include <map>

#include "mrange/errors.hpp"

namespace mrange::gaussint {

namespace {

// round(x / n) for n > 0, halves rounded up.
BigInt round_div(const BigInt& x, const BigInt& n) {
  BigInt q;
  BigInt num = 2 * x + n;
  BigInt den = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussInt conj(const GaussInt& g) { return {g.re, -g.im}; }

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

BigInt gcd_int(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt powm(const BigInt& base, const BigInt& e, const BigInt& mod) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Brent's variant of Pollard rho. n is odd, composite, > 1.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long block = 128;
    auto step = [&](const BigInt& v) -> BigInt { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd_int(q, n);
        k += block;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_int(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// A Gaussian prime of norm p for a rational prime p = 1 mod 4.
GaussInt split_prime(const BigInt& p) {
  const BigInt half = (p - 1) / 2;
  const BigInt quarter = (p - 1) / 4;
  for (BigInt c = 2;; ++c) {
    if (powm(c, half, p) == p - 1) {
      const BigInt x = powm(c, quarter, p);
      GaussInt pi = gcd(GaussInt{p, 0}, GaussInt{x, 1});
      if (pi.norm() != p) throw InternalError("failed to split Gaussian prime above " + p.get_str());
      return pi;
    }
  }
}

}  // namespace

std::optional<GaussInt> exact_quotient(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  const GaussInt num = a * conj(b);
  const BigInt n = b.norm();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  return GaussInt{num.re / n, num.im / n};
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    const GaussInt num = a * conj(b);
    const BigInt n = b.norm();
    const GaussInt q{round_div(num.re, n), round_div(num.im, n)};
    const GaussInt qb = q * b;
    GaussInt r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

const std::vector<GaussInt>& units() {
  static const std::vector<GaussInt> u{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return u;
}

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n) {
  if (sgn(n) <= 0) throw DomainError("factor_integer requires a positive integer");
  std::map<BigInt, int> found;
  BigInt rest = n;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    const BigInt bp(p);
    if (bp * bp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= bp;
      ++found[bp];
    }
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

std::vector<std::pair<GaussInt, int>> factor(const GaussInt& g) {
  if (g.is_zero()) throw DomainError("cannot factor zero");
  std::vector<std::pair<GaussInt, int>> out;
  const BigInt n = g.norm();
  if (n == 1) return out;
  for (const auto& [p, e] : factor_integer(n)) {
    if (p == 2) {
      out.push_back({GaussInt{1, 1}, e});
    } else if (p % 4 == 3) {
      out.push_back({GaussInt{p, 0}, e / 2});
    } else {
      const GaussInt pi = split_prime(p);
      int k = 0;
      GaussInt rest = g;
      while (auto q = exact_quotient(rest, pi)) {
        rest = *q;
        ++k;
      }
      if (k > 0) out.push_back({pi, k});
      if (e - k > 0) out.push_back({conj(pi), e - k});
    }
  }
  return out;
}

std::vector<GaussInt> divisors_up_to_units(const GaussInt& g) {
  std::vector<GaussInt> divs{GaussInt{1, 0}};
  for (const auto& [pi, e] : factor(g)) {
    std::vector<GaussInt> next;
    next.reserve(divs.size() * static_cast<std::size_t>(e + 1));
    for (const auto& d : divs) {
      GaussInt power{1, 0};
      for (int k = 0; k <= e; ++k) {
        next.push_back(d * power);
        power = power * pi;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

}  // namespace mrange::gaussint
