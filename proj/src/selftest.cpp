#include "mrange/selftest.hpp"

#include <algorithm>
#include <functional>

#include "mrange/range.hpp"

namespace mrange {

namespace gen {

namespace {
int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
}  // namespace

GaussianRational gaussian_int(Rng& rng, int bound) {
  return {BigRational(uniform(rng, -bound, bound)), BigRational(uniform(rng, -bound, bound))};
}

GaussianRational gaussian_rational(Rng& rng, int bound, int den) {
  return {make_rational(uniform(rng, -bound, bound), uniform(rng, 1, den)),
          make_rational(uniform(rng, -bound, bound), uniform(rng, 1, den))};
}

Poly poly(Rng& rng, int degree, int bound) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(gaussian_int(rng, bound));
  while (c.back().is_zero()) c.back() = gaussian_int(rng, bound);
  return Poly(std::move(c));
}

MatrixQi matrix(Rng& rng, int n, int bound) {
  MatrixQi m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = gaussian_int(rng, bound);
  return m;
}

MatrixQi invertible(Rng& rng, int n, int bound) {
  MatrixQi lower = MatrixQi::identity(n);
  MatrixQi upper = MatrixQi::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < r; ++c) {
      lower(r, c) = gaussian_int(rng, bound);
      upper(c, r) = gaussian_int(rng, bound);
    }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  MatrixQi p(n);
  for (int k = 0; k < n; ++k) p(k, perm[static_cast<std::size_t>(k)]) = 1;
  return p * lower * upper;
}

}  // namespace gen

bool SelftestReport::green() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.failed == 0; });
}

namespace {

using gen::Rng;

void record(SuiteResult& suite, bool ok, const std::function<std::string()>& describe) {
  if (ok) {
    ++suite.passed;
    return;
  }
  if (suite.failed++ == 0) suite.first_failure = describe();
}

SuiteResult similarity_suite(Rng& rng) {
  SuiteResult s;
  s.name = "similarity_equivariance";
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const MatrixQi a = gen::matrix(rng, n, 3);
    const MatrixQi t = gen::invertible(rng, n, 2);
    const Poly p = gen::poly(rng, trial % 7, 3);
    const MatrixQi t_inv = inverse(t);
    const bool ok = apply_poly(p, t_inv * a * t) == t_inv * apply_poly(p, a) * t;
    record(s, ok, [&] { return "trial " + std::to_string(trial) + ", p = " + p.to_string(); });
  }
  return s;
}

SuiteResult toeplitz_suite(Rng& rng) {
  SuiteResult s;
  s.name = "jordan_block_toeplitz";
  for (int k = 1; k <= 8; ++k) {
    for (int rep = 0; rep < 3; ++rep) {
      const Poly p = gen::poly(rng, 1 + (k + rep) % 8, 3);
      const GaussianRational z0 = gen::gaussian_rational(rng, 3, 2);
      const bool ok = f_of_jordan_block(p, k, z0) == apply_poly(p, MatrixQi::jordan_block(k, z0));
      record(s, ok, [&] { return "k = " + std::to_string(k) + ", z0 = " + z0.to_string() + ", p = " + p.to_string(); });
    }
  }
  return s;
}

SuiteResult block_diagonal_suite(Rng& rng) {
  SuiteResult s;
  s.name = "block_diagonal";
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MatrixQi> blocks;
    const int count = 1 + trial % 3;
    for (int b = 0; b < count; ++b) blocks.push_back(gen::matrix(rng, 1 + (trial + b) % 3, 3));
    const Poly p = gen::poly(rng, trial % 6, 3);
    std::vector<MatrixQi> images;
    for (const auto& b : blocks) images.push_back(apply_poly(p, b));
    const bool ok = apply_poly(p, MatrixQi::block_diagonal(blocks)) == MatrixQi::block_diagonal(images);
    record(s, ok, [&] { return "trial " + std::to_string(trial); });
  }
  return s;
}

// Nilpotent upper-triangular, constant superdiagonal a, junk above it.
MatrixQi shifted_superdiagonal(Rng& rng, int n, const GaussianRational& a, bool junk) {
  MatrixQi m(n);
  for (int r = 0; r + 1 < n; ++r) {
    m(r, r + 1) = a;
    if (junk)
      for (int c = r + 2; c < n; ++c) m(r, c) = gen::gaussian_int(rng, 2);
  }
  return m;
}

SuiteResult diagonal_power_suite(Rng& rng) {
  SuiteResult s;
  s.name = "superdiagonal_powers";
  for (int n = 2; n <= 8; ++n) {
    GaussianRational a = gen::gaussian_int(rng, 3);
    if (a.is_zero()) a = 1;
    const MatrixQi m = shifted_superdiagonal(rng, n, a, true);
    MatrixQi power = m;
    GaussianRational a_k = a;
    for (int k = 1; k <= n - 1; ++k) {
      bool ok = true;
      for (int d = 1; d <= k; ++d)
        for (int r = 0; r + d < n; ++r) ok = ok && power(r, r + d) == (d < k ? GaussianRational() : a_k);
      record(s, ok, [&] { return "n = " + std::to_string(n) + ", k = " + std::to_string(k); });
      power = power * m;
      a_k *= a;
    }
  }
  return s;
}

SuiteResult single_block_suite(Rng& rng) {
  SuiteResult s;
  s.name = "single_block_criterion";
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const GaussianRational lambda = gen::gaussian_int(rng, 3);
      GaussianRational a = gen::gaussian_int(rng, 3);
      if (a.is_zero()) a = GaussianRational(BigRational(0), BigRational(1));
      const MatrixQi id = MatrixQi::scalar(n, lambda);
      const MatrixQi with_a = shifted_superdiagonal(rng, n, a, true) + id;
      const std::vector<int> single{n};
      record(s, segre_at(with_a, lambda).parts == single,
             [&] { return "nonzero superdiagonal, n = " + std::to_string(n); });
      if (n >= 2) {
        const MatrixQi zero_a = shifted_superdiagonal(rng, n, 0, false) + id;
        record(s, segre_at(zero_a, lambda).parts != single, [&] { return "zero superdiagonal, n = " + std::to_string(n); });
        const MatrixQi zero_a_junk = shifted_superdiagonal(rng, n, 0, true) + id;
        record(s, segre_at(zero_a_junk, lambda).parts != single,
               [&] { return "zero superdiagonal with junk, n = " + std::to_string(n); });
        MatrixQi uneven = with_a;
        uneven(n - 1, n - 1) += 1;
        bool single_somewhere = false;
        for (int r = 0; r < n; ++r) single_somewhere = single_somewhere || segre_at(uneven, uneven(r, r)).parts == single;
        record(s, !single_somewhere, [&] { return "non-constant diagonal, n = " + std::to_string(n); });
      }
    }
  }
  return s;
}

SuiteResult split_oracle_suite() {
  SuiteResult s;
  s.name = "split_pattern_oracle";
  for (int m = 1; m <= 8; ++m) {
    for (int k = 1; k <= 8; ++k) {
      const auto expected = split_pattern(k, m).parts;
      for (bool shifted : {false, true}) {
        record(s, split_pattern_oracle(k, m, shifted) == expected, [&] {
          return "K = " + std::to_string(k) + ", m = " + std::to_string(m) + (shifted ? " (shifted)" : "");
        });
      }
    }
  }
  return s;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report{seed, {}};
  Rng rng(seed);
  report.suites.push_back(similarity_suite(rng));
  report.suites.push_back(toeplitz_suite(rng));
  report.suites.push_back(block_diagonal_suite(rng));
  report.suites.push_back(diagonal_power_suite(rng));
  report.suites.push_back(single_block_suite(rng));
  report.suites.push_back(split_oracle_suite());
  return report;
}

}  // namespace mrange
