#pragma once

// Independent reference computations used only by the tests. None of these
// share a code path with the routine they check.

#include <complex>
#include <map>
#include <vector>

#include "mrange/matrix.hpp"
#include "mrange/poly.hpp"
#include "mrange/range.hpp"

namespace mrange::oracle {

/// sum_k c_k z^k with powers formed by repeated multiplication.
inline GaussianRational monomial_sum(const Poly& p, const GaussianRational& z) {
  GaussianRational acc;
  for (int k = 0; k <= p.degree(); ++k) {
    GaussianRational power(1);
    for (int j = 0; j < k; ++j) power *= z;
    acc += p.coeff(k) * power;
  }
  return acc;
}

/// Determinant by Laplace expansion along the first row.
inline GaussianRational laplace_det(const std::vector<std::vector<GaussianRational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  GaussianRational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<GaussianRational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<GaussianRational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const GaussianRational term = m[0][c] * laplace_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// Res(p, q) as the determinant of the Sylvester matrix.
inline GaussianRational sylvester_resultant(const Poly& p, const Poly& q) {
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  std::vector<std::vector<GaussianRational>> s(static_cast<std::size_t>(size), std::vector<GaussianRational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(n - k);
  return laplace_det(s);
}

/// Characteristic polynomial det(zI - A) by Laplace expansion over
/// polynomial entries.
inline Poly laplace_char_poly(const MatrixQi& a) {
  const int n = a.n();
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (r == c ? Poly{-a(r, c), GaussianRational(1)} : Poly{-a(r, c)});
  auto det = [](auto&& self, const std::vector<std::vector<Poly>>& mm) -> Poly {
    const std::size_t size = mm.size();
    if (size == 1) return mm[0][0];
    Poly acc;
    for (std::size_t c = 0; c < size; ++c) {
      if (mm[0][c].is_zero()) continue;
      std::vector<std::vector<Poly>> minor;
      for (std::size_t r = 1; r < size; ++r) {
        std::vector<Poly> row;
        for (std::size_t k = 0; k < size; ++k)
          if (k != c) row.push_back(mm[r][k]);
        minor.push_back(std::move(row));
      }
      const Poly term = mm[0][c] * self(self, minor);
      acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
  };
  return det(det, m);
}

/// Exhaustive existence check for a cover: every multiset of pieces (K, m)
/// with m in available and sum K = sum target, compared against target. No
/// pruning beyond the running block-size total, no memo.
inline bool brute_force_coverable(std::vector<int> target, const std::vector<int>& available) {
  std::sort(target.begin(), target.end(), std::greater<>());
  int total = 0;
  for (int p : target) total += p;
  std::vector<std::pair<int, int>> pieces;
  for (int k = 1; k <= total; ++k)
    for (int m : available) pieces.push_back({k, m});
  std::vector<int> acc;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t first, int remaining) -> void {
    if (found) return;
    if (remaining == 0) {
      std::vector<int> sorted = acc;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      found = sorted == target;
      return;
    }
    for (std::size_t i = first; i < pieces.size(); ++i) {
      const auto [k, m] = pieces[i];
      if (k > remaining) continue;
      const auto parts = split_pattern(k, m).parts;
      acc.insert(acc.end(), parts.begin(), parts.end());
      self(self, i, remaining - k);
      acc.resize(acc.size() - parts.size());
    }
  };
  rec(rec, 0, total);
  return found;
}

using Complex = std::complex<double>;

inline Complex to_complex(const GaussianRational& x) { return {x.re().get_d(), x.im().get_d()}; }

/// Durand-Kerner simultaneous iteration.
inline std::vector<Complex> approximate_roots(const Poly& p, int iterations = 4000) {
  const int n = p.degree();
  std::vector<Complex> c;
  const Complex lead = to_complex(p.leading());
  for (int k = 0; k <= n; ++k) c.push_back(to_complex(p.coeff(k)) / lead);
  auto eval_c = [&](Complex z) {
    Complex acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
    return acc;
  };
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(0.4, 0.9);
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, k) * 1.3;
  for (int it = 0; it < iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      Complex denom = 1;
      for (int j = 0; j < n; ++j)
        if (i != j) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      z[static_cast<std::size_t>(i)] -= eval_c(z[static_cast<std::size_t>(i)]) / denom;
    }
  }
  return z;
}

/// Groups approximate roots lying within radius of each other and returns
/// the group sizes, ascending.
inline std::vector<int> cluster_sizes(const std::vector<Complex>& roots, double radius) {
  std::vector<int> group(roots.size(), -1);
  int groups = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (group[j] < 0 && std::abs(roots[i] - roots[j]) < radius) group[j] = groups;
    ++groups;
  }
  std::vector<int> sizes(static_cast<std::size_t>(groups), 0);
  for (int g : group) ++sizes[static_cast<std::size_t>(g)];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace mrange::oracle
