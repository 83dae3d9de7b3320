#include "mrange/matrix.hpp"

#include <algorithm>

#include "mrange/errors.hpp"

namespace mrange {

namespace {

// Rectangular scratch matrix for elimination.
struct Dense {
  int rows;
  int cols;
  std::vector<GaussianRational> a;

  GaussianRational& at(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
  const GaussianRational& at(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
};

Dense to_dense(const MatrixQi& m) {
  Dense d{m.n(), m.n(), {}};
  d.a.reserve(static_cast<std::size_t>(m.n() * m.n()));
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) d.a.push_back(m(r, c));
  return d;
}

// Vectors as rows.
Dense rows_of(const std::vector<Vector>& vs, int dim) {
  Dense d{static_cast<int>(vs.size()), dim, {}};
  for (const auto& v : vs) d.a.insert(d.a.end(), v.begin(), v.end());
  return d;
}

// Reduced row echelon form in place; returns the pivot columns. Pivot rows
// are the first rows with a nonzero entry in the current column.
std::vector<int> rref(Dense& d) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < d.cols && row < d.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < d.rows; ++r) {
      if (!d.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < d.cols; ++c) std::swap(d.at(pivot, c), d.at(row, c));
    const GaussianRational inv = GaussianRational(1) / d.at(row, col);
    for (int c = col; c < d.cols; ++c) d.at(row, c) *= inv;
    for (int r = 0; r < d.rows; ++r) {
      if (r == row || d.at(r, col).is_zero()) continue;
      const GaussianRational f = d.at(r, col);
      for (int c = col; c < d.cols; ++c) d.at(r, c) -= f * d.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_of_vectors(const std::vector<Vector>& vs, int dim) {
  if (vs.empty()) return 0;
  Dense d = rows_of(vs, dim);
  return static_cast<int>(rref(d).size());
}

std::string describe_unsplit(const Poly& cp, const std::vector<RootWithMultiplicity>& roots) {
  std::string out;
  for (const auto& [factor, mult] : squarefree_decomposition(cp)) {
    int found = 0;
    for (const auto& r : roots)
      if (r.multiplicity == mult && eval(factor, r.root).is_zero()) ++found;
    const int rest = factor.degree() - found;
    if (rest == 0) continue;
    if (!out.empty()) out += ", ";
    out += "degree " + std::to_string(rest) + " with multiplicity " + std::to_string(mult);
  }
  return out;
}

}  // namespace

MatrixQi::MatrixQi(int n) : n_(n) {
  if (n < 1) throw DomainError("matrix dimension must be at least 1");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

MatrixQi::MatrixQi(int n, std::vector<GaussianRational> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw DomainError("matrix dimension must be at least 1");
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DomainError("matrix needs n*n entries");
}

MatrixQi MatrixQi::identity(int n) { return scalar(n, 1); }

MatrixQi MatrixQi::scalar(int n, const GaussianRational& c) {
  MatrixQi m(n);
  for (int k = 0; k < n; ++k) m(k, k) = c;
  return m;
}

MatrixQi MatrixQi::diagonal(std::span<const GaussianRational> diag) {
  MatrixQi m(static_cast<int>(diag.size()));
  for (int k = 0; k < m.n(); ++k) m(k, k) = diag[static_cast<std::size_t>(k)];
  return m;
}

MatrixQi MatrixQi::jordan_block(int k, const GaussianRational& lambda) {
  MatrixQi m = scalar(k, lambda);
  for (int r = 0; r + 1 < k; ++r) m(r, r + 1) = 1;
  return m;
}

MatrixQi MatrixQi::block_diagonal(std::span<const MatrixQi> blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.n();
  MatrixQi m(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.n(); ++r)
      for (int c = 0; c < b.n(); ++c) m(off + r, off + c) = b(r, c);
    off += b.n();
  }
  return m;
}

Vector MatrixQi::column(int c) const {
  Vector v(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

void MatrixQi::set_column(int c, const Vector& v) {
  for (int r = 0; r < n_; ++r) (*this)(r, c) = v[static_cast<std::size_t>(r)];
}

Vector MatrixQi::apply(const Vector& v) const {
  Vector out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) {
    GaussianRational acc;
    for (int c = 0; c < n_; ++c) {
      const auto& x = (*this)(r, c);
      if (!x.is_zero()) acc += x * v[static_cast<std::size_t>(c)];
    }
    out[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return out;
}

bool MatrixQi::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& x) { return x.is_zero(); });
}

bool MatrixQi::is_upper_triangular() const {
  for (int r = 1; r < n_; ++r)
    for (int c = 0; c < r; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

MatrixQi& MatrixQi::operator+=(const MatrixQi& o) {
  if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

MatrixQi& MatrixQi::operator-=(const MatrixQi& o) {
  if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

MatrixQi& MatrixQi::operator*=(const GaussianRational& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

MatrixQi operator*(const MatrixQi& a, const MatrixQi& b) {
  if (a.n_ != b.n_) throw DomainError("matrix dimension mismatch");
  const int n = a.n_;
  MatrixQi out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        const auto& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

MatrixQi MatrixQi::pow(unsigned e) const {
  MatrixQi result = identity(n_);
  MatrixQi base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

GaussianRational MatrixQi::trace() const {
  GaussianRational t;
  for (int k = 0; k < n_; ++k) t += (*this)(k, k);
  return t;
}

MatrixQi MatrixQi::block(int offset, int size) const {
  MatrixQi m(size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) m(r, c) = (*this)(offset + r, offset + c);
  return m;
}

int SegrePartition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

bool SegrePartition::nontrivial() const {
  return std::any_of(parts.begin(), parts.end(), [](int p) { return p >= 2; });
}

Poly char_poly(const MatrixQi& a) {
  const int n = a.n();
  std::vector<GaussianRational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  MatrixQi m(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    m = a * m + MatrixQi::scalar(n, c[static_cast<std::size_t>(n - k + 1)]);
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / GaussianRational(k);
  }
  return Poly(std::move(c));
}

GaussianRational determinant(const MatrixQi& a) {
  Dense d = to_dense(a);
  const int n = d.rows;
  GaussianRational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!d.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {};
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(d.at(pivot, c), d.at(col, c));
      det = -det;
    }
    det *= d.at(col, col);
    const GaussianRational inv = GaussianRational(1) / d.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (d.at(r, col).is_zero()) continue;
      const GaussianRational f = d.at(r, col) * inv;
      for (int c = col; c < n; ++c) d.at(r, c) -= f * d.at(col, c);
    }
  }
  return det;
}

int rank(const MatrixQi& a) {
  Dense d = to_dense(a);
  return static_cast<int>(rref(d).size());
}

std::vector<Vector> kernel_basis(const MatrixQi& a) {
  Dense d = to_dense(a);
  const auto pivots = rref(d);
  const int n = a.n();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v[static_cast<std::size_t>(pivots[row])] = -d.at(static_cast<int>(row), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixQi inverse(const MatrixQi& a) {
  const int n = a.n();
  Dense d{n, 2 * n, {}};
  d.a.reserve(static_cast<std::size_t>(2 * n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) d.a.push_back(a(r, c));
    for (int c = 0; c < n; ++c) d.a.emplace_back(r == c ? 1 : 0);
  }
  const auto pivots = rref(d);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw DomainError("matrix is singular");
  MatrixQi inv(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = d.at(r, n + c);
  return inv;
}

SegrePartition segre_at(const MatrixQi& a, const GaussianRational& value) {
  const int n = a.n();
  const MatrixQi shifted = a - MatrixQi::scalar(n, value);
  // at_least[k-1] = number of blocks of size >= k = r_{k-1} - r_k
  std::vector<int> at_least;
  int prev_rank = n;
  MatrixQi power = MatrixQi::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * shifted;
    const int r = rank(power);
    if (r == prev_rank) break;
    at_least.push_back(prev_rank - r);
    prev_rank = r;
  }
  SegrePartition out{value, {}};
  for (int k = static_cast<int>(at_least.size()); k >= 1; --k) {
    const int next = k < static_cast<int>(at_least.size()) ? at_least[static_cast<std::size_t>(k)] : 0;
    out.parts.insert(out.parts.end(), static_cast<std::size_t>(at_least[static_cast<std::size_t>(k - 1)] - next), k);
  }
  return out;
}

bool is_in_E(const MatrixQi& a, const GaussianRational& value) { return eval(char_poly(a), value).is_zero(); }

bool is_in_S(const MatrixQi& a, const GaussianRational& value) { return segre_at(a, value).nontrivial(); }

JordanDecomposition jordan_decomposition(const MatrixQi& a) {
  const int n = a.n();
  const Poly cp = char_poly(a);
  const auto eigen = gaussian_rational_roots(cp);
  int accounted = 0;
  for (const auto& r : eigen) accounted += r.multiplicity;
  if (accounted != n)
    throw DomainError("characteristic polynomial does not split over Q(i); unsplit part: " + describe_unsplit(cp, eigen));

  MatrixQi transform(n);
  std::vector<MatrixQi> blocks;
  std::vector<JordanBlockSpec> ordering;
  int column = 0;

  for (const auto& [lambda, mult] : eigen) {
    const SegrePartition segre = segre_at(a, lambda);
    if (segre.total() != mult) throw InternalError("Segre partition disagrees with algebraic multiplicity");
    const MatrixQi shifted = a - MatrixQi::scalar(n, lambda);
    const int largest = segre.parts.front();

    struct Chain {
      Vector top;
      int size;
    };
    std::vector<Chain> chains;

    for (int k = largest; k >= 1; --k) {
      const auto need = std::count(segre.parts.begin(), segre.parts.end(), k);
      if (need == 0) continue;
      // Span already accounted for inside ker N^k.
      std::vector<Vector> span = k > 1 ? kernel_basis(shifted.pow(static_cast<unsigned>(k - 1))) : std::vector<Vector>{};
      for (const auto& ch : chains) {
        Vector v = ch.top;
        for (int s = 0; s < ch.size - k; ++s) v = shifted.apply(v);
        span.push_back(std::move(v));
      }
      int span_rank = rank_of_vectors(span, n);
      long chosen = 0;
      for (const auto& candidate : kernel_basis(shifted.pow(static_cast<unsigned>(k)))) {
        if (chosen == need) break;
        span.push_back(candidate);
        const int r = rank_of_vectors(span, n);
        if (r > span_rank) {
          span_rank = r;
          chains.push_back({candidate, k});
          ++chosen;
        } else {
          span.pop_back();
        }
      }
      if (chosen != need) throw InternalError("Jordan chain construction ran out of candidates");
    }

    for (const auto& ch : chains) {
      std::vector<Vector> cols(static_cast<std::size_t>(ch.size));
      Vector v = ch.top;
      for (int j = ch.size - 1; j >= 0; --j) {
        cols[static_cast<std::size_t>(j)] = v;
        v = shifted.apply(v);
      }
      for (const auto& c : cols) transform.set_column(column++, c);
      blocks.push_back(MatrixQi::jordan_block(ch.size, lambda));
      ordering.push_back({lambda, ch.size});
    }
  }

  JordanDecomposition out{MatrixQi::block_diagonal(blocks), std::move(transform), std::move(ordering)};
  if (!(a * out.transform == out.transform * out.jordan) || rank(out.transform) != n)
    throw InternalError("Jordan decomposition failed exact verification");
  return out;
}

MatrixQi apply_poly(const Poly& p, const MatrixQi& a) {
  const int n = a.n();
  MatrixQi acc(n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a;
    for (int k = 0; k < n; ++k) acc(k, k) += *it;
  }
  return acc;
}

MatrixQi f_of_jordan_block(const Poly& p, int k, const GaussianRational& z0) {
  if (k < 1) throw DomainError("Jordan block size must be at least 1");
  MatrixQi m(k);
  Poly d = p;
  BigRational factorial(1);
  for (int j = 0; j < k; ++j) {
    if (j > 0) factorial *= j;
    const GaussianRational entry = eval(d, z0) / GaussianRational(factorial);
    for (int r = 0; r + j < k; ++r) m(r, r + j) = entry;
    d = derivative(d);
  }
  return m;
}

}  // namespace mrange
