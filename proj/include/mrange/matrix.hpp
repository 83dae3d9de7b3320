#pragma once

// Dense square matrices over Q(i) and the Jordan-structure queries built on
// exact ranks.

#include <span>
#include <string>
#include <vector>

#include "mrange/poly.hpp"
#include "mrange/scalar.hpp"

namespace mrange {

using Vector = std::vector<GaussianRational>;

class MatrixQi {
 public:
  /// n x n zero matrix. Throws DomainError for n < 1.
  explicit MatrixQi(int n);
  /// Row-major entries; throws DomainError unless entries.size() == n*n.
  MatrixQi(int n, std::vector<GaussianRational> entries);

  static MatrixQi identity(int n);
  static MatrixQi scalar(int n, const GaussianRational& c);
  static MatrixQi diagonal(std::span<const GaussianRational> diag);
  /// J_k(lambda): lambda on the diagonal, ones on the first superdiagonal.
  static MatrixQi jordan_block(int k, const GaussianRational& lambda);
  static MatrixQi block_diagonal(std::span<const MatrixQi> blocks);

  int n() const noexcept { return n_; }
  const GaussianRational& operator()(int r, int c) const { return entries_[index(r, c)]; }
  GaussianRational& operator()(int r, int c) { return entries_[index(r, c)]; }

  Vector column(int c) const;
  void set_column(int c, const Vector& v);
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  bool is_upper_triangular() const;

  MatrixQi& operator+=(const MatrixQi& o);
  MatrixQi& operator-=(const MatrixQi& o);
  MatrixQi& operator*=(const GaussianRational& c);
  friend MatrixQi operator+(MatrixQi a, const MatrixQi& b) { return a += b; }
  friend MatrixQi operator-(MatrixQi a, const MatrixQi& b) { return a -= b; }
  friend MatrixQi operator*(MatrixQi a, const GaussianRational& c) { return a *= c; }
  friend MatrixQi operator*(const MatrixQi& a, const MatrixQi& b);
  friend bool operator==(const MatrixQi& a, const MatrixQi& b) = default;

  MatrixQi pow(unsigned e) const;
  GaussianRational trace() const;
  /// Extracts the square block starting at (offset, offset).
  MatrixQi block(int offset, int size) const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c); }

  int n_;
  std::vector<GaussianRational> entries_;
};

/// Jordan block sizes of a matrix at one value, largest first. Empty when
/// the value is not an eigenvalue.
struct SegrePartition {
  GaussianRational value;
  std::vector<int> parts;

  int total() const;
  bool nontrivial() const;
  friend bool operator==(const SegrePartition&, const SegrePartition&) = default;
};

struct JordanBlockSpec {
  GaussianRational eigenvalue;
  int size = 1;
  friend bool operator==(const JordanBlockSpec&, const JordanBlockSpec&) = default;
};

/// A = T * J * T^{-1}.
struct JordanDecomposition {
  MatrixQi jordan;
  MatrixQi transform;
  std::vector<JordanBlockSpec> ordering;
};

/// det(zI - A), by the Faddeev-LeVerrier recurrence.
Poly char_poly(const MatrixQi& a);

GaussianRational determinant(const MatrixQi& a);

int rank(const MatrixQi& a);

/// Basis of {v : A v = 0}, one vector per free column of the reduced row
/// echelon form (pivots chosen as the first nonzero entry in each column).
std::vector<Vector> kernel_basis(const MatrixQi& a);

/// Throws DomainError when a is singular.
MatrixQi inverse(const MatrixQi& a);

/// Block sizes at value from the rank sequence of (A - value I)^k.
SegrePartition segre_at(const MatrixQi& a, const GaussianRational& value);

/// A has eigenvalue value.
bool is_in_E(const MatrixQi& a, const GaussianRational& value);
/// A has a Jordan block of size >= 2 at value.
bool is_in_S(const MatrixQi& a, const GaussianRational& value);

/// Exact Jordan decomposition. Blocks ordered by eigenvalue in the canonical
/// scalar order, then by decreasing size. Throws DomainError when the
/// characteristic polynomial does not split over Q(i).
JordanDecomposition jordan_decomposition(const MatrixQi& a);

/// Exact p(A) by Horner's rule.
MatrixQi apply_poly(const Poly& p, const MatrixQi& a);

/// The upper-triangular Toeplitz matrix with (i, i+j) entry p^{(j)}(z0)/j!.
MatrixQi f_of_jordan_block(const Poly& p, int k, const GaussianRational& z0);

}  // namespace mrange
