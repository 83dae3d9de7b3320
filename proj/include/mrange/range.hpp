#pragma once

// Decision procedure for solvability of f(X) = A.
//
// For an eigenvalue a of A that is neither omitted nor totally ramified, f
// has a preimage z with f'(z) != 0, and J_K(z) maps onto a single block of
// size K at a, so every Jordan structure at a is reachable. At a totally
// ramified value only preimages of multiplicity m >= 2 exist; J_K(z) then
// maps onto split_pattern(K, m) at a, and A is reachable at a exactly when
// its Segre partition at a is a multiset union of such patterns.

#include <optional>
#include <string>
#include <vector>

#include "mrange/entire.hpp"
#include "mrange/matrix.hpp"

namespace mrange {

struct SplitPattern {
  int block_size = 1;    // K
  int multiplicity = 1;  // m
  std::vector<int> parts;  // descending
};

/// Jordan block sizes at a of f(J_K(z0)) when z0 is a root of f - a of
/// multiplicity m: (K mod m) blocks of size ceil(K/m), the remaining
/// min(m, K) - (K mod m) blocks of size floor(K/m).
SplitPattern split_pattern(int block_size, int multiplicity);

/// Rank-based ground truth for split_pattern: the Segre partition at 0 of
/// p(J_K(z0)) where p = z^m (z0 = 0) or, with shifted_variant,
/// p = (z - 1)^m (z + 2) (z0 = 1). Descending.
std::vector<int> split_pattern_oracle(int block_size, int multiplicity, bool shifted_variant = false);

struct CoverPiece {
  int block_size = 1;    // K
  int multiplicity = 1;  // m
  friend auto operator<=>(const CoverPiece&, const CoverPiece&) = default;
};

/// Searches for pieces (K_j, m_j) whose split patterns union to target
/// exactly. Multiplicities come from available (and 1 when simple_available).
/// With unlimited_reuse each multiplicity may be used any number of times;
/// otherwise available is a multiset consumed one entry per piece. Returns
/// the lexicographically smallest sorted cover, or nullopt.
std::optional<std::vector<CoverPiece>> coverable(std::vector<int> target, std::vector<int> available, bool simple_available,
                                                 bool unlimited_reuse = true);

enum class BlockingReason { OmittedEigenvalue, UncoverablePartition };

const char* reason_label(BlockingReason r);

struct Blocking {
  GaussianRational value;
  BlockingReason reason;
  SegrePartition partition;
};

/// Where a piece of the cover lives: a concrete root in Q(i) when one is
/// known, otherwise only its multiplicity.
struct PreimageDescriptor {
  std::optional<GaussianRational> root;
  int multiplicity = 1;
};

struct CoverPlanEntry {
  GaussianRational eigenvalue;
  PreimageDescriptor preimage;
  int block_size = 1;
  int multiplicity = 1;
  std::vector<int> parts;
};

struct RangeVerdict {
  bool solvable = true;
  TheoremCase theorem_case = TheoremCase::NoTRV;
  std::optional<Blocking> blocking;
  std::optional<std::vector<CoverPlanEntry>> cover_plan;
  std::optional<MatrixQi> witness;
};

RangeVerdict decide_range(const EntireFunction& f, const MatrixQi& a);

/// Exact X with f(X) = A, checked before returning. Throws
/// WitnessUnavailable when the construction needs a root or eigenvalue
/// outside Q(i) (the verdict still stands), DomainError for unsolvable
/// verdicts or non-polynomial f, InternalError if verification fails.
MatrixQi build_witness(const EntireFunction& f, const MatrixQi& a, const RangeVerdict& verdict);

struct UncoverableAt {
  GaussianRational value;
  std::vector<std::vector<int>> partitions;
};

struct RangeDescription {
  TheoremCase theorem_case;
  int n;
  /// Eigenvalues excluded outright (case I).
  std::vector<GaussianRational> omitted_values;
  /// Per totally ramified value, the nontrivial Segre partitions of total
  /// <= n that no X reaches: S^f_a for dimension n.
  std::vector<UncoverableAt> uncoverable;
};

RangeDescription describe_range(const EntireFunction& f, int n);

/// Every partition of total, descending parts, in reverse lexicographic order.
std::vector<std::vector<int>> partitions_of(int total);

}  // namespace mrange
