#include "mrange/range.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "mrange/errors.hpp"

namespace mrange {

SplitPattern split_pattern(int block_size, int multiplicity) {
  if (block_size < 1 || multiplicity < 1) throw DomainError("split_pattern needs K >= 1 and m >= 1");
  const int q = block_size / multiplicity;
  const int r = block_size % multiplicity;
  SplitPattern out{block_size, multiplicity, {}};
  out.parts.assign(static_cast<std::size_t>(r), q + 1);
  if (q > 0) out.parts.insert(out.parts.end(), static_cast<std::size_t>(multiplicity - r), q);
  return out;
}

std::vector<int> split_pattern_oracle(int block_size, int multiplicity, bool shifted_variant) {
  if (block_size < 1 || multiplicity < 1) throw DomainError("split_pattern_oracle needs K >= 1 and m >= 1");
  const auto m = static_cast<unsigned>(multiplicity);
  if (!shifted_variant) {
    const Poly p = Poly::monomial(1, multiplicity);
    return segre_at(apply_poly(p, MatrixQi::jordan_block(block_size, 0)), 0).parts;
  }
  const Poly p = Poly::linear(1).pow(m) * Poly::linear(-2);
  return segre_at(apply_poly(p, MatrixQi::jordan_block(block_size, 1)), 0).parts;
}

namespace {

// Multiset of positive integers stored as sorted-descending parts.
using Parts = std::vector<int>;

// Removes sub from parts when sub is a sub-multiset; both descending.
std::optional<Parts> subtract(const Parts& parts, const Parts& sub) {
  Parts out;
  out.reserve(parts.size());
  std::size_t j = 0;
  for (int p : parts) {
    if (j < sub.size() && sub[j] == p) {
      ++j;
    } else {
      if (j < sub.size() && sub[j] > p) return std::nullopt;
      out.push_back(p);
    }
  }
  if (j != sub.size()) return std::nullopt;
  return out;
}

class CoverSearch {
 public:
  CoverSearch(std::vector<int> available, bool simple_available, bool unlimited_reuse)
      : unlimited_(unlimited_reuse) {
    for (int m : available) ++counts_[m];
    if (simple_available) counts_[1] = unlimited_reuse ? 1 : static_cast<int>(1 << 20);
  }

  std::optional<std::vector<CoverPiece>> run(Parts target) {
    std::map<int, int> avail = counts_;
    if (!exists(target, avail)) return std::nullopt;
    std::vector<CoverPiece> cover;
    while (!target.empty()) {
      const int total = std::accumulate(target.begin(), target.end(), 0);
      bool advanced = false;
      for (int k = 1; k <= total && !advanced; ++k) {
        for (auto& [m, count] : avail) {
          if (count == 0) continue;
          auto rest = subtract(target, split_pattern(k, m).parts);
          if (!rest) continue;
          if (!unlimited_) --count;
          if (exists(*rest, avail)) {
            cover.push_back({k, m});
            target = std::move(*rest);
            advanced = true;
            break;
          }
          if (!unlimited_) ++count;
        }
      }
      if (!advanced) throw InternalError("cover reconstruction failed");
    }
    return cover;
  }

 private:
  std::string key(const Parts& target, const std::map<int, int>& avail) const {
    std::string k;
    for (int p : target) k += std::to_string(p) + ",";
    if (!unlimited_) {
      k += "|";
      for (const auto& [m, c] : avail) k += std::to_string(m) + ":" + std::to_string(c) + ",";
    }
    return k;
  }

  // The largest remaining part p must be the largest part of some pattern,
  // which forces ceil(K/m) = p, i.e. K in [m(p-1)+1, mp].
  bool exists(const Parts& target, std::map<int, int>& avail) {
    if (target.empty()) return true;
    const std::string k = key(target, avail);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    const int p = target.front();
    const int total = std::accumulate(target.begin(), target.end(), 0);
    bool found = false;
    for (auto& [m, count] : avail) {
      if (count == 0 || found) continue;
      for (int size = m * (p - 1) + 1; size <= std::min(m * p, total) && !found; ++size) {
        auto rest = subtract(target, split_pattern(size, m).parts);
        if (!rest) continue;
        if (!unlimited_) --count;
        found = exists(*rest, avail);
        if (!unlimited_) ++count;
      }
    }
    memo_.emplace(k, found);
    return found;
  }

  bool unlimited_;
  std::map<int, int> counts_;
  std::map<std::string, bool> memo_;
};

std::optional<GaussianRational> least_root_with_multiplicity(const Poly& p, const GaussianRational& value, int multiplicity) {
  for (const auto& r : gaussian_rational_roots(p - Poly::constant(value)))
    if (r.multiplicity == multiplicity) return r.root;
  return std::nullopt;
}

const TrvEntry* find_trv(const RamificationProfile& prof, const GaussianRational& value) {
  for (const auto& e : prof.trv_entries)
    if (e.value == value) return &e;
  return nullptr;
}

PreimageDescriptor describe_preimage(const EntireFunction& f, const GaussianRational& value, int multiplicity) {
  PreimageDescriptor d{std::nullopt, multiplicity};
  if (f.is_polynomial()) {
    d.root = least_root_with_multiplicity(f.as_polynomial(), value, multiplicity);
  } else if (const auto* e = std::get_if<ExpPolyFamily>(&f.variant()); e && value == e->v && !e->p.is_constant()) {
    for (const auto& r : gaussian_rational_roots(e->p))
      if (r.multiplicity == multiplicity) {
        d.root = r.root;
        break;
      }
  }
  return d;
}

void append_cover(std::vector<CoverPlanEntry>& plan, const EntireFunction& f, const GaussianRational& value,
                  const std::vector<CoverPiece>& cover) {
  for (const auto& piece : cover) {
    plan.push_back({value, describe_preimage(f, value, piece.multiplicity), piece.block_size, piece.multiplicity,
                    split_pattern(piece.block_size, piece.multiplicity).parts});
  }
}

std::vector<CoverPiece> simple_cover(const std::vector<int>& parts) {
  std::vector<CoverPiece> cover;
  for (int p : parts) cover.push_back({p, 1});
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace

std::optional<std::vector<CoverPiece>> coverable(std::vector<int> target, std::vector<int> available, bool simple_available,
                                                 bool unlimited_reuse) {
  for (int p : target)
    if (p < 1) throw DomainError("cover target parts must be positive");
  for (int m : available)
    if (m < 2) throw DomainError("ramified multiplicities must be at least 2");
  std::sort(target.begin(), target.end(), std::greater<>());
  return CoverSearch(std::move(available), simple_available, unlimited_reuse).run(std::move(target));
}

const char* reason_label(BlockingReason r) {
  return r == BlockingReason::OmittedEigenvalue ? "OmittedEigenvalue" : "UncoverablePartition";
}

RangeVerdict decide_range(const EntireFunction& f, const MatrixQi& a) {
  validate(f);
  const RamificationProfile prof = ramification_profile(f);
  RangeVerdict verdict;
  verdict.theorem_case = prof.theorem_case;

  // n = 1: scalar surjectivity; only an omitted value blocks.
  if (a.n() == 1) {
    const GaussianRational& lambda = a(0, 0);
    for (const auto& v : prof.omitted_values) {
      if (v == lambda) {
        verdict.solvable = false;
        verdict.blocking = Blocking{v, BlockingReason::OmittedEigenvalue, SegrePartition{v, {1}}};
        return verdict;
      }
    }
    std::vector<CoverPlanEntry> plan;
    const TrvEntry* trv = find_trv(prof, lambda);
    append_cover(plan, f, lambda, {CoverPiece{1, trv ? trv->multiplicities.front() : 1}});
    verdict.cover_plan = std::move(plan);
    return verdict;
  }

  for (const auto& v : prof.omitted_values) {
    if (is_in_E(a, v)) {
      verdict.solvable = false;
      verdict.blocking = Blocking{v, BlockingReason::OmittedEigenvalue, segre_at(a, v)};
      return verdict;
    }
  }

  std::vector<CoverPlanEntry> plan;
  for (const auto& e : prof.trv_entries) {
    const SegrePartition segre = segre_at(a, e.value);
    if (segre.parts.empty()) continue;
    auto cover = coverable(segre.parts, e.multiplicities, false, true);
    if (!cover) {
      verdict.solvable = false;
      verdict.blocking = Blocking{e.value, BlockingReason::UncoverablePartition, segre};
      return verdict;
    }
    append_cover(plan, f, e.value, *cover);
  }

  // Remaining eigenvalues never block; list the ones that are in Q(i).
  for (const auto& root : gaussian_rational_roots(char_poly(a))) {
    if (find_trv(prof, root.root)) continue;
    append_cover(plan, f, root.root, simple_cover(segre_at(a, root.root).parts));
  }
  std::stable_sort(plan.begin(), plan.end(), [](const auto& x, const auto& y) { return x.eigenvalue < y.eigenvalue; });
  verdict.cover_plan = std::move(plan);
  return verdict;
}

MatrixQi build_witness(const EntireFunction& f, const MatrixQi& a, const RangeVerdict& verdict) {
  if (!verdict.solvable) throw DomainError("f(X) = A has no solution, so there is no witness");
  if (!f.is_polynomial()) throw WitnessUnavailable("exact witnesses are only constructed for polynomial functions");
  const Poly& p = f.as_polynomial();
  const int n = a.n();

  auto verified = [&](const MatrixQi& x) {
    if (!(apply_poly(p, x) == a)) throw InternalError("witness failed exact verification");
    return x;
  };

  // Linear f: X = (A - c0 I) / c1 is the unique solution.
  if (p.degree() == 1) {
    MatrixQi x = (a - MatrixQi::scalar(n, p.coeff(0))) * (GaussianRational(1) / p.coeff(1));
    return verified(x);
  }

  JordanDecomposition ja = [&] {
    try {
      return jordan_decomposition(a);
    } catch (const InternalError&) {
      throw;
    } catch (const DomainError& e) {
      throw WitnessUnavailable(std::string("spectrum of A is not in Q(i): ") + e.what());
    }
  }();

  const RamificationProfile prof = ramification_profile(f);
  std::vector<MatrixQi> blocks;
  std::size_t i = 0;
  while (i < ja.ordering.size()) {
    const GaussianRational mu = ja.ordering[i].eigenvalue;
    std::vector<int> parts;
    for (; i < ja.ordering.size() && ja.ordering[i].eigenvalue == mu; ++i) parts.push_back(ja.ordering[i].size);

    std::vector<CoverPiece> cover;
    if (const TrvEntry* trv = find_trv(prof, mu)) {
      auto found = coverable(parts, trv->multiplicities, false, true);
      if (!found) throw InternalError("solvable verdict but Segre partition at a ramified value is uncoverable");
      cover = std::move(*found);
    } else {
      cover = simple_cover(parts);
    }
    for (const auto& piece : cover) {
      auto root = least_root_with_multiplicity(p, mu, piece.multiplicity);
      if (!root) {
        throw WitnessUnavailable("preimage root outside Q(i): f(z) = " + mu.to_string() + " has no root of multiplicity " +
                                 std::to_string(piece.multiplicity) + " in Q(i)");
      }
      blocks.push_back(MatrixQi::jordan_block(piece.block_size, *root));
    }
  }

  const MatrixQi y = MatrixQi::block_diagonal(blocks);
  const MatrixQi fy = apply_poly(p, y);
  JordanDecomposition jf = [&] {
    try {
      return jordan_decomposition(fy);
    } catch (const DomainError& e) {
      throw InternalError(std::string("f(Y) has a spectrum outside Q(i): ") + e.what());
    }
  }();
  if (!(jf.jordan == ja.jordan)) throw InternalError("Jordan form of f(Y) does not match the Jordan form of A");

  // A = T J T^-1 and f(Y) = S J S^-1, so X = (T S^-1) Y (T S^-1)^-1.
  const MatrixQi w = ja.transform * inverse(jf.transform);
  return verified(w * y * inverse(w));
}

std::vector<std::vector<int>> partitions_of(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (total >= 1) rec(total, total);
  return out;
}

RangeDescription describe_range(const EntireFunction& f, int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  validate(f);
  const RamificationProfile prof = ramification_profile(f);
  RangeDescription out{prof.theorem_case, n, prof.omitted_values, {}};
  for (const auto& e : prof.trv_entries) {
    UncoverableAt at{e.value, {}};
    for (int total = 1; total <= n; ++total) {
      for (auto& part : partitions_of(total)) {
        if (part.front() < 2) continue;
        if (!coverable(part, e.multiplicities, false, true)) at.partitions.push_back(std::move(part));
      }
    }
    out.uncoverable.push_back(std::move(at));
  }
  return out;
}

}  // namespace mrange
