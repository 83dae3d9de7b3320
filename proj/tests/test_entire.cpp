#include <gtest/gtest.h>

#include "mrange/entire.hpp"
#include "mrange/errors.hpp"
#include "mrange/selftest.hpp"
#include "support/oracles.hpp"

using namespace mrange;

namespace {

GaussianRational q(const char* s) { return GaussianRational::parse(s); }

EntireFunction poly_fn(Poly p) { return EntireFunction::polynomial(std::move(p)); }

Poly from_roots(const GaussianRational& lead, const std::vector<std::pair<GaussianRational, int>>& roots) {
  Poly p = Poly::constant(lead);
  for (const auto& [r, m] : roots) p *= Poly::linear(r).pow(static_cast<unsigned>(m));
  return p;
}

std::vector<GaussianRational> trv_values(const RamificationProfile& prof) {
  std::vector<GaussianRational> out;
  for (const auto& e : prof.trv_entries) out.push_back(e.value);
  return out;
}

}  // namespace

TEST(Entire, ConstructionPremises) {
  EXPECT_THROW(EntireFunction::polynomial(Poly{3}), DomainError);
  EXPECT_THROW(EntireFunction::polynomial(Poly{}), DomainError);
  EXPECT_THROW(EntireFunction::sin_family(1, 1, 1, 0), DomainError);
  EXPECT_THROW(EntireFunction::sin_family(0, 1, 0, 0), DomainError);
  EXPECT_THROW(EntireFunction::exp_poly(0, Poly{}, 1, 0), DomainError);
  EXPECT_THROW(EntireFunction::exp_poly(0, Poly{1}, 0, 0), DomainError);
  EXPECT_THROW(EntireFunction::exp_poly(0, Poly{0, 2}, 1, 0), DomainError);
  EXPECT_THROW(EntireFunction::sin_family(0, 1, 1, 0).as_polynomial(), DomainError);
  EXPECT_NO_THROW(validate(EntireFunction::sin_family(0, 1, 1, 0)));
}

TEST(Entire, ProfileExamples) {
  {
    const auto prof = ramification_profile(poly_fn(Poly{3, 0, 1}));  // z^2 + 3
    EXPECT_EQ(prof.theorem_case, TheoremCase::OneTRV);
    ASSERT_EQ(prof.trv_entries.size(), 1U);
    EXPECT_EQ(prof.trv_entries[0].value, q("3"));
    EXPECT_EQ(prof.trv_entries[0].multiplicities, std::vector<int>{2});
    EXPECT_EQ(prof.trv_entries[0].root_multiset, std::vector<int>{2});
  }
  {
    const auto prof = ramification_profile(poly_fn(Poly{0, 0, -1, 1}));  // z^2 (z - 1)
    EXPECT_EQ(prof.theorem_case, TheoremCase::NoTRV);
    EXPECT_TRUE(prof.trv_entries.empty());
  }
  {
    const auto prof = ramification_profile(poly_fn(Poly::monomial(1, 3)));
    ASSERT_EQ(prof.trv_entries.size(), 1U);
    EXPECT_EQ(prof.trv_entries[0].value, q("0"));
    EXPECT_EQ(prof.trv_entries[0].multiplicities, std::vector<int>{3});
  }
  {
    const auto prof = ramification_profile(EntireFunction::sin_family(0, 1, 1, 0));
    EXPECT_EQ(prof.theorem_case, TheoremCase::TwoTRV);
    EXPECT_EQ(trv_values(prof), (std::vector<GaussianRational>{0, 1}));
    for (const auto& e : prof.trv_entries) {
      EXPECT_EQ(e.multiplicities, std::vector<int>{2});
      EXPECT_TRUE(e.infinitely_many_preimages);
    }
  }
  {
    const auto prof = ramification_profile(EntireFunction::exp_poly(5, Poly{1}, 1, 0));
    EXPECT_EQ(prof.theorem_case, TheoremCase::OmitsValue);
    EXPECT_EQ(prof.omitted_values, std::vector<GaussianRational>{5});
    EXPECT_TRUE(prof.trv_entries.empty());
  }
  {
    const auto prof = ramification_profile(EntireFunction::exp_poly(0, Poly::monomial(1, 2), 1, 0));
    EXPECT_EQ(prof.theorem_case, TheoremCase::OneTRV);
    EXPECT_EQ(trv_values(prof), std::vector<GaussianRational>{0});
    EXPECT_EQ(prof.trv_entries[0].multiplicities, std::vector<int>{2});
  }
  {
    // exp_poly with a simple zero in P: v is attained simply.
    const auto prof = ramification_profile(EntireFunction::exp_poly(0, Poly{-1, 0, 1}, 1, 0));
    EXPECT_EQ(prof.theorem_case, TheoremCase::NoTRV);
  }
  {
    const auto prof = ramification_profile(poly_fn(Poly{4, 1}));
    EXPECT_EQ(prof.theorem_case, TheoremCase::NoTRV);
  }
}

TEST(Entire, MixedMultiplicityTrv) {
  // (z - 1)^2 (z + i)^3 + 7: TRV 7 with multiplicities {2, 3}
  const Poly p = from_roots(1, {{1, 2}, {q("0-1i"), 3}}) + Poly{7};
  const auto prof = ramification_profile(poly_fn(p));
  ASSERT_EQ(prof.trv_entries.size(), 1U);
  EXPECT_EQ(prof.trv_entries[0].value, q("7"));
  EXPECT_EQ(prof.trv_entries[0].multiplicities, (std::vector<int>{2, 3}));
  EXPECT_EQ(prof.trv_entries[0].root_multiset, (std::vector<int>{2, 3}));
}

TEST(Entire, PreimageExamples) {
  {
    const auto pre = preimage_roots(poly_fn(Poly{0, 0, 1}), 4);
    const auto& fin = std::get<PreimageFinite>(pre);
    ASSERT_EQ(fin.roots.size(), 2U);
    EXPECT_EQ(fin.roots[0].root, q("-2"));
    EXPECT_EQ(fin.roots[1].root, q("2"));
    EXPECT_TRUE(fin.complete);
  }
  {
    const auto pre = preimage_roots(poly_fn(Poly{0, 0, 1}), 2);
    const auto& fin = std::get<PreimageFinite>(pre);
    EXPECT_TRUE(fin.roots.empty());
    EXPECT_FALSE(fin.complete);
    EXPECT_EQ(fin.multiplicity_multiset, (std::vector<int>{1, 1}));
  }
  {
    const auto& fin = std::get<PreimageFinite>(preimage_roots(poly_fn(Poly{0, 0, 1}), 0));
    ASSERT_EQ(fin.roots.size(), 1U);
    EXPECT_EQ(fin.roots[0].multiplicity, 2);
  }
  const auto sine = EntireFunction::sin_family(0, 1, 1, 0);
  EXPECT_TRUE(std::holds_alternative<PreimageInfinitelyManyDouble>(preimage_roots(sine, 1)));
  EXPECT_TRUE(std::holds_alternative<PreimageInfinitelyManySimple>(preimage_roots(sine, q("1/2"))));
  const auto omit = EntireFunction::exp_poly(5, Poly{1}, 1, 0);
  EXPECT_TRUE(std::holds_alternative<PreimageEmpty>(preimage_roots(omit, 5)));
  EXPECT_TRUE(std::holds_alternative<PreimageInfinitelyManySimple>(preimage_roots(omit, 4)));
  const auto& fin = std::get<PreimageFinite>(preimage_roots(EntireFunction::exp_poly(0, Poly::monomial(1, 2), 1, 0), 0));
  ASSERT_EQ(fin.roots.size(), 1U);
  EXPECT_EQ(fin.roots[0].multiplicity, 2);
}

class EntireProperties : public ::testing::Test {
 protected:
  gen::Rng rng{23};
};

TEST_F(EntireProperties, RandomPolynomialsHaveAtMostOneTrv) {
  for (int trial = 0; trial < 120; ++trial) {
    const Poly p = gen::poly(rng, 1 + trial % 8, 4);
    EXPECT_LE(polynomial_trvs(p).size(), 1U) << p.to_string();
  }
}

TEST_F(EntireProperties, SquaredPlusConstantIsTotallyRamified) {
  for (int trial = 0; trial < 30; ++trial) {
    Poly qp = gen::poly(rng, 1 + trial % 3, 3);
    const GaussianRational t = gen::gaussian_rational(rng, 5, 3);
    const Poly p = qp * qp + Poly::constant(t);
    const auto trvs = polynomial_trvs(p);
    ASSERT_EQ(trvs.size(), 1U) << p.to_string();
    EXPECT_EQ(trvs[0].value, t);
    for (int m : trvs[0].multiplicities) EXPECT_GE(m, 2);
  }
}

TEST_F(EntireProperties, RejectedCriticalValuesHaveASimpleRoot) {
  // Every Q(i) root of D other than the reported TRV leaves a simple root in p - a.
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<GaussianRational, int>> roots;
    const int count = 1 + trial % 3;
    for (int k = 0; k < count; ++k) roots.push_back({gen::gaussian_int(rng, 3), 1 + (trial + k) % 3});
    const Poly p = from_roots(1, roots) + Poly::constant(gen::gaussian_int(rng, 4));
    if (p.degree() < 2) continue;
    const auto trvs = polynomial_trvs(p);
    const Poly dp = derivative(p);
    for (const auto& r : roots) {
      const GaussianRational a = eval(p, r.first);
      if (!eval(dp, r.first).is_zero() || (!trvs.empty() && trvs[0].value == a)) continue;
      const auto mults = root_multiplicities(p - Poly::constant(a));
      EXPECT_TRUE(std::find(mults.begin(), mults.end(), 1) != mults.end()) << p.to_string() << " at " << a;
    }
  }
}

TEST_F(EntireProperties, MultiplicitiesAgreeWithNumericalClusters) {
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<std::pair<GaussianRational, int>> roots;
    std::vector<GaussianRational> used;
    const int count = 1 + trial % 3;
    for (int k = 0; k < count; ++k) {
      GaussianRational r = gen::gaussian_int(rng, 4);
      while (std::find(used.begin(), used.end(), r) != used.end()) r = r + GaussianRational(3);
      used.push_back(r);
      roots.push_back({r, 2 + (trial + k) % 2});
    }
    const GaussianRational t = gen::gaussian_int(rng, 5);
    const Poly p = from_roots(1, roots) + Poly::constant(t);
    const auto trvs = polynomial_trvs(p);
    ASSERT_EQ(trvs.size(), 1U);
    // Exact multiset against numerical cluster sizes of p - t.
    const auto approx = oracle::approximate_roots(p - Poly::constant(t));
    EXPECT_EQ(oracle::cluster_sizes(approx, 1e-2), trvs[0].root_multiset) << p.to_string();
  }
}

TEST_F(EntireProperties, NoIrrationalCriticalValuePassesTheScreen) {
  // At every critical value other than the exact TRV, p - value keeps a
  // simple root. Checked numerically at critical points found by iteration.
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = gen::poly(rng, 3 + trial % 4, 3);
    const auto trvs = polynomial_trvs(p);
    for (const auto& beta : oracle::approximate_roots(derivative(p))) {
      oracle::Complex value = 0;
      for (int k = p.degree(); k >= 0; --k) value = value * beta + oracle::to_complex(p.coeff(k));
      if (!trvs.empty() && std::abs(value - oracle::to_complex(trvs[0].value)) < 1e-6) continue;
      const GaussianRational near(BigRational(value.real()), BigRational(value.imag()));
      const auto sizes = oracle::cluster_sizes(oracle::approximate_roots(p - Poly::constant(near)), 1e-3);
      EXPECT_EQ(sizes.front(), 1) << p.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 40);
}
