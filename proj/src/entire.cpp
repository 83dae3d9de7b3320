#include "mrange/entire.hpp"

#include <algorithm>

#include "mrange/errors.hpp"

namespace mrange {

EntireFunction EntireFunction::polynomial(Poly p) {
  if (p.degree() < 1) throw DomainError("constant function: the polynomial must have degree >= 1");
  return EntireFunction(PolynomialFunction{std::move(p)});
}

EntireFunction EntireFunction::sin_family(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
  if (a == b) throw DomainError("sin_family requires a != b");
  if (c.is_zero()) throw DomainError("sin_family requires c != 0");
  return EntireFunction(SinFamily{std::move(a), std::move(b), std::move(c), std::move(d)});
}

EntireFunction EntireFunction::exp_poly(GaussianRational v, Poly p, GaussianRational c, GaussianRational d) {
  if (p.is_zero()) throw DomainError("exp_poly requires a nonzero polynomial factor");
  if (p.leading() != GaussianRational(1)) throw DomainError("exp_poly requires a monic polynomial factor");
  if (c.is_zero()) throw DomainError("exp_poly requires c != 0");
  return EntireFunction(ExpPolyFamily{std::move(v), std::move(p), std::move(c), std::move(d)});
}

const Poly& EntireFunction::as_polynomial() const {
  if (const auto* p = std::get_if<PolynomialFunction>(&v_)) return p->p;
  throw DomainError("operation requires a polynomial function");
}

const char* case_label(TheoremCase c) {
  switch (c) {
    case TheoremCase::OmitsValue: return "I";
    case TheoremCase::NoTRV: return "II";
    case TheoremCase::OneTRV: return "III";
    case TheoremCase::TwoTRV: return "IV";
  }
  return "?";
}

namespace {

std::vector<int> distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool all_multiple(const std::vector<int>& multiset) {
  return !multiset.empty() && std::all_of(multiset.begin(), multiset.end(), [](int m) { return m >= 2; });
}

TheoremCase classify(const RamificationProfile& p) {
  if (!p.omitted_values.empty()) return TheoremCase::OmitsValue;
  switch (p.trv_entries.size()) {
    case 0: return TheoremCase::NoTRV;
    case 1: return TheoremCase::OneTRV;
    default: return TheoremCase::TwoTRV;
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::vector<TrvEntry> polynomial_trvs(const Poly& p) {
  std::vector<TrvEntry> out;
  if (p.degree() < 2) return out;
  // A TRV a has multiplicity deg p - #roots(p - a) >= deg p / 2 in D, which
  // exceeds deg D / 2, so its Yun factor in D is linear.
  for (const auto& f : squarefree_decomposition(critical_value_polynomial(p))) {
    if (f.factor.degree() != 1) continue;
    const GaussianRational root = -f.factor.coeff(0) / f.factor.coeff(1);
    const Poly shifted = p - Poly::constant(root);
    const Poly s = squarefree_part(shifted);
    // Every root is multiple iff s^2 divides p - a.
    if (!exact_divide(shifted, s * s)) continue;
    auto multiset = root_multiplicities(shifted);
    out.push_back({root, distinct(multiset), std::move(multiset), false});
  }
  if (out.size() > 1) throw InternalError("polynomial reported more than one totally ramified value");
  return out;
}

RamificationProfile ramification_profile(const EntireFunction& f) {
  RamificationProfile prof;
  std::visit(overloaded{
                 [&](const PolynomialFunction& pf) { prof.trv_entries = polynomial_trvs(pf.p); },
                 [&](const SinFamily& s) {
                   prof.trv_entries.push_back({s.a, {2}, {}, true});
                   prof.trv_entries.push_back({s.b, {2}, {}, true});
                 },
                 [&](const ExpPolyFamily& e) {
                   if (e.p.is_constant()) {
                     prof.omitted_values.push_back(e.v);
                     return;
                   }
                   auto multiset = root_multiplicities(e.p);
                   if (all_multiple(multiset)) prof.trv_entries.push_back({e.v, distinct(multiset), std::move(multiset), false});
                 },
             },
             f.variant());
  prof.theorem_case = classify(prof);
  return prof;
}

PreimageSet preimage_roots(const EntireFunction& f, const GaussianRational& a) {
  auto finite = [](const Poly& q) -> PreimageSet {
    PreimageFinite out;
    out.roots = gaussian_rational_roots(q);
    out.multiplicity_multiset = root_multiplicities(q);
    int found = 0;
    for (const auto& r : out.roots) found += r.multiplicity;
    out.complete = found == q.degree();
    return out;
  };
  return std::visit(overloaded{
                        [&](const PolynomialFunction& pf) -> PreimageSet { return finite(pf.p - Poly::constant(a)); },
                        [&](const SinFamily& s) -> PreimageSet {
                          if (a == s.a || a == s.b) return PreimageInfinitelyManyDouble{};
                          return PreimageInfinitelyManySimple{};
                        },
                        [&](const ExpPolyFamily& e) -> PreimageSet {
                          if (a != e.v) return PreimageInfinitelyManySimple{};
                          if (e.p.is_constant()) return PreimageEmpty{};
                          return finite(e.p);
                        },
                    },
                    f.variant());
}

void validate(const EntireFunction& f) {
  std::visit(overloaded{
                 [](const PolynomialFunction& pf) {
                   if (pf.p.degree() < 1) throw DomainError("constant function");
                 },
                 [](const SinFamily& s) {
                   if (s.a == s.b || s.c.is_zero()) throw DomainError("sin_family premises a != b, c != 0 violated");
                 },
                 [](const ExpPolyFamily& e) {
                   if (e.p.is_zero() || e.p.leading() != GaussianRational(1) || e.c.is_zero())
                     throw DomainError("exp_poly premises violated");
                 },
             },
             f.variant());

  const RamificationProfile prof = ramification_profile(f);
  if (prof.omitted_values.size() > 1) throw InternalError("more than one omitted value");
  if (prof.trv_entries.size() > 2) throw InternalError("more than two totally ramified values");
  if (!prof.omitted_values.empty() && !prof.trv_entries.empty())
    throw InternalError("a function omitting a value cannot have totally ramified values");
  if (f.is_polynomial() && (prof.trv_entries.size() > 1 || !prof.omitted_values.empty()))
    throw InternalError("polynomial profile out of bounds");
  for (const auto& e : prof.trv_entries) {
    if (e.multiplicities.empty()) throw InternalError("totally ramified value without multiplicities");
    for (int m : e.multiplicities)
      if (m < 2) throw InternalError("totally ramified value with a simple preimage");
  }
  if (prof.theorem_case != classify(prof)) throw InternalError("theorem case inconsistent with profile");
}

}  // namespace mrange
