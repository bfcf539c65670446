#include "nullgb/vanishing.hpp"

namespace nullgb {

VanishingSpec::VanishingSpec(RingSpec ring, std::vector<std::vector<Scalar>> sets, BMap b)
    : ring_(std::move(ring)), b_(std::move(b)) {
  for (auto& s : sets) sets_.push_back(normalize_set(ring_, std::move(s)));
  BMap canon;
  for (auto& [a, gens] : b_) {
    Point p = a;
    for (auto& x : p) x = RingElement(ring_, x).value();
    canon[p] = gens;
  }
  b_ = std::move(canon);
  const std::size_t n = sets_.size();
  for_each_point(std::span<const std::vector<Scalar>>(sets_), [&](const Point& a) {
    auto it = b_.find(a);
    if (it == b_.end())
      throw Error(Errc::invalid_argument, "no generator set for grid point " + point_to_string(ring_, a));
    if (!upset_complement_is_finite(it->second, n))
      throw Error(Errc::infinite_complement, "B at " + point_to_string(ring_, a) + " = " + to_string(it->second));
  });
}

const MonomialSet& VanishingSpec::generators_at(const Point& a) const {
  auto it = b_.find(a);
  if (it == b_.end()) throw Error(Errc::invalid_argument, "point " + point_to_string(ring_, a) + " is not on the grid");
  return it->second;
}

bool VanishingSpec::empty_grid() const noexcept {
  for (const auto& s : sets_)
    if (s.empty()) return true;
  return false;
}

bool q_membership(const Poly& f, const VanishingSpec& spec) {
  if (!(f.ring() == spec.ring())) throw Error(Errc::ring_mismatch, "polynomial and spec differ in ring");
  if (f.nvars() != spec.nvars()) throw Error(Errc::arity_mismatch, "polynomial and spec differ in arity");
  return all_points(std::span<const std::vector<Scalar>>(spec.sets()), [&](const Point& a) {
    const MonomialSet& gens = spec.generators_at(a);
    const Poly shifted = taylor_shift(f, a);
    for (const auto& [alpha, c] : shifted.terms())
      if (!in_upset(alpha, gens)) return false;
    return true;
  });
}

Int grid_complement_total(const VanishingSpec& spec) {
  Int total = 0;
  for_each_point(std::span<const std::vector<Scalar>>(spec.sets()), [&](const Point& a) {
    total += enumerate_complement(spec.generators_at(a), spec.nvars()).size();
  });
  return total;
}

Int leading_complement_size(const MonicFamily& family) {
  return Int(enumerate_complement(family.leading_exponents(), family.nvars()).size());
}

CertReport certify_by_staircase_count(const VanishingSpec& spec, const MonicFamily& family) {
  if (!(family.ring() == spec.ring()) || family.nvars() != spec.nvars())
    throw Error(Errc::ring_mismatch, "family and spec live in different polynomial rings");
  for (const auto& m : family)
    if (!q_membership(m.poly, spec))
      throw Error(Errc::not_in_q, "family member " + m.label + " = " + m.poly.to_string() + " is not in Q");
  CertReport report;
  report.empty_grid = spec.empty_grid();
  bool all_d = true;
  for (const auto& s : spec.sets()) {
    bool d = check_condition(spec.ring(), s, Condition::D);
    report.condition_d.push_back(d);
    all_d = all_d && d;
  }
  report.zeta1 = grid_complement_total(spec);
  if (upset_complement_is_finite(family.leading_exponents(), family.nvars()))
    report.zeta2 = leading_complement_size(family);
  if (!all_d) {
    report.verdict = CertVerdict::inapplicable;
    return report;
  }
  if (report.zeta2 && report.zeta1 > *report.zeta2)
    throw Error(Errc::internal, "staircase counts violate zeta1 <= zeta2 under Condition (D)");
  if (report.zeta2 && *report.zeta2 == report.zeta1) {
    report.verdict = CertVerdict::groebner;
    report.basis = CertifiedBasisFactory::make(family, CertifiedBasis::Source::staircase_count);
  } else {
    report.verdict = CertVerdict::not_groebner;
  }
  return report;
}

ReductionOutcome decompose_in_vanishing_ideal(const Poly& f, const VanishingSpec& spec, const MonicFamily& family) {
  CertReport report = certify_by_staircase_count(spec, family);
  if (report.verdict != CertVerdict::groebner)
    throw Error(Errc::not_certified, "staircase counts do not certify the family");
  if (!q_membership(f, spec)) throw Error(Errc::not_in_q, f.to_string() + " is not in Q");
  ReductionOutcome out = reduce(f, family);
  if (!out.remainder.is_zero())
    throw Error(Errc::nonzero_remainder, "member of Q left remainder " + out.remainder.to_string());
  if (!f.is_zero() && maximal_support_refutation(f, family))
    throw Error(Errc::internal, "maximal support exponent above no leading exponent");
  return out;
}

std::pair<MonicFamily, VanishingSpec> build_epsilon_family(
    const RingSpec& ring, const std::vector<std::vector<Scalar>>& sets,
    const std::vector<std::vector<std::vector<unsigned>>>& eps) {
  const std::size_t n = sets.size();
  // Indices into eps follow the order the caller gave, so keep the raw sets for lookup.
  for (const auto& row : eps) {
    if (row.size() != n) throw Error(Errc::arity_mismatch, "epsilon needs one row per axis");
    for (std::size_t i = 0; i < n; ++i)
      if (row[i].size() != sets[i].size()) throw Error(Errc::arity_mismatch, "epsilon row length differs from |S_i|");
  }
  for (const auto& s : sets) {
    auto canon = normalize_set(ring, s);
    if (canon.size() != s.size()) throw Error(Errc::invalid_argument, "grid sets must not repeat elements");
  }
  MonicFamily family(ring, n);
  for (std::size_t l = 0; l < eps.size(); ++l) {
    Poly g = Poly::constant(ring, n, ring.one());
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> roots;
      std::vector<unsigned> mult;
      for (std::size_t j = 0; j < sets[i].size(); ++j) {
        if (eps[l][i][j] == 0) continue;
        roots.push_back(RingElement(ring, sets[i][j]).value());
        mult.push_back(eps[l][i][j]);
      }
      g *= root_product(ring, n, i, roots, mult);
    }
    family.add(std::move(g), "g" + std::to_string(l + 1));
  }
  VanishingSpec::BMap b;
  std::vector<std::vector<Scalar>> canon_sets;
  for (const auto& s : sets) {
    std::vector<Scalar> c;
    for (const auto& x : s) c.push_back(RingElement(ring, x).value());
    canon_sets.push_back(std::move(c));
  }
  // Walk index tuples rather than values so eps lookups stay positional.
  std::vector<std::vector<Scalar>> index_sets;
  for (const auto& s : sets) {
    std::vector<Scalar> idx;
    for (std::size_t j = 0; j < s.size(); ++j) idx.emplace_back(static_cast<long long>(j));
    index_sets.push_back(std::move(idx));
  }
  for_each_point(std::span<const std::vector<Scalar>>(index_sets), [&](const Point& ip) {
    Point a(n);
    MonomialSet gens;
    for (std::size_t l = 0; l < eps.size(); ++l) {
      ExpVec e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = eps[l][i][static_cast<std::size_t>(ip[i].num)];
      gens.insert(e);
    }
    for (std::size_t i = 0; i < n; ++i) a[i] = canon_sets[i][static_cast<std::size_t>(ip[i].num)];
    b[a] = std::move(gens);
  });
  return {std::move(family), VanishingSpec(ring, canon_sets, std::move(b))};
}

}  // namespace nullgb
