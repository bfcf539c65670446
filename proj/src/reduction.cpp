#include "nullgb/reduction.hpp"

#include <algorithm>

namespace nullgb {

void MonicFamily::add(Poly g, std::string label) {
  if (!(g.ring() == ring_)) throw Error(Errc::ring_mismatch, "family member over " + g.ring().to_string());
  if (g.nvars() != nvars_) throw Error(Errc::arity_mismatch, "family member has wrong arity");
  auto w = is_monic(g);
  if (!w) throw Error(Errc::not_monic, g.to_string());
  if (label.empty()) label = std::to_string(members_.size());
  members_.push_back(FamilyMember{std::move(g), w->theta, std::move(label)});
}

MonomialSet MonicFamily::leading_exponents() const {
  MonomialSet d;
  for (const auto& m : members_) d.insert(m.theta);
  return d;
}

namespace {
void check_family_input(const Poly& f, const MonicFamily& family) {
  if (!(f.ring() == family.ring())) throw Error(Errc::ring_mismatch, f.ring().to_string() + " vs " + family.ring().to_string());
  if (f.nvars() != family.nvars()) throw Error(Errc::arity_mismatch, "polynomial and family differ in arity");
}
}  // namespace

ReductionOutcome reduce(const Poly& f, const MonicFamily& family) {
  check_family_input(f, family);
  const RingSpec& ring = f.ring();
  ReductionOutcome out;
  out.quotients.assign(family.size(), Poly(ring, f.nvars()));
  out.remainder = Poly(ring, f.nvars());
  Poly current = f;
  // Each step touches only exponents below the popped one (componentwise, hence
  // in grlex too), so one descending sweep realizes the greatest-first strategy.
  while (!current.is_zero()) {
    const auto top = current.terms().begin();
    const ExpVec gamma = top->first;
    const Scalar c = top->second;
    std::size_t chosen = family.size();
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (leq(family[i].theta, gamma)) {
        chosen = i;
        break;
      }
    }
    if (chosen == family.size()) {
      out.remainder.add_term(gamma, c);
      current.add_term(gamma, ring.neg(c));
      continue;
    }
    const ExpVec shift = gamma - family[chosen].theta;
    out.quotients[chosen].add_term(shift, c);
    current.add_scaled(family[chosen].poly, ring.neg(c), shift);
    ++out.steps;
  }
  return out;
}

bool support_contained(const Poly& p, const Poly& g, const MonomialSet& max_supp_f) {
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : g.terms())
      if (!in_downset(a + b, max_supp_f)) return false;
  return true;
}

OutcomeChecks check_outcome(const Poly& f, const MonicFamily& family, const std::vector<Poly>& quotients,
                            const Poly& remainder) {
  check_family_input(f, family);
  if (quotients.size() != family.size()) throw Error(Errc::invalid_argument, "one quotient per family member expected");
  OutcomeChecks checks;
  Poly sum = remainder;
  for (std::size_t i = 0; i < family.size(); ++i) sum += quotients[i] * family[i].poly;
  checks.identity = sum == f;

  const MonomialSet top = maximal_elements(f.support());
  checks.support = true;
  for (std::size_t i = 0; i < family.size() && checks.support; ++i)
    checks.support = support_contained(quotients[i], family[i].poly, top);

  checks.remainder_reduced = true;
  checks.remainder_in_downset = true;
  for (const auto& [a, c] : remainder.terms()) {
    for (const auto& m : family)
      if (leq(m.theta, a)) checks.remainder_reduced = false;
    if (!in_downset(a, top)) checks.remainder_in_downset = false;
  }
  return checks;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  auto wf = is_monic(f);
  if (!wf) throw Error(Errc::not_monic, f.to_string());
  auto wg = is_monic(g);
  if (!wg) throw Error(Errc::not_monic, g.to_string());
  const ExpVec m = meet(wf->theta, wg->theta);
  return f.times_monomial(wg->theta - m) - g.times_monomial(wf->theta - m);
}

bool buchberger_certifies(const MonicFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Poly s = s_polynomial(family[i].poly, family[j].poly);
      if (s.is_zero()) continue;
      const ReductionOutcome r = reduce(s, family);
      if (!r.remainder.is_zero()) return false;
      const MonomialSet top = maximal_elements(s.support());
      for (std::size_t k = 0; k < family.size(); ++k)
        if (!support_contained(r.quotients[k], family[k].poly, top)) return false;
    }
  }
  return true;
}

std::optional<ExpVec> maximal_support_refutation(const Poly& f, const MonicFamily& family) {
  check_family_input(f, family);
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "refutation needs a nonzero polynomial");
  std::optional<ExpVec> best;
  for (const auto& beta : maximal_elements(f.support())) {
    bool covered = std::any_of(family.begin(), family.end(), [&](const FamilyMember& m) { return leq(m.theta, beta); });
    if (!covered && (!best || grlex_less(*best, beta))) best = beta;
  }
  return best;
}

std::optional<CertifiedBasis> CertifiedBasis::by_buchberger(MonicFamily family) {
  if (!buchberger_certifies(family)) return std::nullopt;
  return CertifiedBasis(std::move(family), Source::buchberger);
}

Poly normal_form(const Poly& f, const CertifiedBasis& basis) { return reduce(f, basis.family()).remainder; }

Poly normal_form(const Poly& f, const MonicFamily& family) {
  check_family_input(f, family);
  if (!buchberger_certifies(family))
    throw Error(Errc::uncertified_basis, "S-polynomial test is inconclusive; the remainder need not be unique");
  return reduce(f, family).remainder;
}

}  // namespace nullgb
