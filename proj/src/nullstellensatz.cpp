#include "nullgb/nullstellensatz.hpp"

#include <algorithm>

namespace nullgb {

MultisetGrid::MultisetGrid(RingSpec ring, std::vector<GridAxis> axes) : ring_(std::move(ring)) {
  const std::size_t n = axes.size();
  for (auto& ax : axes) {
    if (ax.points.size() != ax.psi.size())
      throw Error(Errc::invalid_argument, "each grid point needs exactly one multiplicity");
    std::vector<std::pair<Scalar, unsigned>> rows;
    for (std::size_t j = 0; j < ax.points.size(); ++j) {
      if (ax.psi[j] == 0)
        throw Error(Errc::non_positive_multiplicity, "multiplicity of " + ring_.format(ax.points[j]) + " is 0");
      rows.emplace_back(RingElement(ring_, ax.points[j]).value(), ax.psi[j]);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
    for (std::size_t j = 1; j < rows.size(); ++j)
      if (rows[j].first == rows[j - 1].first)
        throw Error(Errc::invalid_argument, "repeated grid point " + ring_.format(rows[j].first));
    GridAxis canon;
    for (auto& [u, m] : rows) {
      canon.points.push_back(u);
      canon.psi.push_back(m);
    }
    axes_.push_back(std::move(canon));
  }
  for (std::size_t k = 0; k < n; ++k) {
    sets_.push_back(axes_[k].points);
    g_.push_back(root_product(ring_, n, k, axes_[k].points, axes_[k].psi));
  }
}

MultisetGrid MultisetGrid::uniform(RingSpec ring, std::vector<std::vector<Scalar>> sets) {
  std::vector<GridAxis> axes;
  for (auto& s : sets) {
    GridAxis ax;
    ax.psi.assign(s.size(), 1);
    ax.points = std::move(s);
    axes.push_back(std::move(ax));
  }
  return MultisetGrid(std::move(ring), std::move(axes));
}

unsigned MultisetGrid::multiplicity(std::size_t k, const Scalar& u) const {
  const auto& ax = axes_.at(k);
  for (std::size_t j = 0; j < ax.points.size(); ++j)
    if (ax.points[j] == u) return ax.psi[j];
  throw Error(Errc::invalid_argument, ring_.format(u) + " is not in S_" + std::to_string(k + 1));
}

unsigned MultisetGrid::axis_degree(std::size_t k) const {
  unsigned d = 0;
  for (unsigned m : axes_.at(k).psi) d += m;
  return d;
}

bool MultisetGrid::condition_d() const {
  return std::all_of(sets_.begin(), sets_.end(),
                     [&](const std::vector<Scalar>& s) { return check_condition(ring_, s, Condition::D); });
}

PuncturedGrid::PuncturedGrid(MultisetGrid base, std::vector<std::vector<Scalar>> puncture) : base_(std::move(base)) {
  if (puncture.size() != base_.nvars()) throw Error(Errc::arity_mismatch, "need one puncture set per axis");
  for (std::size_t k = 0; k < puncture.size(); ++k) {
    auto e = normalize_set(base_.ring(), std::move(puncture[k]));
    for (const auto& u : e)
      if (!contains(base_.sets()[k], u))
        throw Error(Errc::invalid_argument, "puncture point " + base_.ring().format(u) + " is not in S_" + std::to_string(k + 1));
    e_.push_back(std::move(e));
  }
}

bool PuncturedGrid::in_puncture(const Point& a) const {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!contains(e_[k], a[k])) return false;
  return true;
}

Poly PuncturedGrid::puncture_poly(std::size_t k) const {
  std::vector<unsigned> m;
  for (const auto& u : e_.at(k)) m.push_back(base_.multiplicity(k, u));
  return root_product(base_.ring(), nvars(), k, e_[k], m);
}

Poly PuncturedGrid::outer_poly(std::size_t k) const {
  std::vector<Scalar> roots;
  std::vector<unsigned> m;
  const auto& ax = base_.axes().at(k);
  for (std::size_t j = 0; j < ax.points.size(); ++j) {
    if (contains(e_[k], ax.points[j])) continue;
    roots.push_back(ax.points[j]);
    m.push_back(ax.psi[j]);
  }
  return root_product(base_.ring(), nvars(), k, roots, m);
}

Poly PuncturedGrid::outer_product() const {
  Poly p = Poly::constant(base_.ring(), nvars(), base_.ring().one());
  for (std::size_t k = 0; k < nvars(); ++k) p *= outer_poly(k);
  return p;
}

unsigned PuncturedGrid::outer_degree(std::size_t k) const {
  unsigned d = 0;
  const auto& ax = base_.axes().at(k);
  for (std::size_t j = 0; j < ax.points.size(); ++j)
    if (!contains(e_[k], ax.points[j])) d += ax.psi[j];
  return d;
}

MultisetGrid PuncturedGrid::puncture_grid() const {
  std::vector<GridAxis> axes;
  for (std::size_t k = 0; k < nvars(); ++k) {
    GridAxis ax;
    for (const auto& u : e_[k]) {
      ax.points.push_back(u);
      ax.psi.push_back(base_.multiplicity(k, u));
    }
    axes.push_back(std::move(ax));
  }
  return MultisetGrid(base_.ring(), std::move(axes));
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

void check_poly(const Poly& f, const MultisetGrid& grid) {
  if (!(f.ring() == grid.ring())) throw Error(Errc::ring_mismatch, f.ring().to_string() + " vs " + grid.ring().to_string());
  if (f.nvars() != grid.nvars()) throw Error(Errc::arity_mismatch, "polynomial and grid differ in arity");
}

/// Every coefficient of f(x + a) at beta with sum floor(beta_i / psi_i(a_i)) <= level is zero.
/// Shifts one axis at a time and drops exponents whose partial floor sum already exceeds level,
/// since later axes cannot lower it.
bool vanishes_to_level(const Poly& f, const MultisetGrid& grid, const Point& a, long level) {
  if (level < 0) return true;
  const auto& ring = f.ring();
  std::vector<long> scale(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) scale[k] = grid.multiplicity(k, a[k]);
  Poly cur = f;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto partial = [&](const ExpVec& e) {
      long s = 0;
      for (std::size_t i = 0; i <= k; ++i) s += e[i] / scale[i];
      return s;
    };
    Poly next(ring, f.nvars());
    for (const auto& [gamma, c] : cur.terms()) {
      if (ring.is_zero(a[k])) {
        if (partial(gamma) <= level) next.add_term(gamma, c);
        continue;
      }
      // (x_k + a_k)^g = sum_j binom(g, j) a_k^(g-j) x_k^j
      const unsigned g = gamma[k];
      std::vector<Scalar> powers{ring.one()};
      for (unsigned j = 1; j <= g; ++j) powers.push_back(ring.mul(powers.back(), a[k]));
      ExpVec beta = gamma;
      Int binom = 1;
      for (unsigned j = 0; j <= g; ++j) {
        if (j > 0) binom = binom * (g - j + 1) / j;
        beta[k] = static_cast<ExpVec::value_type>(j);
        if (partial(beta) > level) break;
        next.add_term(beta, ring.mul(c, ring.mul(ring.from_int(binom), powers[g - j])));
      }
    }
    cur = std::move(next);
    if (cur.is_zero()) return true;
  }
  return cur.is_zero();
}

std::span<const std::vector<Scalar>> grid_sets(const MultisetGrid& grid) { return grid.sets(); }

Certificate assemble(const Poly& f, MonicFamily basis, std::string kind, unsigned t) {
  ReductionOutcome r = reduce(f, basis);
  if (!r.remainder.is_zero())
    throw Error(Errc::nonzero_remainder, "member left remainder " + r.remainder.to_string());
  Certificate cert{std::move(basis), std::move(kind), t, f, std::move(r.quotients), std::move(r.remainder), {}, false, {}};
  cert.checks = check_outcome(cert.f, cert.basis, cert.quotients, cert.remainder);
  // Every maximal exponent of a member must sit above some leading exponent.
  bool covered = cert.f.is_zero() || !maximal_support_refutation(cert.f, cert.basis);
  cert.support_ok = cert.checks.all() && covered;
  return cert;
}

}  // namespace

MonicFamily power_basis(const MultisetGrid& grid, unsigned t) {
  const std::size_t n = grid.nvars();
  MonicFamily family(grid.ring(), n);
  std::vector<Poly> gs;
  for (std::size_t k = 0; k < n; ++k) gs.push_back(grid.axis_poly(k));
  for (const auto& alpha : compositions(n, t)) {
    if (n == 0) {
      family.add(Poly::constant(grid.ring(), 0, grid.ring().one()), "()");
      continue;
    }
    auto [p, w] = monic_power_product(gs, alpha);
    family.add(std::move(p), alpha.to_string());
  }
  return family;
}

CertifiedBasis certified_power_basis(const MultisetGrid& grid, unsigned t) {
  // The construction is only known to give a Groebner basis under Condition (D).
  if (!grid.condition_d()) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  return CertifiedBasisFactory::make(power_basis(grid, t), CertifiedBasis::Source::construction);
}

Verdict in_power_ideal(const Poly& f, const MultisetGrid& grid, unsigned t) {
  check_poly(f, grid);
  if (!grid.condition_d()) return Verdict::inapplicable;
  bool ok = all_points(grid_sets(grid), [&](const Point& a) { return vanishes_to_level(f, grid, a, long(t) - 1); });
  return ok ? Verdict::yes : Verdict::no;
}

Certificate power_ideal_certificate(const Poly& f, const MultisetGrid& grid, unsigned t) {
  Verdict v = in_power_ideal(f, grid, t);
  if (v == Verdict::inapplicable) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  if (v == Verdict::no) throw Error(Errc::not_member, f.to_string() + " is not in I_" + std::to_string(t));
  return assemble(f, power_basis(grid, t), "I_t", t);
}

Poly power_ideal_normal_form(const Poly& f, const MultisetGrid& grid, unsigned t) {
  check_poly(f, grid);
  return normal_form(f, certified_power_basis(grid, t));
}

Verdict punctured_membership(const Poly& f, const PuncturedGrid& pgrid, unsigned t) {
  const auto& grid = pgrid.base();
  check_poly(f, grid);
  if (!grid.condition_d()) return Verdict::inapplicable;
  bool ok = all_points(grid_sets(grid), [&](const Point& a) {
    return pgrid.in_puncture(a) || vanishes_to_level(f, grid, a, long(t) - 1);
  });
  return ok ? Verdict::yes : Verdict::no;
}

namespace {
Int punctured_bound(const PuncturedGrid& pgrid, unsigned t) {
  unsigned widest = 0;
  Int total = 0;
  for (std::size_t k = 0; k < pgrid.nvars(); ++k) {
    widest = std::max(widest, pgrid.outer_degree(k));
    total += pgrid.outer_degree(k);
  }
  return Int(t - 1) * widest + total;
}
}  // namespace

PuncturedReport punctured_analysis(const Poly& f, const PuncturedGrid& pgrid, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "punctured analysis needs t >= 1");
  Verdict v = punctured_membership(f, pgrid, t);
  if (v == Verdict::inapplicable) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  if (v == Verdict::no) throw Error(Errc::not_member, f.to_string() + " is not in the punctured intersection");
  const auto& grid = pgrid.base();
  PuncturedReport rep;
  rep.eta = power_ideal_normal_form(f, grid, t);
  rep.divisor = pgrid.outer_product();
  auto q = divide_exact(rep.eta, rep.divisor);
  if (!q) throw Error(Errc::divisibility_failure, rep.divisor.to_string() + " does not divide " + rep.eta.to_string());
  rep.cofactor = std::move(*q);
  DegreeReport& d = rep.degrees;
  d.deg_f = f.degree();
  d.deg_eta = rep.eta.degree();
  d.bound = punctured_bound(pgrid, t);
  all_points(grid_sets(grid), [&](const Point& w) {
    if (grid.ring().is_zero(evaluate(f, w))) return true;
    d.nonvanishing_at = w;
    return false;
  });
  d.applies = d.nonvanishing_at.has_value();
  d.holds = d.applies && d.deg_f >= d.deg_eta && Int(d.deg_eta) >= d.bound;
  return rep;
}

MonicFamily mixed_basis(const PuncturedGrid& pgrid, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "mixed basis needs t >= 1");
  const auto& grid = pgrid.base();
  const std::size_t n = grid.nvars();
  MonicFamily family(grid.ring(), n);
  for (const auto& m : power_basis(grid, t)) family.add(m.poly, m.label);
  const Poly outer = pgrid.outer_product();
  for (const auto& m : power_basis(grid, t - 1)) family.add(m.poly * outer, m.label + "*g/h");
  return family;
}

Verdict mixed_membership(const Poly& f, const PuncturedGrid& pgrid, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "mixed membership needs t >= 1");
  const auto& grid = pgrid.base();
  check_poly(f, grid);
  if (!grid.condition_d()) return Verdict::inapplicable;
  bool ok = all_points(grid_sets(grid), [&](const Point& a) {
    long level = pgrid.in_puncture(a) ? long(t) - 2 : long(t) - 1;
    return vanishes_to_level(f, grid, a, level);
  });
  return ok ? Verdict::yes : Verdict::no;
}

Certificate mixed_decompose(const Poly& f, const PuncturedGrid& pgrid, unsigned t) {
  Verdict v = mixed_membership(f, pgrid, t);
  if (v == Verdict::inapplicable) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  if (v == Verdict::no) throw Error(Errc::not_member, f.to_string() + " is not in the mixed ideal");
  return assemble(f, mixed_basis(pgrid, t), "mixed", t);
}

ExtraDegree min_extra_degree(const PuncturedGrid& pgrid, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "min extra degree needs t >= 1");
  const auto& grid = pgrid.base();
  if (!grid.condition_d()) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  const std::size_t n = grid.nvars();
  if (n == 0) throw Error(Errc::invalid_argument, "min extra degree needs n >= 1");
  for (const auto& e : pgrid.puncture())
    if (e.empty()) throw Error(Errc::empty_puncture, "some puncture set is empty");
  ExtraDegree out;
  unsigned e = grid.axis_degree(0);
  for (std::size_t k = 1; k < n; ++k)
    if (grid.axis_degree(k) < e) {
      e = grid.axis_degree(k);
      out.axis = k;
    }
  Int outer = 0;
  for (std::size_t k = 0; k < n; ++k) outer += pgrid.outer_degree(k);
  out.value = Int(t - 1) * e + outer;
  out.witness = grid.axis_poly(out.axis).pow(t - 1) * pgrid.outer_product();
  return out;
}

}  // namespace nullgb
