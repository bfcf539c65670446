#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullgb/grid.hpp"
#include "nullgb/reduction.hpp"

namespace nullgb {

/// One axis of a multiset grid: distinct points with positive multiplicities.
struct GridAxis {
  std::vector<Scalar> points;
  std::vector<unsigned> psi;  // parallel to points
};

/// Axes (S_k, psi_k). Points are canonical and sorted; psi >= 1 is enforced.
class MultisetGrid {
 public:
  MultisetGrid(RingSpec ring, std::vector<GridAxis> axes);
  /// Every axis is `points` with multiplicity one.
  static MultisetGrid uniform(RingSpec ring, std::vector<std::vector<Scalar>> sets);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return axes_.size(); }
  const std::vector<GridAxis>& axes() const noexcept { return axes_; }
  const std::vector<std::vector<Scalar>>& sets() const noexcept { return sets_; }

  unsigned multiplicity(std::size_t k, const Scalar& u) const;
  /// prod_{u in S_k} (x_k - u)^{psi_k(u)}.
  const Poly& axis_poly(std::size_t k) const { return g_[k]; }
  /// Sum of psi_k over S_k, i.e. deg g_k.
  unsigned axis_degree(std::size_t k) const;
  /// Axes satisfying Condition (D).
  bool condition_d() const;

 private:
  RingSpec ring_;
  std::vector<GridAxis> axes_;
  std::vector<std::vector<Scalar>> sets_;
  std::vector<Poly> g_;
};

/// A multiset grid with puncture sets E_k inside S_k.
class PuncturedGrid {
 public:
  PuncturedGrid(MultisetGrid base, std::vector<std::vector<Scalar>> puncture);

  const MultisetGrid& base() const noexcept { return base_; }
  const std::vector<std::vector<Scalar>>& puncture() const noexcept { return e_; }
  std::size_t nvars() const noexcept { return base_.nvars(); }
  bool in_puncture(const Point& a) const;

  /// prod_{u in E_k} (x_k - u)^{psi_k(u)}.
  Poly puncture_poly(std::size_t k) const;
  /// g_k / h_k = prod_{u in S_k - E_k} (x_k - u)^{psi_k(u)}.
  Poly outer_poly(std::size_t k) const;
  /// prod_k g_k / h_k.
  Poly outer_product() const;
  /// Sum of psi_k over S_k - E_k.
  unsigned outer_degree(std::size_t k) const;
  /// Grid restricted to the puncture sets, with inherited multiplicities.
  MultisetGrid puncture_grid() const;

 private:
  MultisetGrid base_;
  std::vector<std::vector<Scalar>> e_;
};

enum class Verdict { yes, no, inapplicable };
std::string_view verdict_name(Verdict v) noexcept;

/// The generators prod_k g_k^{alpha_k} with |alpha| = t, labelled by alpha.
MonicFamily power_basis(const MultisetGrid& grid, unsigned t);
/// The same family wrapped as a certified basis (Groebner by construction under Condition (D);
/// throws inapplicable otherwise).
CertifiedBasis certified_power_basis(const MultisetGrid& grid, unsigned t);

/// Membership in I_t by vanishing of shifted coefficients at every grid point.
Verdict in_power_ideal(const Poly& f, const MultisetGrid& grid, unsigned t);

struct DegreeReport {
  Degree deg_f = neg_inf_degree;
  Degree deg_eta = neg_inf_degree;
  Int bound;                  // (t-1) * max_m outer_degree(m) + sum_k outer_degree(k)
  std::optional<Point> nonvanishing_at;
  bool applies = false;       // f is nonzero somewhere on the grid
  bool holds = false;         // deg f >= deg eta >= bound (only meaningful when applies)
};

/// f = sum quotients * basis + remainder together with its audit.
struct Certificate {
  MonicFamily basis;
  std::string basis_kind;  // "I_t" or "mixed"
  unsigned t = 0;
  Poly f;
  std::vector<Poly> quotients;
  Poly remainder;
  OutcomeChecks checks;
  bool support_ok = false;
  std::optional<DegreeReport> degree_report;
};

/// Zero-remainder certificate for a member of I_t; throws not_member or inapplicable.
Certificate power_ideal_certificate(const Poly& f, const MultisetGrid& grid, unsigned t);
/// The unique reduced representative of f modulo I_t.
Poly power_ideal_normal_form(const Poly& f, const MultisetGrid& grid, unsigned t);

/// Vanishing conditions at level t-1 at every grid point off the puncture.
Verdict punctured_membership(const Poly& f, const PuncturedGrid& pgrid, unsigned t);

struct PuncturedReport {
  Poly eta;       // normal form of f modulo I_t
  Poly divisor;   // prod_k g_k / h_k
  Poly cofactor;  // eta = cofactor * divisor
  DegreeReport degrees;
};

/// Throws not_member, inapplicable, or divisibility_failure (internal inconsistency).
PuncturedReport punctured_analysis(const Poly& f, const PuncturedGrid& pgrid, unsigned t);

/// Members phi(alpha) for |alpha| = t (plain products) and |alpha| = t-1 (times prod g/h).
MonicFamily mixed_basis(const PuncturedGrid& pgrid, unsigned t);
/// Level t-1 off the puncture, level t-2 on it.
Verdict mixed_membership(const Poly& f, const PuncturedGrid& pgrid, unsigned t);
Certificate mixed_decompose(const Poly& f, const PuncturedGrid& pgrid, unsigned t);

struct ExtraDegree {
  Int value;
  std::size_t axis = 0;  // the minimizing l
  Poly witness;          // g_l^{t-1} prod g/h
};

/// Least degree of a member of the mixed ideal outside I_t, with a witness attaining it.
ExtraDegree min_extra_degree(const PuncturedGrid& pgrid, unsigned t);

}  // namespace nullgb
