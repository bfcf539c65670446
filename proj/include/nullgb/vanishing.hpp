#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nullgb/grid.hpp"
#include "nullgb/reduction.hpp"

namespace nullgb {

/// Grid sets S_1..S_n and a generator set B_a for every grid point a. The ideal Q
/// it describes holds the f whose shift to each a has support inside upset(B_a).
class VanishingSpec {
 public:
  using BMap = std::map<Point, MonomialSet, PointLess>;

  /// Validates that every grid point has a B_a with finite complement.
  VanishingSpec(RingSpec ring, std::vector<std::vector<Scalar>> sets, BMap b);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return sets_.size(); }
  const std::vector<std::vector<Scalar>>& sets() const noexcept { return sets_; }
  const BMap& generators() const noexcept { return b_; }
  const MonomialSet& generators_at(const Point& a) const;
  /// Some S_i is empty, so Q is the whole ring (every condition is vacuous).
  bool empty_grid() const noexcept;

 private:
  RingSpec ring_;
  std::vector<std::vector<Scalar>> sets_;
  BMap b_;
};

bool q_membership(const Poly& f, const VanishingSpec& spec);

/// Sum over grid points of |N^n - upset(B_a)|.
Int grid_complement_total(const VanishingSpec& spec);
/// |N^n - upset(D)| for the leading exponents D; throws infinite_complement.
Int leading_complement_size(const MonicFamily& family);

enum class CertVerdict { groebner, not_groebner, inapplicable };

struct CertReport {
  std::vector<bool> condition_d;  // per axis
  Int zeta1;
  std::optional<Int> zeta2;  // unset when the leading staircase is infinite
  CertVerdict verdict = CertVerdict::inapplicable;
  bool empty_grid = false;
  std::optional<CertifiedBasis> basis;  // set iff verdict == groebner
};

/// Under Condition (D) on every axis, a family inside Q is a Groebner basis of Q
/// exactly when the two staircase counts agree. Throws not_in_q if some member lies outside Q.
CertReport certify_by_staircase_count(const VanishingSpec& spec, const MonicFamily& family);

/// Quotients exhibiting f in Q over a certified family, with support containment.
/// Throws not_certified, not_in_q, or nonzero_remainder (an internal inconsistency).
ReductionOutcome decompose_in_vanishing_ideal(const Poly& f, const VanishingSpec& spec, const MonicFamily& family);

/// eps[lambda][i][j] is the exponent of (x_i - S_i[j]) in g(lambda). Returns the family
/// and the VanishingSpec whose B_a collects (eps[lambda][i][index of a_i])_i over lambda.
std::pair<MonicFamily, VanishingSpec> build_epsilon_family(
    const RingSpec& ring, const std::vector<std::vector<Scalar>>& sets,
    const std::vector<std::vector<std::vector<unsigned>>>& eps);

}  // namespace nullgb
