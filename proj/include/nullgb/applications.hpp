#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullgb/nullstellensatz.hpp"

namespace nullgb {

/// max{ |beta| : sum floor(beta_i / psi_i) <= t-1 } + 1, in closed form.
Int coverage_threshold(std::span<const unsigned> psi, unsigned t);

struct Plane {
  Poly rho;
  unsigned degree = 0;  // must equal deg(rho)
};

struct CoverInstance {
  PuncturedGrid pgrid;
  std::vector<Plane> planes;
  unsigned t = 1;
};

enum class CoverVerdict { holds, hypotheses_unmet, violated };
std::string_view cover_verdict_name(CoverVerdict v) noexcept;

struct CoverReport {
  bool covering_ok = false;                 // every off-puncture point lies on enough planes
  std::optional<Point> uncovered_point;     // first point failing the multiplicity count
  std::optional<Point> witness;             // w with prod rho(w) != 0
  Int degree_sum;                           // sum of plane degrees
  Degree product_degree = neg_inf_degree;   // deg(prod rho)
  Int bound;                                // max over m of the right-hand side
  CoverVerdict verdict = CoverVerdict::hypotheses_unmet;
};

/// Checks both hypotheses literally and, when they hold, the degree inequality.
/// Throws inapplicable when Condition (D) fails.
CoverReport covering_audit(const CoverInstance& inst);

/// (n + t - 1)(q - 1) + 1. Throws unsupported_field for prime powers that are not
/// prime and invalid_argument for other q.
Int jamison_bound(unsigned q, unsigned n, unsigned t);

struct AffineHyperplane {
  std::vector<unsigned> normal;  // first nonzero entry is 1
  unsigned offset = 0;
};

/// Every affine hyperplane of GF(q)^n, normals normalized.
std::vector<AffineHyperplane> affine_hyperplanes(unsigned q, unsigned n);

struct BlockingReport {
  std::size_t hyperplanes = 0;
  std::optional<AffineHyperplane> unblocked;  // first hyperplane meeting Y fewer than t times
  bool blocked = false;
  std::size_t size = 0;
  Int bound;
};

/// Counts, for every affine hyperplane, the points of Y on it with multiplicity.
/// Throws scale_exceeded when the enumeration would be too large.
BlockingReport blocking_set_audit(unsigned q, unsigned n, unsigned t, const std::vector<std::vector<unsigned>>& y);

struct BlockingSearch {
  std::size_t min_size = 0;
  std::vector<std::vector<unsigned>> example;
  std::size_t candidates_checked = 0;
};

/// Smallest multiset of points of GF(q)^n meeting every affine hyperplane at least t times.
/// With `distinct` only sets without repetition are searched.
BlockingSearch min_blocking_multiset(unsigned q, unsigned n, unsigned t, bool distinct = false);
/// Whether some subset (multiset unless distinct) of the given size blocks every hyperplane t times.
bool some_blocking_set_of_size(unsigned q, unsigned n, unsigned t, std::size_t size, bool distinct);

struct AlonFurediReport {
  ExpVec mu;
  Int bound;
  Int actual;
  bool holds = false;
};

/// Picks the feasible mu with the least product (lexicographically least on ties)
/// and counts nonzeros of f on the grid by brute force.
AlonFurediReport alon_furedi(const Poly& f, const std::vector<std::vector<Scalar>>& sets, const ExpVec& beta);

}  // namespace nullgb
