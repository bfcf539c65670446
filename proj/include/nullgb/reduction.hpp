#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nullgb/poly.hpp"

namespace nullgb {

struct FamilyMember {
  Poly poly;
  ExpVec theta;
  std::string label;
};

/// Indexed list of monic polynomials over one ring and arity.
class MonicFamily {
 public:
  MonicFamily(RingSpec ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  /// Appends g; throws not_monic. The label defaults to the index.
  void add(Poly g, std::string label = {});

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const FamilyMember& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// The set D of leading exponents.
  MonomialSet leading_exponents() const;

 private:
  RingSpec ring_;
  std::size_t nvars_;
  std::vector<FamilyMember> members_;
};

struct ReductionOutcome {
  std::vector<Poly> quotients;  // parallel to the family
  Poly remainder;
  std::size_t steps = 0;
};

/// Division: repeatedly cancels the grlex-greatest reducible term using the
/// lowest-index member whose leading exponent lies below it.
ReductionOutcome reduce(const Poly& f, const MonicFamily& family);

struct OutcomeChecks {
  bool identity = false;              // f = sum p*g + r
  bool support = false;               // supp(p) + supp(g) inside the downset of supp(f)
  bool remainder_reduced = false;     // no theta below any remainder exponent
  bool remainder_in_downset = false;  // supp(r) inside the downset of supp(f)
  bool all() const { return identity && support && remainder_reduced && remainder_in_downset; }
};

/// Re-checks an outcome from scratch, without trusting `reduce`.
OutcomeChecks check_outcome(const Poly& f, const MonicFamily& family, const std::vector<Poly>& quotients,
                            const Poly& remainder);

/// True iff supp(p) + supp(g) lies in the downset of supp(f), tested by predicate.
bool support_contained(const Poly& p, const Poly& g, const MonomialSet& max_supp_f);

/// x^(beta - a^b) f - x^(alpha - a^b) g for monic f, g with witnesses alpha, beta.
Poly s_polynomial(const Poly& f, const Poly& g);

/// Sufficient test: every S-polynomial reduces to zero with support containment.
/// false means inconclusive, never "not a Groebner basis".
bool buchberger_certifies(const MonicFamily& family);

/// Some beta in max(supp f) lying above no leading exponent, if any.
/// Such a beta shows f is outside every ideal the family is a Groebner basis of.
std::optional<ExpVec> maximal_support_refutation(const Poly& f, const MonicFamily& family);

/// A family carrying proof that it is a Groebner basis of the ideal it generates
/// (or of a stated ideal Q containing it).
class CertifiedBasis {
 public:
  enum class Source { buchberger, staircase_count, construction };

  const MonicFamily& family() const noexcept { return family_; }
  Source source() const noexcept { return source_; }

  /// Runs the S-polynomial test; nullopt when it is inconclusive.
  static std::optional<CertifiedBasis> by_buchberger(MonicFamily family);

 private:
  CertifiedBasis(MonicFamily family, Source source) : family_(std::move(family)), source_(source) {}
  friend class CertifiedBasisFactory;

  MonicFamily family_;
  Source source_;
};

/// Restricted constructor for certificates established elsewhere in the library
/// (staircase counting, or families whose Groebner property is structural).
class CertifiedBasisFactory {
 public:
  static CertifiedBasis make(MonicFamily family, CertifiedBasis::Source source) {
    return CertifiedBasis(std::move(family), source);
  }
};

/// The unique remainder modulo a certified basis.
Poly normal_form(const Poly& f, const CertifiedBasis& basis);
/// Certifies via the S-polynomial test first; throws uncertified_basis when inconclusive.
Poly normal_form(const Poly& f, const MonicFamily& family);

}  // namespace nullgb
