#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nullgb/exponents.hpp"
#include "nullgb/ring.hpp"

namespace nullgb {

/// Total degree; the zero polynomial has degree `neg_inf_degree`.
using Degree = std::int64_t;
inline constexpr Degree neg_inf_degree = std::numeric_limits<Degree>::min();

/// Sparse polynomial in R[x1..xn]. Terms are kept in graded-lex descending
/// order and no stored coefficient is zero, so equality is structural.
class Poly {
 public:
  using Terms = std::map<ExpVec, Scalar, GrlexGreater>;

  Poly() = default;
  Poly(RingSpec ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  static Poly constant(const RingSpec& ring, std::size_t nvars, const Scalar& c);
  static Poly monomial(const RingSpec& ring, const ExpVec& exp, const Scalar& c);
  /// The variable x_{axis+1}.
  static Poly variable(const RingSpec& ring, std::size_t nvars, std::size_t axis);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const ExpVec& exp) const;
  /// Adds c * x^exp, pruning a resulting zero.
  void add_term(const ExpVec& exp, const Scalar& c);
  /// Adds c * x^shift * g.
  void add_scaled(const Poly& g, const Scalar& c, const ExpVec& shift);

  MonomialSet support() const;
  Degree degree() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const ExpVec& shift) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

  /// Parses sums of products of integers/fractions, `x<i>`, powers and
  /// parenthesised subexpressions, e.g. `3*x1^2*x2 - x3 + 1`.
  /// With nvars unset the arity is the largest variable index used (>= 1).
  static Poly parse(const RingSpec& ring, std::string_view text, std::optional<std::size_t> nvars = {});

 private:
  void check_compatible(const Poly& other) const;

  RingSpec ring_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

enum class PolyOp { add, sub, mul, scale };

/// Exact sparse arithmetic; `scale` multiplies f by the ring element c.
Poly poly_arith(PolyOp op, const Poly& f, const Poly& g);
Poly poly_arith(PolyOp op, const Poly& f, const RingElement& c);

/// Greatest element of the support, carrying coefficient 1.
struct MonicWitness {
  ExpVec theta;
  friend bool operator==(const MonicWitness&, const MonicWitness&) = default;
};

std::optional<MonicWitness> is_monic(const Poly& g);

using Point = std::vector<Scalar>;

/// prod_k binom(gamma_k, alpha_k) u_k^(gamma_k - alpha_k) when alpha <= gamma, else 0.
Scalar phi(const RingSpec& ring, std::span<const Scalar> u, const ExpVec& alpha, const ExpVec& gamma);

/// f(x + u), each coefficient assembled from phi-weighted coefficients of f.
Poly taylor_shift(const Poly& f, std::span<const Scalar> u);
/// The coefficient of x^alpha in f(x + u).
Scalar shifted_coefficient(const Poly& f, std::span<const Scalar> u, const ExpVec& alpha);

Scalar evaluate(const Poly& f, std::span<const Scalar> a);
RingElement evaluate(const Poly& f, std::span<const RingElement> a);

/// prod_{u in S} (x_{axis+1} - u)^{psi(u)}; psi is parallel to S.
Poly root_product(const RingSpec& ring, std::size_t nvars, std::size_t axis, std::span<const Scalar> roots,
                  std::span<const unsigned> multiplicity);

/// prod_k gs[k]^alpha_k for monic g_k in R[x_k]; witness (deg(g_k) alpha_k)_k.
std::pair<Poly, MonicWitness> monic_power_product(std::span<const Poly> gs, const ExpVec& alpha);

/// Exact division by a monic divisor; nullopt if it does not divide.
std::optional<Poly> divide_exact(const Poly& f, const Poly& monic_divisor);

}  // namespace nullgb
