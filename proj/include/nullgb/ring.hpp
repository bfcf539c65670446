#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nullgb/error.hpp"

namespace nullgb {

using Int = boost::multiprecision::cpp_int;

/// Raw coefficient storage. For every ring except QQ the denominator is 1;
/// the owning RingSpec keeps the value canonical.
struct Scalar {
  Int num{0};
  Int den{1};

  Scalar() = default;
  Scalar(Int n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long n) : num(n) {}       // NOLINT(google-explicit-constructor)
  Scalar(Int n, Int d) : num(std::move(n)), den(std::move(d)) {}

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Numeric order on canonical representatives (denominators are positive).
bool scalar_less(const Scalar& a, const Scalar& b);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return scalar_less(a, b); }
};

enum class RingKind { integers, rationals, integers_mod, prime_field };

/// Descriptor of one of ZZ, QQ, ZZ/m (m >= 2) or GF(p) (p prime).
class RingSpec {
 public:
  RingSpec() = default;  // ZZ

  static RingSpec integers() { return RingSpec(); }
  static RingSpec rationals();
  static RingSpec integers_mod(const Int& m);
  static RingSpec prime_field(const Int& p);

  /// Accepts `ZZ`, `QQ`, `ZZ/<m>`, `GF(<p>)`.
  static RingSpec parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  const Int& modulus() const noexcept { return modulus_; }
  bool is_modular() const noexcept {
    return kind_ == RingKind::integers_mod || kind_ == RingKind::prime_field;
  }
  bool is_integral_domain() const noexcept { return kind_ != RingKind::integers_mod; }

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

  // Canonical-form arithmetic on raw scalars owned by this ring.
  Scalar zero() const { return Scalar(); }
  Scalar one() const;
  Scalar from_int(const Int& value) const;
  Scalar from_fraction(const Int& num, const Int& den) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar pow(const Scalar& a, unsigned e) const;
  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }
  bool is_canonical(const Scalar& a) const;

  bool is_unit(const Scalar& a) const;
  bool is_zero_divisor(const Scalar& a) const;

  /// Parses `[-+]digits` or, over QQ, `[-+]digits/digits`.
  Scalar parse_element(std::string_view text) const;
  std::string format(const Scalar& a) const;

 private:
  RingSpec(RingKind kind, Int modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  RingKind kind_ = RingKind::integers;
  Int modulus_{0};
};

/// A ring element that knows which ring it lives in.
class RingElement {
 public:
  RingElement(RingSpec ring, Scalar value);
  static RingElement parse(const RingSpec& ring, std::string_view text);

  const RingSpec& ring() const noexcept { return ring_; }
  const Scalar& value() const noexcept { return value_; }
  std::string to_string() const { return ring_.format(value_); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  RingSpec ring_;
  Scalar value_;
};

enum class ArithOp { add, sub, mul, neg };

/// Exact arithmetic; `b` is ignored for `neg`. Mixed rings raise ring_mismatch.
RingElement arith(ArithOp op, const RingElement& a, const RingElement& b);

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);

bool is_unit(const RingElement& a);
bool is_zero_divisor(const RingElement& a);

enum class Condition { D, F };

/// Condition D: pairwise differences are not zero divisors.
/// Condition F: pairwise differences are units.
bool check_condition(std::span<const RingElement> set, Condition mode);
bool check_condition(const RingSpec& ring, std::span<const Scalar> set, Condition mode);

/// Exact binomial coefficient in ZZ (zero when k > n).
Int binomial(unsigned n, unsigned k);

bool is_prime(const Int& n);

}  // namespace nullgb
