#include "nullgb/ring.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cctype>

namespace nullgb {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::infinite_complement: return "InfiniteComplement";
    case Errc::gamma_exceeds_alpha: return "GammaExceedsAlpha";
    case Errc::not_monic: return "NotMonic";
    case Errc::not_axis_poly: return "NotAxisPoly";
    case Errc::non_positive_multiplicity: return "NonPositiveMultiplicity";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::uncertified_basis: return "UncertifiedBasis";
    case Errc::not_in_q: return "NotInQ";
    case Errc::not_certified: return "NotCertified";
    case Errc::nonzero_remainder: return "NonzeroRemainder";
    case Errc::not_member: return "NotMember";
    case Errc::divisibility_failure: return "DivisibilityFailure";
    case Errc::empty_puncture: return "EmptyPuncture";
    case Errc::inapplicable: return "Inapplicable";
    case Errc::unsupported_field: return "UnsupportedField";
    case Errc::scale_exceeded: return "ScaleExceeded";
    case Errc::support_exceeds_beta: return "SupportExceedsBeta";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

namespace {

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Scalar normalized_fraction(Int num, Int den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Scalar(std::move(num), std::move(den));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_natural(std::string_view s, std::string_view context) {
  if (!all_digits(s))
    throw Error(Errc::parse_error, "expected digits in '" + std::string(context) + "'");
  return Int(std::string(s));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.den == 1 && b.den == 1) return a.num < b.num;
  return a.num * b.den < b.num * a.den;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < 1000000) {
    for (Int d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 32);
}

RingSpec RingSpec::rationals() { return RingSpec(RingKind::rationals, 0); }

RingSpec RingSpec::integers_mod(const Int& m) {
  if (m < 2) throw Error(Errc::invalid_argument, "ZZ/m requires m >= 2");
  return RingSpec(RingKind::integers_mod, m);
}

RingSpec RingSpec::prime_field(const Int& p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "GF(p) requires p prime");
  return RingSpec(RingKind::prime_field, p);
}

RingSpec RingSpec::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "ZZ") return integers();
  if (s == "QQ") return rationals();
  if (s.starts_with("ZZ/")) return integers_mod(parse_natural(trim(s.substr(3)), text));
  if (s.starts_with("GF(") && s.ends_with(")")) {
    std::string_view inner = trim(s.substr(3, s.size() - 4));
    Int p = parse_natural(inner, text);
    if (!is_prime(p)) throw Error(Errc::parse_error, "GF(p) requires p prime: " + std::string(text));
    return prime_field(p);
  }
  throw Error(Errc::parse_error, "unknown ring '" + std::string(text) + "'");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::integers: return "ZZ";
    case RingKind::rationals: return "QQ";
    case RingKind::integers_mod: return "ZZ/" + modulus_.str();
    case RingKind::prime_field: return "GF(" + modulus_.str() + ")";
  }
  return "?";
}

Scalar RingSpec::one() const { return from_int(1); }

Scalar RingSpec::from_int(const Int& value) const {
  if (is_modular()) return Scalar(mod_floor(value, modulus_));
  return Scalar(value);
}

Scalar RingSpec::from_fraction(const Int& num, const Int& den) const {
  if (kind_ == RingKind::rationals) return normalized_fraction(num, den);
  if (den == 1) return from_int(num);
  if (den == -1) return from_int(-num);
  throw Error(Errc::parse_error, "fractions are only elements of QQ");
}

bool RingSpec::is_canonical(const Scalar& a) const {
  if (kind_ == RingKind::rationals)
    return a.den > 0 && boost::multiprecision::gcd(a.num, a.den) == 1 && (a.num != 0 || a.den == 1);
  if (a.den != 1) return false;
  if (is_modular()) return a.num >= 0 && a.num < modulus_;
  return true;
}

Scalar RingSpec::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::integers: return Scalar(a.num + b.num);
    case RingKind::rationals:
      if (a.den == 1 && b.den == 1) return Scalar(a.num + b.num);
      return normalized_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    default: {
      Int r = a.num + b.num;
      if (r >= modulus_) r -= modulus_;
      return Scalar(std::move(r));
    }
  }
}

Scalar RingSpec::sub(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::integers: return Scalar(a.num - b.num);
    case RingKind::rationals:
      if (a.den == 1 && b.den == 1) return Scalar(a.num - b.num);
      return normalized_fraction(a.num * b.den - b.num * a.den, a.den * b.den);
    default: {
      Int r = a.num - b.num;
      if (r < 0) r += modulus_;
      return Scalar(std::move(r));
    }
  }
}

Scalar RingSpec::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::integers: return Scalar(a.num * b.num);
    case RingKind::rationals:
      if (a.den == 1 && b.den == 1) return Scalar(a.num * b.num);
      return normalized_fraction(a.num * b.num, a.den * b.den);
    default: return Scalar(Int((a.num * b.num) % modulus_));
  }
}

Scalar RingSpec::neg(const Scalar& a) const {
  if (is_modular()) return a.num == 0 ? a : Scalar(Int(modulus_ - a.num));
  return Scalar(Int(-a.num), a.den);
}

Scalar RingSpec::pow(const Scalar& a, unsigned e) const {
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool RingSpec::is_unit(const Scalar& a) const {
  switch (kind_) {
    case RingKind::integers: return a.num == 1 || a.num == -1;
    case RingKind::rationals: return a.num != 0;
    default: return boost::multiprecision::gcd(a.num, modulus_) == 1;
  }
}

bool RingSpec::is_zero_divisor(const Scalar& a) const {
  // Zero counts: 0 * 1 = 0 with 1 != 0 in every ring here.
  if (kind_ == RingKind::integers_mod) return boost::multiprecision::gcd(a.num, modulus_) > 1;
  return a.num == 0;
}

Scalar RingSpec::parse_element(std::string_view text) const {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s = trim(s.substr(1));
  }
  Int num;
  Int den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = parse_natural(trim(s.substr(0, slash)), text);
    den = parse_natural(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    if (kind_ != RingKind::rationals && den != 1)
      throw Error(Errc::parse_error, "fraction outside QQ: '" + std::string(text) + "'");
  } else {
    num = parse_natural(s, text);
  }
  if (negative) num = -num;
  return from_fraction(num, den);
}

std::string RingSpec::format(const Scalar& a) const {
  if (a.den == 1) return a.num.str();
  return a.num.str() + "/" + a.den.str();
}

RingElement::RingElement(RingSpec ring, Scalar value) : ring_(std::move(ring)) {
  if (ring_.kind() == RingKind::rationals)
    value_ = ring_.from_fraction(value.num, value.den);
  else if (value.den != 1)
    throw Error(Errc::invalid_argument, "fractions are only elements of QQ");
  else
    value_ = ring_.from_int(value.num);
}

RingElement RingElement::parse(const RingSpec& ring, std::string_view text) {
  return RingElement(ring, ring.parse_element(text));
}

RingElement arith(ArithOp op, const RingElement& a, const RingElement& b) {
  const RingSpec& r = a.ring();
  if (op == ArithOp::neg) return RingElement(r, r.neg(a.value()));
  if (!(a.ring() == b.ring()))
    throw Error(Errc::ring_mismatch, a.ring().to_string() + " vs " + b.ring().to_string());
  switch (op) {
    case ArithOp::add: return RingElement(r, r.add(a.value(), b.value()));
    case ArithOp::sub: return RingElement(r, r.sub(a.value(), b.value()));
    case ArithOp::mul: return RingElement(r, r.mul(a.value(), b.value()));
    case ArithOp::neg: break;
  }
  throw Error(Errc::internal, "unreachable arith op");
}

RingElement operator+(const RingElement& a, const RingElement& b) { return arith(ArithOp::add, a, b); }
RingElement operator-(const RingElement& a, const RingElement& b) { return arith(ArithOp::sub, a, b); }
RingElement operator*(const RingElement& a, const RingElement& b) { return arith(ArithOp::mul, a, b); }
RingElement operator-(const RingElement& a) { return arith(ArithOp::neg, a, a); }

bool is_unit(const RingElement& a) { return a.ring().is_unit(a.value()); }
bool is_zero_divisor(const RingElement& a) { return a.ring().is_zero_divisor(a.value()); }

bool check_condition(const RingSpec& ring, std::span<const Scalar> set, Condition mode) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) continue;
      Scalar diff = ring.sub(set[j], set[i]);
      bool ok = mode == Condition::F ? ring.is_unit(diff) : !ring.is_zero_divisor(diff);
      if (!ok) return false;
    }
  }
  return true;
}

bool check_condition(std::span<const RingElement> set, Condition mode) {
  if (set.empty()) return true;
  const RingSpec& ring = set.front().ring();
  std::vector<Scalar> values;
  values.reserve(set.size());
  for (const auto& e : set) {
    if (!(e.ring() == ring)) throw Error(Errc::ring_mismatch, "mixed rings in condition check");
    values.push_back(e.value());
  }
  return check_condition(ring, values, mode);
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace nullgb
