#include "nullgb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace nullgb {

Poly Poly::constant(const RingSpec& ring, std::size_t nvars, const Scalar& c) {
  Poly p(ring, nvars);
  p.add_term(ExpVec(nvars), c);
  return p;
}

Poly Poly::monomial(const RingSpec& ring, const ExpVec& exp, const Scalar& c) {
  Poly p(ring, exp.size());
  p.add_term(exp, c);
  return p;
}

Poly Poly::variable(const RingSpec& ring, std::size_t nvars, std::size_t axis) {
  if (axis >= nvars) throw Error(Errc::arity_mismatch, "variable index beyond nvars");
  return monomial(ring, ExpVec::unit(nvars, axis), ring.one());
}

Scalar Poly::coeff(const ExpVec& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Scalar() : it->second;
}

void Poly::add_term(const ExpVec& exp, const Scalar& c) {
  if (exp.size() != nvars_) throw Error(Errc::arity_mismatch, "term length differs from nvars");
  if (ring_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (inserted) return;
  it->second = ring_.add(it->second, c);
  if (ring_.is_zero(it->second)) terms_.erase(it);
}

void Poly::add_scaled(const Poly& g, const Scalar& c, const ExpVec& shift) {
  check_compatible(g);
  if (ring_.is_zero(c)) return;
  for (const auto& [e, gc] : g.terms_) add_term(e + shift, ring_.mul(c, gc));
}

MonomialSet Poly::support() const {
  MonomialSet s;
  for (const auto& [e, c] : terms_) s.insert(e);
  return s;
}

Degree Poly::degree() const {
  // Grlex puts a term of top total degree first.
  if (terms_.empty()) return neg_inf_degree;
  return static_cast<Degree>(terms_.begin()->first.total_degree());
}

void Poly::check_compatible(const Poly& other) const {
  if (!(ring_ == other.ring_))
    throw Error(Errc::ring_mismatch, ring_.to_string() + " vs " + other.ring_.to_string());
  if (nvars_ != other.nvars_)
    throw Error(Errc::arity_mismatch, std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) + " variables");
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, ring_.neg(c));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.ring_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, a.ring_.mul(ca, cb));
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::operator-() const {
  Poly out(ring_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, ring_.neg(c));
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(ring_, nvars_);
  for (const auto& [e, x] : terms_) out.add_term(e, ring_.mul(c, x));
  return out;
}

Poly Poly::times_monomial(const ExpVec& shift) const {
  if (shift.size() != nvars_) throw Error(Errc::arity_mismatch, "monomial length differs from nvars");
  Poly out(ring_, nvars_);
  // Adding a fixed shift preserves grlex order.
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, nvars_, ring_.one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.num < 0;
    Scalar mag = negative ? Scalar(Int(-c.num), c.den) : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool unit = mag.num == 1 && mag.den == 1;
    if (mono.empty())
      s += ring_.format(mag);
    else if (unit)
      s += mono;
    else
      s += ring_.format(mag) + "*" + mono;
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingSpec& ring, std::string_view text, std::size_t nvars)
      : ring_(ring), text_(text), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Poly expr() {
    Poly acc(ring_, nvars_);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Poly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      auto d = digits();
      unsigned long e = std::stoul(std::string(d));
      if (e > 100000) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Poly base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == 'x') {
      ++pos_;
      auto d = digits();
      unsigned long idx = std::stoul(std::string(d));
      if (idx == 0 || idx > nvars_) fail("variable x" + std::string(d) + " outside x1..x" + std::to_string(nvars_));
      return Poly::variable(ring_, nvars_, idx - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      digits();
      std::size_t save = pos_;
      if (eat('/')) {
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          digits();
        else
          pos_ = save;
      }
      return Poly::constant(ring_, nvars_, ring_.parse_element(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingSpec& ring_;
  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

Poly Poly::parse(const RingSpec& ring, std::string_view text, std::optional<std::size_t> nvars) {
  std::size_t n = nvars ? *nvars : std::max<std::size_t>(1, max_variable_index(text));
  return PolyParser(ring, text, n).parse();
}

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::sub: return f - g;
    case PolyOp::mul: return f * g;
    case PolyOp::scale:
      if (g.nvars() != f.nvars()) throw Error(Errc::arity_mismatch, "scale by polynomial of different arity");
      if (g.size() > 1 || g.degree() > 0) throw Error(Errc::invalid_argument, "scale needs a constant");
      return f * g;
  }
  throw Error(Errc::internal, "unknown polynomial op");
}

Poly poly_arith(PolyOp op, const Poly& f, const RingElement& c) {
  if (!(c.ring() == f.ring())) throw Error(Errc::ring_mismatch, f.ring().to_string() + " vs " + c.ring().to_string());
  Poly cp = Poly::constant(f.ring(), f.nvars(), c.value());
  if (op == PolyOp::scale) return f.scaled(c.value());
  return poly_arith(op, f, cp);
}

std::optional<MonicWitness> is_monic(const Poly& g) {
  if (g.is_zero()) return std::nullopt;
  ExpVec top(g.nvars());
  for (const auto& [e, c] : g.terms()) top = join(top, e);
  auto it = g.terms().find(top);
  if (it == g.terms().end() || !g.ring().is_one(it->second)) return std::nullopt;
  return MonicWitness{top};
}

Scalar phi(const RingSpec& ring, std::span<const Scalar> u, const ExpVec& alpha, const ExpVec& gamma) {
  if (u.size() != alpha.size() || alpha.size() != gamma.size())
    throw Error(Errc::arity_mismatch, "phi arguments disagree on n");
  if (!leq(alpha, gamma)) return ring.zero();
  Int binom = 1;
  for (std::size_t k = 0; k < alpha.size(); ++k) binom *= binomial(gamma[k], alpha[k]);
  Scalar r = ring.from_int(binom);
  for (std::size_t k = 0; k < alpha.size(); ++k) r = ring.mul(r, ring.pow(u[k], gamma[k] - alpha[k]));
  return r;
}

namespace {
void check_point(const Poly& f, std::span<const Scalar> u) {
  if (u.size() != f.nvars()) throw Error(Errc::arity_mismatch, "point has wrong number of coordinates");
}
}  // namespace

Poly taylor_shift(const Poly& f, std::span<const Scalar> u) {
  check_point(f, u);
  const auto& ring = f.ring();
  Poly out(ring, f.nvars());
  const std::size_t n = f.nvars();
  for (const auto& [gamma, c] : f.terms()) {
    ExpVec alpha(n);
    // Walk the box below gamma; every alpha there gets phi((u,alpha),gamma) * c.
    std::function<void(std::size_t)> walk = [&](std::size_t axis) {
      if (axis == n) {
        out.add_term(alpha, ring.mul(phi(ring, u, alpha, gamma), c));
        return;
      }
      for (ExpVec::value_type a = 0; a <= gamma[axis]; ++a) {
        alpha[axis] = a;
        walk(axis + 1);
      }
      alpha[axis] = 0;
    };
    walk(0);
  }
  return out;
}

Scalar shifted_coefficient(const Poly& f, std::span<const Scalar> u, const ExpVec& alpha) {
  check_point(f, u);
  const auto& ring = f.ring();
  Scalar acc = ring.zero();
  for (const auto& [gamma, c] : f.terms())
    if (leq(alpha, gamma)) acc = ring.add(acc, ring.mul(phi(ring, u, alpha, gamma), c));
  return acc;
}

Scalar evaluate(const Poly& f, std::span<const Scalar> a) {
  check_point(f, a);
  const auto& ring = f.ring();
  Scalar acc = ring.zero();
  for (const auto& [e, c] : f.terms()) {
    Scalar term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) term = ring.mul(term, ring.pow(a[k], e[k]));
    acc = ring.add(acc, term);
  }
  return acc;
}

RingElement evaluate(const Poly& f, std::span<const RingElement> a) {
  std::vector<Scalar> raw;
  raw.reserve(a.size());
  for (const auto& x : a) {
    if (!(x.ring() == f.ring())) throw Error(Errc::ring_mismatch, "evaluation point in a different ring");
    raw.push_back(x.value());
  }
  return RingElement(f.ring(), evaluate(f, std::span<const Scalar>(raw)));
}

Poly root_product(const RingSpec& ring, std::size_t nvars, std::size_t axis, std::span<const Scalar> roots,
                  std::span<const unsigned> multiplicity) {
  if (roots.size() != multiplicity.size()) throw Error(Errc::invalid_argument, "roots and multiplicities differ in length");
  Poly out = Poly::constant(ring, nvars, ring.one());
  const Poly x = Poly::variable(ring, nvars, axis);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (multiplicity[i] == 0)
      throw Error(Errc::non_positive_multiplicity, "multiplicity of " + ring.format(roots[i]) + " is 0");
    out *= (x - Poly::constant(ring, nvars, roots[i])).pow(multiplicity[i]);
  }
  return out;
}

std::pair<Poly, MonicWitness> monic_power_product(std::span<const Poly> gs, const ExpVec& alpha) {
  if (gs.size() != alpha.size()) throw Error(Errc::arity_mismatch, "need one axis polynomial per exponent");
  if (gs.empty()) throw Error(Errc::invalid_argument, "empty axis family");
  const RingSpec& ring = gs.front().ring();
  const std::size_t n = gs.size();
  Poly out = Poly::constant(ring, n, ring.one());
  ExpVec theta(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Poly& g = gs[k];
    if (g.nvars() != n) throw Error(Errc::arity_mismatch, "axis polynomial has wrong arity");
    for (const auto& [e, c] : g.terms())
      if (!e.supported_on(k)) throw Error(Errc::not_axis_poly, g.to_string() + " is not in R[x" + std::to_string(k + 1) + "]");
    auto w = is_monic(g);
    if (!w) throw Error(Errc::not_monic, g.to_string());
    theta[k] = w->theta[k] * alpha[k];
    if (alpha[k]) out *= g.pow(alpha[k]);
  }
  return {std::move(out), MonicWitness{theta}};
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& monic_divisor) {
  auto w = is_monic(monic_divisor);
  if (!w) throw Error(Errc::not_monic, monic_divisor.to_string());
  if (!(f.ring() == monic_divisor.ring()) || f.nvars() != monic_divisor.nvars())
    throw Error(Errc::ring_mismatch, "divisor lives in another polynomial ring");
  // If d | f then the grlex-leading term of f is lead(q) + theta, so a greedy
  // pass from the top either finishes or proves non-divisibility.
  Poly rest = f;
  Poly q(f.ring(), f.nvars());
  while (!rest.is_zero()) {
    auto [gamma, c] = *rest.terms().begin();
    if (!leq(w->theta, gamma)) return std::nullopt;
    ExpVec shift = gamma - w->theta;
    q.add_term(shift, c);
    rest.add_scaled(monic_divisor, f.ring().neg(c), shift);
  }
  return q;
}

}  // namespace nullgb
