#include "nullgb/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace nullgb {

ExpVec ExpVec::unit(std::size_t n, std::size_t axis, value_type power) {
  ExpVec v(n);
  v[axis] = power;
  return v;
}

std::uint64_t ExpVec::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool ExpVec::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
}

bool ExpVec::supported_on(std::size_t axis) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (i != axis && e_[i] != 0) return false;
  return true;
}

ExpVec& ExpVec::operator+=(const ExpVec& other) {
  if (other.size() != size()) throw Error(Errc::arity_mismatch, "exponent length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(Errc::arity_mismatch, "exponent length mismatch");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw Error(Errc::invalid_argument, "exponent difference leaves N^n");
    r[i] = a[i] - b[i];
  }
  return r;
}

std::string ExpVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  if (e_.size() == 1) s += ',';
  s += ')';
  return s;
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

ExpVec parse_expvec_prefix(std::string_view& s) {
  skip_ws(s);
  if (s.empty() || s.front() != '(') throw Error(Errc::parse_error, "expected '(' in exponent vector");
  s.remove_prefix(1);
  std::vector<ExpVec::value_type> values;
  while (true) {
    skip_ws(s);
    if (!s.empty() && s.front() == ')') {
      s.remove_prefix(1);
      break;
    }
    std::size_t len = 0;
    while (len < s.size() && std::isdigit(static_cast<unsigned char>(s[len]))) ++len;
    if (len == 0) throw Error(Errc::parse_error, "expected natural number in exponent vector");
    values.push_back(static_cast<ExpVec::value_type>(std::stoul(std::string(s.substr(0, len)))));
    s.remove_prefix(len);
    skip_ws(s);
    if (!s.empty() && s.front() == ',') {
      s.remove_prefix(1);
      continue;
    }
    if (!s.empty() && s.front() == ')') {
      s.remove_prefix(1);
      break;
    }
    throw Error(Errc::parse_error, "malformed exponent vector");
  }
  return ExpVec(std::span<const ExpVec::value_type>(values));
}

}  // namespace

ExpVec ExpVec::parse(std::string_view text) {
  std::string_view s = text;
  ExpVec v = parse_expvec_prefix(s);
  skip_ws(s);
  if (!s.empty()) throw Error(Errc::parse_error, "trailing input after exponent vector");
  return v;
}

bool leq(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(Errc::arity_mismatch, "exponent length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVec meet(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(Errc::arity_mismatch, "exponent length mismatch");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

ExpVec join(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(Errc::arity_mismatch, "exponent length mismatch");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool grlex_less(const ExpVec& a, const ExpVec& b) {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool GrlexGreater::operator()(const ExpVec& a, const ExpVec& b) const { return grlex_less(b, a); }

MonomialSet maximal_elements(const MonomialSet& set) {
  MonomialSet result;
  for (const auto& b : set) {
    bool maximal = true;
    for (const auto& a : set) {
      if (!(a == b) && leq(b, a)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.insert(b);
  }
  return result;
}

bool in_upset(const ExpVec& b, const MonomialSet& generators) {
  return std::any_of(generators.begin(), generators.end(), [&](const ExpVec& c) { return leq(c, b); });
}

bool in_downset(const ExpVec& b, const MonomialSet& generators) {
  return std::any_of(generators.begin(), generators.end(), [&](const ExpVec& c) { return leq(b, c); });
}

namespace {
void box_below(const ExpVec& top, std::size_t axis, ExpVec& cur, MonomialSet& out) {
  if (axis == top.size()) {
    out.insert(cur);
    return;
  }
  for (ExpVec::value_type v = 0; v <= top[axis]; ++v) {
    cur[axis] = v;
    box_below(top, axis + 1, cur, out);
  }
  cur[axis] = 0;
}
}  // namespace

MonomialSet downset(const MonomialSet& set) {
  MonomialSet out;
  for (const auto& top : maximal_elements(set)) {
    ExpVec cur(top.size());
    box_below(top, 0, cur, out);
  }
  return out;
}

MonomialSet sumset(const MonomialSet& a, const MonomialSet& b) {
  MonomialSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(x + y);
  return out;
}

bool upset_complement_is_finite(const MonomialSet& generators, std::size_t n) {
  for (const auto& g : generators)
    if (g.size() != n) throw Error(Errc::arity_mismatch, "generator length differs from n");
  for (std::size_t k = 0; k < n; ++k) {
    bool found = std::any_of(generators.begin(), generators.end(),
                             [k](const ExpVec& g) { return g.supported_on(k); });
    if (!found) return false;
  }
  return true;
}

MonomialSet enumerate_complement(const MonomialSet& generators, std::size_t n) {
  if (!upset_complement_is_finite(generators, n))
    throw Error(Errc::infinite_complement, "complement of " + to_string(generators) + " is infinite");
  // Every point outside the upset has k-th entry below the smallest pure power of x_k.
  ExpVec bound(n);
  for (std::size_t k = 0; k < n; ++k) {
    ExpVec::value_type best = 0;
    bool first = true;
    for (const auto& g : generators) {
      if (!g.supported_on(k)) continue;
      if (first || g[k] < best) best = g[k];
      first = false;
    }
    bound[k] = best;
  }
  MonomialSet out;
  for (std::size_t k = 0; k < n; ++k)
    if (bound[k] == 0) return out;
  ExpVec cur(n);
  std::function<void(std::size_t)> scan = [&](std::size_t axis) {
    if (axis == n) {
      if (!in_upset(cur, generators)) out.insert(cur);
      return;
    }
    for (ExpVec::value_type v = 0; v < bound[axis]; ++v) {
      cur[axis] = v;
      scan(axis + 1);
    }
    cur[axis] = 0;
  };
  scan(0);
  return out;
}

std::vector<ExpVec> compositions(std::size_t n, unsigned t) {
  std::vector<ExpVec> out;
  if (n == 0) {
    if (t == 0) out.emplace_back(0);
    return out;
  }
  ExpVec cur(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t axis, unsigned left) {
    if (axis + 1 == n) {
      cur[axis] = left;
      out.push_back(cur);
      cur[axis] = 0;
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      cur[axis] = v;
      rec(axis + 1, left - v);
    }
    cur[axis] = 0;
  };
  rec(0, t);
  return out;
}

MonomialSet scaled_simplex(const ExpVec& alpha, unsigned t) {
  MonomialSet out;
  for (const auto& theta : compositions(alpha.size(), t)) {
    ExpVec v(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) v[i] = alpha[i] * theta[i];
    out.insert(v);
  }
  return out;
}

MonomialSet shifted_scaled_simplex(const ExpVec& alpha, const ExpVec& gamma, unsigned t) {
  if (!leq(gamma, alpha)) throw Error(Errc::gamma_exceeds_alpha, gamma.to_string() + " > " + alpha.to_string());
  if (t == 0) throw Error(Errc::invalid_argument, "shifted simplex needs t >= 1");
  MonomialSet out;
  const ExpVec shift = alpha - gamma;
  for (const auto& v : scaled_simplex(alpha, t - 1)) out.insert(v + shift);
  return out;
}

namespace {
Int product(const ExpVec& v) {
  Int p = 1;
  for (auto x : v) p *= x;
  return p;
}
}  // namespace

Int count_grid_complement(const ExpVec& alpha, unsigned t) {
  if (alpha.size() == 0) throw Error(Errc::invalid_argument, "count needs n >= 1");
  const auto n = static_cast<unsigned>(alpha.size());
  return product(alpha) * binomial(n + t - 1, n);
}

Int count_punctured_complement(const ExpVec& alpha, const ExpVec& gamma, unsigned t) {
  if (alpha.size() != gamma.size()) throw Error(Errc::arity_mismatch, "alpha/gamma length mismatch");
  if (!leq(gamma, alpha)) throw Error(Errc::gamma_exceeds_alpha, gamma.to_string() + " > " + alpha.to_string());
  if (t == 0) throw Error(Errc::invalid_argument, "punctured count needs t >= 1");
  if (alpha.size() == 0) throw Error(Errc::invalid_argument, "count needs n >= 1");
  const auto n = static_cast<unsigned>(alpha.size());
  return product(alpha) * binomial(n + t - 1, n) - product(gamma) * binomial(n + t - 2, n - 1);
}

std::string to_string(const MonomialSet& set) {
  std::string s = "{";
  bool first = true;
  for (const auto& v : set) {
    if (!first) s += ',';
    first = false;
    s += v.to_string();
  }
  return s + "}";
}

MonomialSet parse_monomial_set(std::string_view text) {
  std::string_view s = text;
  skip_ws(s);
  if (s.empty() || s.front() != '{') throw Error(Errc::parse_error, "expected '{' in monomial set");
  s.remove_prefix(1);
  MonomialSet out;
  std::size_t arity = 0;
  skip_ws(s);
  if (!s.empty() && s.front() == '}') {
    s.remove_prefix(1);
  } else {
    while (true) {
      ExpVec v = parse_expvec_prefix(s);
      if (!out.empty() && v.size() != arity) throw Error(Errc::arity_mismatch, "mixed lengths in monomial set");
      arity = v.size();
      out.insert(v);
      skip_ws(s);
      if (!s.empty() && s.front() == ',') {
        s.remove_prefix(1);
        continue;
      }
      if (!s.empty() && s.front() == '}') {
        s.remove_prefix(1);
        break;
      }
      throw Error(Errc::parse_error, "malformed monomial set");
    }
  }
  skip_ws(s);
  if (!s.empty()) throw Error(Errc::parse_error, "trailing input after monomial set");
  return out;
}

}  // namespace nullgb
