#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nullgb/ring.hpp"

namespace nullgb {

/// An exponent vector in N^n.
class ExpVec {
 public:
  using value_type = std::uint32_t;
  using storage_type = boost::container::small_vector<value_type, 4>;

  ExpVec() = default;
  explicit ExpVec(std::size_t n) : e_(n, 0) {}
  ExpVec(std::initializer_list<value_type> init) : e_(init) {}
  explicit ExpVec(std::span<const value_type> values) : e_(values.begin(), values.end()) {}

  static ExpVec unit(std::size_t n, std::size_t axis, value_type power = 1);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::uint64_t total_degree() const noexcept;
  bool is_zero() const noexcept;
  /// True iff every entry other than `axis` is zero.
  bool supported_on(std::size_t axis) const noexcept;

  ExpVec& operator+=(const ExpVec& other);
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  /// Componentwise difference; requires b <= a.
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  /// Lexicographic; only for container ordering.
  friend bool operator<(const ExpVec& a, const ExpVec& b) { return a.e_ < b.e_; }

  std::string to_string() const;
  static ExpVec parse(std::string_view text);

 private:
  storage_type e_;
};

/// Componentwise partial order.
bool leq(const ExpVec& a, const ExpVec& b);
/// Componentwise minimum.
ExpVec meet(const ExpVec& a, const ExpVec& b);
/// Componentwise maximum.
ExpVec join(const ExpVec& a, const ExpVec& b);

/// Graded lexicographic order, greatest first (x1 > x2 > ... within a degree).
struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};
bool grlex_less(const ExpVec& a, const ExpVec& b);

using MonomialSet = std::set<ExpVec>;

MonomialSet maximal_elements(const MonomialSet& set);
bool in_upset(const ExpVec& b, const MonomialSet& generators);
/// Membership in the downset of `generators`; pass maximal elements for speed.
bool in_downset(const ExpVec& b, const MonomialSet& generators);
MonomialSet downset(const MonomialSet& set);
MonomialSet sumset(const MonomialSet& a, const MonomialSet& b);

/// The complement of the upset of C in N^n is finite iff every axis carries a
/// generator supported only on that axis.
bool upset_complement_is_finite(const MonomialSet& generators, std::size_t n);
/// N^n minus the upset of C, scanned over the box cut out by the axis generators.
MonomialSet enumerate_complement(const MonomialSet& generators, std::size_t n);

/// All theta in N^n with |theta| = t, lexicographically descending.
std::vector<ExpVec> compositions(std::size_t n, unsigned t);
/// {(alpha_1 theta_1, ..., alpha_n theta_n) : |theta| = t}.
MonomialSet scaled_simplex(const ExpVec& alpha, unsigned t);
/// scaled_simplex(alpha, t-1) shifted by alpha - gamma; requires gamma <= alpha, t >= 1.
MonomialSet shifted_scaled_simplex(const ExpVec& alpha, const ExpVec& gamma, unsigned t);

/// |N^n - upset(scaled_simplex(alpha, t))| in closed form.
Int count_grid_complement(const ExpVec& alpha, unsigned t);
/// |N^n - upset(scaled_simplex(alpha,t) u shifted_scaled_simplex(alpha,gamma,t))|.
Int count_punctured_complement(const ExpVec& alpha, const ExpVec& gamma, unsigned t);

/// Calls fn(beta) for every beta with sum_i floor(beta_i / scale_i) <= level.
/// Nothing is visited when level < 0; every scale must be positive.
template <class Fn>
void for_each_floor_bounded(std::span<const unsigned> scale, long level, Fn&& fn);

std::string to_string(const MonomialSet& set);
MonomialSet parse_monomial_set(std::string_view text);

// ---------------------------------------------------------------------------

namespace detail {
template <class Fn>
void floor_bounded_rec(std::span<const unsigned> scale, std::size_t axis, long budget, ExpVec& beta,
                       Fn& fn) {
  if (axis == scale.size()) {
    fn(static_cast<const ExpVec&>(beta));
    return;
  }
  const unsigned s = scale[axis];
  const long top = static_cast<long>(s) * (budget + 1);
  for (long b = 0; b < top; ++b) {
    beta[axis] = static_cast<ExpVec::value_type>(b);
    floor_bounded_rec(scale, axis + 1, budget - b / static_cast<long>(s), beta, fn);
  }
  beta[axis] = 0;
}
}  // namespace detail

template <class Fn>
void for_each_floor_bounded(std::span<const unsigned> scale, long level, Fn&& fn) {
  if (level < 0) return;
  for (unsigned s : scale)
    if (s == 0) throw Error(Errc::invalid_argument, "floor bound with zero scale");
  ExpVec beta(scale.size());
  detail::floor_bounded_rec(scale, 0, level, beta, fn);
}

}  // namespace nullgb
