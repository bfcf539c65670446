#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "nullgb/poly.hpp"

namespace nullgb {

/// Lexicographic order on points of R^n, coordinatewise by canonical value.
struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ScalarLess{});
  }
};

/// Canonicalizes, sorts and deduplicates a finite subset of the ring.
inline std::vector<Scalar> normalize_set(const RingSpec& ring, std::vector<Scalar> set) {
  for (auto& x : set) x = RingElement(ring, x).value();
  std::sort(set.begin(), set.end(), ScalarLess{});
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline bool contains(std::span<const Scalar> set, const Scalar& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

/// Visits points of prod_k sets[k] in lexicographic order (last axis fastest)
/// while fn returns true; returns false if fn stopped the walk early.
/// Visits nothing when some set is empty; visits the empty point once when n = 0.
template <class Fn>
bool all_points(std::span<const std::vector<Scalar>> sets, Fn&& fn) {
  for (const auto& s : sets)
    if (s.empty()) return true;
  const std::size_t n = sets.size();
  std::vector<std::size_t> idx(n, 0);
  Point p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = sets[k][0];
  while (true) {
    if (!fn(static_cast<const Point&>(p))) return false;
    std::size_t k = n;
    while (true) {
      if (k == 0) return true;
      --k;
      if (++idx[k] < sets[k].size()) {
        p[k] = sets[k][idx[k]];
        break;
      }
      idx[k] = 0;
      p[k] = sets[k][0];
    }
  }
}

template <class Fn>
void for_each_point(std::span<const std::vector<Scalar>> sets, Fn&& fn) {
  all_points(sets, [&](const Point& p) {
    fn(p);
    return true;
  });
}

inline std::string point_to_string(const RingSpec& ring, const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += ring.format(p[i]);
  }
  if (p.size() == 1) s += ',';
  return s + ")";
}

}  // namespace nullgb
