#include "nullgb/applications.hpp"

#include <algorithm>
#include <functional>

namespace nullgb {

Int coverage_threshold(std::span<const unsigned> psi, unsigned t) {
  if (t == 0) throw Error(Errc::invalid_argument, "coverage threshold needs t >= 1");
  // Fill every axis up to psi_i - 1, then spend the t-1 remaining floor units on the widest axis.
  Int total = 1;
  unsigned widest = 0;
  for (unsigned p : psi) {
    if (p == 0) throw Error(Errc::non_positive_multiplicity, "multiplicity 0 in coverage threshold");
    total += p - 1;
    widest = std::max(widest, p);
  }
  return total + Int(t - 1) * widest;
}

std::string_view cover_verdict_name(CoverVerdict v) noexcept {
  switch (v) {
    case CoverVerdict::holds: return "holds";
    case CoverVerdict::hypotheses_unmet: return "hypotheses_unmet";
    case CoverVerdict::violated: return "violated";
  }
  return "?";
}

CoverReport covering_audit(const CoverInstance& inst) {
  const auto& grid = inst.pgrid.base();
  const RingSpec& ring = grid.ring();
  const std::size_t n = grid.nvars();
  if (inst.t == 0) throw Error(Errc::invalid_argument, "cover audit needs t >= 1");
  if (!grid.condition_d()) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  CoverReport rep;
  Poly product = Poly::constant(ring, n, ring.one());
  for (const auto& pl : inst.planes) {
    if (!(pl.rho.ring() == ring) || pl.rho.nvars() != n)
      throw Error(Errc::ring_mismatch, "plane polynomial lives in another polynomial ring");
    if (pl.rho.degree() != static_cast<Degree>(pl.degree))
      throw Error(Errc::invalid_argument, "declared degree " + std::to_string(pl.degree) + " but deg(" +
                                              pl.rho.to_string() + ") differs");
    rep.degree_sum += pl.degree;
    product *= pl.rho;
  }
  rep.product_degree = product.degree();

  rep.covering_ok = all_points(std::span<const std::vector<Scalar>>(grid.sets()), [&](const Point& a) {
    if (inst.pgrid.in_puncture(a)) return true;
    std::vector<unsigned> psi(n);
    for (std::size_t k = 0; k < n; ++k) psi[k] = grid.multiplicity(k, a[k]);
    Int on = 0;
    for (const auto& pl : inst.planes)
      if (ring.is_zero(evaluate(pl.rho, a))) ++on;
    if (on >= coverage_threshold(psi, inst.t)) return true;
    rep.uncovered_point = a;
    return false;
  });

  // The product of the values, as written; over rings with zero divisors this is
  // stronger than asking each factor to be nonzero.
  all_points(std::span<const std::vector<Scalar>>(grid.sets()), [&](const Point& w) {
    Scalar v = ring.one();
    for (const auto& pl : inst.planes) v = ring.mul(v, evaluate(pl.rho, w));
    if (ring.is_zero(v)) return true;
    rep.witness = w;
    return false;
  });

  unsigned widest = 0;
  Int outer = 0;
  for (std::size_t k = 0; k < n; ++k) {
    widest = std::max(widest, inst.pgrid.outer_degree(k));
    outer += inst.pgrid.outer_degree(k);
  }
  rep.bound = Int(inst.t - 1) * widest + outer;

  if (!rep.covering_ok || !rep.witness) {
    rep.verdict = CoverVerdict::hypotheses_unmet;
  } else {
    bool ok = rep.degree_sum >= Int(rep.product_degree) && Int(rep.product_degree) >= rep.bound;
    rep.verdict = ok ? CoverVerdict::holds : CoverVerdict::violated;
  }
  return rep;
}

namespace {

/// Smallest prime factor and whether q is a power of it.
bool is_prime_power(unsigned q, unsigned& base) {
  if (q < 2) return false;
  unsigned p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  base = p;
  while (q % p == 0) q /= p;
  return q == 1;
}

void require_prime_field(unsigned q) {
  unsigned base = 0;
  if (!is_prime_power(q, base)) throw Error(Errc::invalid_argument, std::to_string(q) + " is not a prime power");
  if (base != q) throw Error(Errc::unsupported_field, "GF(" + std::to_string(q) + ") needs extension-field arithmetic");
}

unsigned ipow(unsigned b, unsigned e) {
  unsigned long long r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= b;
    if (r > 100000000ULL) throw Error(Errc::scale_exceeded, "q^n is too large to enumerate");
  }
  return static_cast<unsigned>(r);
}

constexpr unsigned long long kMaxIncidences = 50'000'000ULL;
constexpr unsigned long long kMaxCandidates = 200'000'000ULL;

}  // namespace

Int jamison_bound(unsigned q, unsigned n, unsigned t) {
  require_prime_field(q);
  if (n == 0 || t == 0) throw Error(Errc::invalid_argument, "Jamison bound needs n, t >= 1");
  return Int(n + t - 1) * (q - 1) + 1;
}

std::vector<AffineHyperplane> affine_hyperplanes(unsigned q, unsigned n) {
  require_prime_field(q);
  if (n == 0) throw Error(Errc::invalid_argument, "hyperplanes need n >= 1");
  const unsigned total = ipow(q, n);
  std::vector<AffineHyperplane> out;
  for (unsigned code = 1; code < total; ++code) {
    std::vector<unsigned> eta(n);
    unsigned c = code;
    for (std::size_t i = n; i-- > 0;) {
      eta[i] = c % q;
      c /= q;
    }
    auto first = std::find_if(eta.begin(), eta.end(), [](unsigned x) { return x != 0; });
    if (*first != 1) continue;
    for (unsigned off = 0; off < q; ++off) out.push_back(AffineHyperplane{eta, off});
  }
  return out;
}

namespace {

bool on_plane(const AffineHyperplane& h, const std::vector<unsigned>& y, unsigned q) {
  unsigned long long s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += static_cast<unsigned long long>(h.normal[i]) * y[i];
  return s % q == h.offset;
}

void check_point_coords(unsigned q, unsigned n, const std::vector<unsigned>& y) {
  if (y.size() != n) throw Error(Errc::arity_mismatch, "point has wrong number of coordinates");
  for (unsigned c : y)
    if (c >= q) throw Error(Errc::invalid_argument, "coordinate outside GF(" + std::to_string(q) + ")");
}

std::vector<std::vector<unsigned>> all_field_points(unsigned q, unsigned n) {
  const unsigned total = ipow(q, n);
  std::vector<std::vector<unsigned>> pts;
  for (unsigned code = 0; code < total; ++code) {
    std::vector<unsigned> p(n);
    unsigned c = code;
    for (std::size_t i = n; i-- > 0;) {
      p[i] = c % q;
      c /= q;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

BlockingReport blocking_set_audit(unsigned q, unsigned n, unsigned t, const std::vector<std::vector<unsigned>>& y) {
  auto planes = affine_hyperplanes(q, n);
  if (static_cast<unsigned long long>(planes.size()) * std::max<std::size_t>(y.size(), 1) > kMaxIncidences)
    throw Error(Errc::scale_exceeded, "too many hyperplane incidences to audit");
  for (const auto& p : y) check_point_coords(q, n, p);
  BlockingReport rep;
  rep.hyperplanes = planes.size();
  rep.size = y.size();
  rep.bound = jamison_bound(q, n, std::max(t, 1U));
  for (const auto& h : planes) {
    unsigned hits = 0;
    for (const auto& p : y)
      if (on_plane(h, p, q)) ++hits;
    if (hits < t) {
      rep.unblocked = h;
      break;
    }
  }
  rep.blocked = !rep.unblocked;
  return rep;
}

namespace {

struct BlockSearcher {
  std::vector<std::vector<unsigned>> points;
  std::vector<std::vector<std::size_t>> planes_through;  // per point
  std::size_t nplanes = 0;
  unsigned t = 1;
  bool distinct = false;
  std::vector<unsigned> counts;
  std::vector<std::size_t> chosen;
  std::size_t leaves = 0;

  bool dfs(std::size_t start, std::size_t left) {
    if (left == 0) {
      ++leaves;
      return std::all_of(counts.begin(), counts.end(), [&](unsigned c) { return c >= t; });
    }
    // A point adds at most one to each hyperplane count.
    for (unsigned c : counts)
      if (c + left < t) return false;
    for (std::size_t i = start; i < points.size(); ++i) {
      for (auto h : planes_through[i]) ++counts[h];
      chosen.push_back(i);
      if (dfs(distinct ? i + 1 : i, left - 1)) return true;
      chosen.pop_back();
      for (auto h : planes_through[i]) --counts[h];
    }
    return false;
  }
};

BlockSearcher make_searcher(unsigned q, unsigned n, unsigned t, bool distinct) {
  if (t == 0) throw Error(Errc::invalid_argument, "blocking search needs t >= 1");
  BlockSearcher s;
  auto planes = affine_hyperplanes(q, n);
  s.points = all_field_points(q, n);
  if (static_cast<unsigned long long>(planes.size()) * s.points.size() > kMaxIncidences)
    throw Error(Errc::scale_exceeded, "too many hyperplane incidences to search");
  s.nplanes = planes.size();
  s.planes_through.resize(s.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i)
    for (std::size_t h = 0; h < planes.size(); ++h)
      if (on_plane(planes[h], s.points[i], q)) s.planes_through[i].push_back(h);
  s.t = t;
  s.distinct = distinct;
  return s;
}

void check_search_size(std::size_t npoints, std::size_t size, bool distinct) {
  Int count = distinct ? binomial(static_cast<unsigned>(npoints), static_cast<unsigned>(size))
                       : binomial(static_cast<unsigned>(npoints + size - 1), static_cast<unsigned>(size));
  if (count > kMaxCandidates) throw Error(Errc::scale_exceeded, "too many candidate sets of size " + std::to_string(size));
}

}  // namespace

bool some_blocking_set_of_size(unsigned q, unsigned n, unsigned t, std::size_t size, bool distinct) {
  BlockSearcher s = make_searcher(q, n, t, distinct);
  if (distinct && size > s.points.size()) return false;
  check_search_size(s.points.size(), size, distinct);
  s.counts.assign(s.nplanes, 0);
  return s.dfs(0, size);
}

BlockingSearch min_blocking_multiset(unsigned q, unsigned n, unsigned t, bool distinct) {
  BlockSearcher s = make_searcher(q, n, t, distinct);
  BlockingSearch out;
  // t copies of every point always block, so the loop ends (or hits the scale cap).
  const std::size_t limit = distinct ? s.points.size() : s.points.size() * t;
  for (std::size_t size = 0; size <= limit; ++size) {
    check_search_size(s.points.size(), size, distinct);
    s.counts.assign(s.nplanes, 0);
    s.chosen.clear();
    bool found = s.dfs(0, size);
    if (found) {
      out.min_size = size;
      for (auto i : s.chosen) out.example.push_back(s.points[i]);
      out.candidates_checked = s.leaves;
      return out;
    }
  }
  throw Error(Errc::not_member, "no blocking set exists without repetition for this t");
}

AlonFurediReport alon_furedi(const Poly& f, const std::vector<std::vector<Scalar>>& raw_sets, const ExpVec& beta) {
  const RingSpec& ring = f.ring();
  const std::size_t n = f.nvars();
  if (raw_sets.size() != n || beta.size() != n) throw Error(Errc::arity_mismatch, "need one set and one bound per variable");
  std::vector<std::vector<Scalar>> sets;
  for (const auto& s : raw_sets) {
    auto c = normalize_set(ring, s);
    if (c.empty()) throw Error(Errc::invalid_argument, "grid sets must be nonempty");
    sets.push_back(std::move(c));
  }
  for (const auto& s : sets)
    if (!check_condition(ring, s, Condition::D)) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "Alon-Furedi needs f != 0");
  for (const auto& [alpha, c] : f.terms())
    if (!leq(alpha, beta)) throw Error(Errc::support_exceeds_beta, alpha.to_string() + " exceeds " + beta.to_string());
  for (std::size_t k = 0; k < n; ++k)
    if (beta[k] + 1 > sets[k].size()) throw Error(Errc::invalid_argument, "beta exceeds |S_k| - 1");

  long long target = -f.degree();
  for (const auto& s : sets) target += static_cast<long long>(s.size());

  AlonFurediReport rep;
  std::optional<std::pair<Int, ExpVec>> best;
  ExpVec mu(n);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t k, long long left) {
    if (k == n) {
      if (left != 0) return;
      Int prod = 1;
      for (auto m : mu) prod *= m;
      // Ascending lexicographic walk, so a strict improvement keeps the lex-least tie.
      if (!best || prod < best->first) best = std::make_pair(prod, mu);
      return;
    }
    const long long lo = static_cast<long long>(sets[k].size()) - beta[k];
    const long long hi = static_cast<long long>(sets[k].size());
    for (long long m = lo; m <= hi && m <= left; ++m) {
      mu[k] = static_cast<ExpVec::value_type>(m);
      rec(k + 1, left - m);
    }
    mu[k] = 0;
  };
  rec(0, target);
  if (!best) throw Error(Errc::internal, "no feasible mu although the hypotheses hold");
  rep.mu = best->second;
  rep.bound = best->first;
  Int actual = 0;
  for_each_point(std::span<const std::vector<Scalar>>(sets), [&](const Point& v) {
    if (!ring.is_zero(evaluate(f, v))) ++actual;
  });
  rep.actual = actual;
  rep.holds = rep.bound <= rep.actual;
  return rep;
}

}  // namespace nullgb
