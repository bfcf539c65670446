#include <doctest.h>

#include "support/oracles.hpp"

using namespace nullgb;
using oracle::Rng;

namespace {
const RingSpec ZZ = RingSpec::integers();
Poly P(const char* text, std::size_t n, const RingSpec& r = RingSpec::integers()) { return Poly::parse(r, text, n); }
using Sets = std::vector<std::vector<Scalar>>;

Sets box01(std::size_t n) { return Sets(n, std::vector<Scalar>{Scalar(0), Scalar(1)}); }

MultisetGrid grid01(std::size_t n, const RingSpec& r = RingSpec::integers()) { return MultisetGrid::uniform(r, box01(n)); }

PuncturedGrid pgrid01(std::size_t n) { return PuncturedGrid(grid01(n), Sets(n, std::vector<Scalar>{Scalar(0)})); }

const Poly* member_labelled(const MonicFamily& fam, const std::vector<Poly>& q, const std::string& label) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (fam[i].label == label) return &q[i];
  return nullptr;
}

/// Vanishing to the given level at a: every x^beta with sum floor(beta_i / psi_i(a_i)) <= level
/// has zero coefficient in f(x + a). Uses substitution and a box scan.
bool vanishes_to(const Poly& f, const MultisetGrid& grid, const Point& a, long level) {
  if (level < 0) return true;
  const std::size_t n = grid.nvars();
  std::vector<unsigned> psi(n), top(n);
  for (std::size_t k = 0; k < n; ++k) {
    psi[k] = grid.multiplicity(k, a[k]);
    top[k] = psi[k] * static_cast<unsigned>(level + 1);
  }
  auto shifted = oracle::substitute_shift(f, a);
  bool ok = true;
  oracle::for_box(top, [&](const ExpVec& b) {
    long s = 0;
    for (std::size_t k = 0; k < n; ++k) s += b[k] / psi[k];
    if (s <= level && !grid.ring().is_zero(shifted.coeff(b))) ok = false;
  });
  return ok;
}

bool oracle_power_member(const Poly& f, const MultisetGrid& grid, unsigned t) {
  for (const auto& a : oracle::grid_points(grid.sets()))
    if (!vanishes_to(f, grid, a, long(t) - 1)) return false;
  return true;
}

bool in_box(const Point& a, const Sets& e) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::find(e[k].begin(), e[k].end(), a[k]) == e[k].end()) return false;
  return true;
}

/// A random combination of basis members, so a guaranteed member.
Poly random_member(const MonicFamily& fam, Rng& rng, unsigned deg = 2) {
  Poly f(fam.ring(), fam.nvars());
  for (const auto& m : fam) f += oracle::random_poly(fam.ring(), fam.nvars(), deg, 3, rng) * m.poly;
  return f;
}
}  // namespace

TEST_CASE("grids validate their axes") {
  CHECK_THROWS_AS(MultisetGrid(ZZ, {GridAxis{{Scalar(0), Scalar(1)}, {1, 0}}}), Error);
  CHECK_THROWS_AS(MultisetGrid(ZZ, {GridAxis{{Scalar(0), Scalar(0)}, {1, 1}}}), Error);
  CHECK_THROWS_AS(MultisetGrid(ZZ, {GridAxis{{Scalar(0)}, {1, 1}}}), Error);
  MultisetGrid g(ZZ, {GridAxis{{Scalar(1), Scalar(0)}, {3, 2}}});
  CHECK(g.multiplicity(0, Scalar(1)) == 3);
  CHECK(g.multiplicity(0, Scalar(0)) == 2);
  CHECK(g.axis_degree(0) == 5);
  CHECK(g.axis_poly(0) == P("x1^2*(x1-1)^3", 1));
  CHECK_THROWS_AS(PuncturedGrid(grid01(1), Sets{{Scalar(2)}}), Error);
  auto pg = pgrid01(2);
  CHECK(pg.puncture_poly(0) == P("x1", 2));
  CHECK(pg.outer_poly(1) == P("x2 - 1", 2));
  CHECK(pg.outer_product() == P("(x1-1)*(x2-1)", 2));
  CHECK(pg.outer_degree(0) == 1);
  CHECK(pg.in_puncture(Point{Scalar(0), Scalar(0)}));
  CHECK_FALSE(pg.in_puncture(Point{Scalar(0), Scalar(1)}));
}

TEST_CASE("power basis examples") {
  auto b0 = power_basis(grid01(2), 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].poly == P("1", 2));
  auto b1 = power_basis(grid01(2), 1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].poly == P("x1^2 - x1", 2));
  CHECK(b1[1].poly == P("x2^2 - x2", 2));
  CHECK(b1[0].label == "(1,0)");
  auto b2 = power_basis(grid01(2), 2);
  CHECK(b2.size() == 3);
  CHECK(b2[1].poly == P("(x1^2-x1)*(x2^2-x2)", 2));
  CHECK(power_basis(grid01(3), 3).size() == 10);
}

TEST_CASE("power ideal membership examples") {
  CHECK(in_power_ideal(P("x1^2 - x1", 2), grid01(2), 1) == Verdict::yes);
  CHECK(in_power_ideal(P("x1*x2", 2), grid01(2), 1) == Verdict::no);
  CHECK(in_power_ideal(P("x1*x2 + 17", 2), grid01(2), 0) == Verdict::yes);
  CHECK(verdict_name(Verdict::inapplicable) == "inapplicable");
  CHECK_THROWS_AS(in_power_ideal(P("x1", 3), grid01(2), 1), Error);
}

TEST_CASE("power ideal certificates") {
  auto c = power_ideal_certificate(P("(x1^2-x1)*(x2^2-x2)", 2), grid01(2), 2);
  const Poly* q = member_labelled(c.basis, c.quotients, "(1,1)");
  REQUIRE(q);
  CHECK(*q == P("1", 2));
  CHECK(c.remainder.is_zero());
  CHECK(c.checks.all());
  CHECK(c.support_ok);
  CHECK(c.basis_kind == "I_t");

  auto c1 = power_ideal_certificate(P("x1^2 - x1", 2), grid01(2), 1);
  CHECK(*member_labelled(c1.basis, c1.quotients, "(1,0)") == P("1", 2));

  auto c2 = power_ideal_certificate(P("(x1^2-x1)*(x1+5)", 1), grid01(1), 1);
  CHECK(c2.quotients[0] == P("x1 + 5", 1));
  CHECK(c2.support_ok);

  CHECK_THROWS_AS(power_ideal_certificate(P("x1", 2), grid01(2), 1), Error);
}

TEST_CASE("power ideal normal forms") {
  CHECK(power_ideal_normal_form(P("(x1^2-x1)*(x2^3+2)", 2), grid01(2), 1).is_zero());
  CHECK(power_ideal_normal_form(P("x1^2", 1), grid01(1), 1) == P("x1", 1));
  auto nf = power_ideal_normal_form(P("x1^3*x2", 2), grid01(2), 1);
  CHECK(nf == P("x1*x2", 2));
  for (const auto& a : oracle::grid_points(box01(2))) CHECK(evaluate(nf, a) == evaluate(P("x1^3*x2", 2), a));
}

TEST_CASE("vanishing test agrees with the substitution oracle and with reduction") {
  Rng rng(53);
  const std::vector<MultisetGrid> grids{
      grid01(2),
      MultisetGrid(ZZ, {GridAxis{{Scalar(0), Scalar(1)}, {2, 1}}, GridAxis{{Scalar(3)}, {2}}}),
      MultisetGrid(RingSpec::prime_field(5), {GridAxis{{Scalar(1), Scalar(4)}, {1, 2}}, GridAxis{{Scalar(0)}, {1}}}),
      MultisetGrid(ZZ, {GridAxis{{Scalar(0)}, {1}}, GridAxis{{Scalar(0), Scalar(2)}, {1, 1}}, GridAxis{{Scalar(-1)}, {2}}}),
  };
  for (const auto& grid : grids)
    for (unsigned t = 0; t <= 2; ++t) {
      auto basis = power_basis(grid, t);
      int members = 0;
      for (int i = 0; i < 60; ++i) {
        Poly f = i % 2 ? oracle::random_poly(grid.ring(), grid.nvars(), 5, 5, rng) : random_member(basis, rng);
        const bool fast = in_power_ideal(f, grid, t) == Verdict::yes;
        CHECK(fast == oracle_power_member(f, grid, t));
        CHECK(fast == reduce(f, basis).remainder.is_zero());
        members += fast;
      }
      CHECK(members >= 30);
    }
}

TEST_CASE("I_t is the intersection of the punctured ideal and I_t of the puncture") {
  Rng rng(59);
  for (std::size_t n = 1; n <= 2; ++n) {
    MultisetGrid grid(ZZ, std::vector<GridAxis>(n, GridAxis{{Scalar(0), Scalar(1), Scalar(2)}, {1, 2, 1}}));
    PuncturedGrid pg(grid, Sets(n, std::vector<Scalar>{Scalar(0), Scalar(2)}));
    auto inner = pg.puncture_grid();
    for (unsigned t = 1; t <= 2; ++t) {
      auto outer_basis = power_basis(grid, t);
      auto inner_basis = power_basis(inner, t);
      for (int i = 0; i < 80; ++i) {
        Poly f = i % 3 == 0 ? random_member(outer_basis, rng)
                 : i % 3 == 1 ? random_member(inner_basis, rng)
                              : oracle::random_poly(ZZ, n, 5, 5, rng);
        const bool both = punctured_membership(f, pg, t) == Verdict::yes && in_power_ideal(f, inner, t) == Verdict::yes;
        CHECK(both == (in_power_ideal(f, grid, t) == Verdict::yes));
      }
    }
  }
}

TEST_CASE("an empty puncture leaves membership unchanged") {
  Rng rng(61);
  PuncturedGrid pg(grid01(2), Sets{{}, {Scalar(1)}});
  for (int i = 0; i < 50; ++i) {
    auto f = oracle::random_poly(ZZ, 2, 4, 4, rng);
    CHECK(punctured_membership(f, pg, 1) == in_power_ideal(f, grid01(2), 1));
  }
}

TEST_CASE("punctured membership examples") {
  auto pg = pgrid01(2);
  CHECK(punctured_membership(P("(x1-1)*(x2-1)", 2), pg, 1) == Verdict::yes);
  CHECK(punctured_membership(P("1", 2), pg, 1) == Verdict::no);
  CHECK(punctured_membership(P("x1", 2), pg, 1) == Verdict::no);
}

TEST_CASE("punctured analysis examples") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Poly f = Poly::constant(ZZ, n, Scalar(1));
    for (std::size_t k = 0; k < n; ++k) f *= Poly::variable(ZZ, n, k) - Poly::constant(ZZ, n, Scalar(1));
    auto rep = punctured_analysis(f, pgrid01(n), 1);
    CHECK(rep.eta == f);
    CHECK(rep.cofactor == Poly::constant(ZZ, n, Scalar(1)));
    CHECK(rep.degrees.applies);
    CHECK(rep.degrees.holds);
    CHECK(rep.degrees.bound == Int(n));
    CHECK(rep.degrees.deg_eta == Degree(n));
  }
  auto zero_on_grid = punctured_analysis(P("(x1^2-x1)*x2", 2), pgrid01(2), 1);
  CHECK(zero_on_grid.eta.is_zero());
  CHECK_FALSE(zero_on_grid.degrees.applies);
  CHECK_FALSE(zero_on_grid.degrees.holds);

  PuncturedGrid pg(MultisetGrid::uniform(ZZ, Sets{{Scalar(0), Scalar(1), Scalar(2)}}), Sets{{Scalar(0)}});
  auto f = P("(x1-1)^2*(x1-2)^2*x1", 1);
  REQUIRE(punctured_membership(f, pg, 2) == Verdict::yes);
  auto rep = punctured_analysis(f, pg, 2);
  CHECK(rep.degrees.bound == 4);
  CHECK(rep.degrees.deg_eta == 5);
  // f vanishes on all of {0,1,2}, so the bound is not promised; it still holds here.
  CHECK_FALSE(rep.degrees.applies);
  CHECK(Int(rep.degrees.deg_eta) >= rep.degrees.bound);
  CHECK(rep.divisor == P("(x1-1)*(x1-2)", 1));
  CHECK(rep.eta == rep.cofactor * rep.divisor);

  CHECK_THROWS_AS(punctured_analysis(P("1", 2), pgrid01(2), 1), Error);
}

TEST_CASE("punctured members are divisible and respect the degree bound") {
  Rng rng(67);
  for (std::size_t n = 1; n <= 2; ++n) {
    MultisetGrid grid(ZZ, std::vector<GridAxis>(n, GridAxis{{Scalar(0), Scalar(1), Scalar(3)}, {1, 1, 2}}));
    PuncturedGrid pg(grid, Sets(n, std::vector<Scalar>{Scalar(1)}));
    for (unsigned t = 1; t <= 2; ++t) {
      auto mixed = mixed_basis(pg, t);
      int applied = 0;
      for (int i = 0; i < 40; ++i) {
        // (prod g/h)^t vanishes to order t psi off the puncture but not on it.
        Poly f = random_member(mixed, rng) + oracle::random_poly(ZZ, n, 2, 2, rng) * pg.outer_product().pow(t);
        REQUIRE(punctured_membership(f, pg, t) == Verdict::yes);
        auto rep = punctured_analysis(f, pg, t);
        CHECK(rep.eta == rep.cofactor * rep.divisor);
        if (rep.degrees.applies) {
          ++applied;
          CHECK(rep.degrees.holds);
        }
      }
      CHECK(applied > 0);
    }
  }
}

TEST_CASE("axis divisors combine into their product") {
  Rng rng(71);
  auto grid = MultisetGrid(ZZ, {GridAxis{{Scalar(0), Scalar(2)}, {1, 2}}, GridAxis{{Scalar(1)}, {3}}});
  const Poly prod = grid.axis_poly(0) * grid.axis_poly(1);
  for (int i = 0; i < 60; ++i) {
    Poly f = oracle::random_poly(ZZ, 2, 3, 3, rng) * prod;
    REQUIRE(divide_exact(f, grid.axis_poly(0)));
    REQUIRE(divide_exact(f, grid.axis_poly(1)));
    auto q = divide_exact(f, prod);
    REQUIRE(q);
    CHECK(*q * prod == f);
  }
}

TEST_CASE("mixed basis examples") {
  PuncturedGrid pg(grid01(1), Sets{{Scalar(0)}});
  auto b = mixed_basis(pg, 2);
  REQUIRE(b.size() == 2);
  CHECK(b[0].poly == P("(x1^2-x1)^2", 1));
  CHECK(b[1].poly == P("(x1^2-x1)*(x1-1)", 1));
  auto b1 = mixed_basis(pgrid01(2), 1);
  REQUIRE(b1.size() == 3);
  CHECK(b1[2].poly == P("(x1-1)*(x2-1)", 2));
  PuncturedGrid full(grid01(2), box01(2));
  auto bf = mixed_basis(full, 2);
  REQUIRE(bf.size() == 5);
  for (std::size_t i = 3; i < bf.size(); ++i) CHECK(bf[i].poly == power_basis(grid01(2), 1)[i - 3].poly);
}

TEST_CASE("mixed membership matches reduction and the shift oracle") {
  Rng rng(73);
  for (std::size_t n = 1; n <= 2; ++n) {
    MultisetGrid grid(ZZ, std::vector<GridAxis>(n, GridAxis{{Scalar(0), Scalar(1), Scalar(2)}, {1, 2, 1}}));
    PuncturedGrid pg(grid, Sets(n, std::vector<Scalar>{Scalar(1), Scalar(2)}));
    for (unsigned t = 1; t <= 3; ++t) {
      auto basis = mixed_basis(pg, t);
      CHECK(buchberger_certifies(basis));
      for (int i = 0; i < 60; ++i) {
        Poly f = i % 2 ? oracle::random_poly(ZZ, n, 6, 5, rng) : random_member(basis, rng);
        const bool v = mixed_membership(f, pg, t) == Verdict::yes;
        bool expected = true;
        for (const auto& a : oracle::grid_points(grid.sets()))
          expected = expected && vanishes_to(f, grid, a, in_box(a, pg.puncture()) ? long(t) - 2 : long(t) - 1);
        CHECK(v == expected);
        CHECK(v == reduce(f, basis).remainder.is_zero());
        if (i % 2 == 0) CHECK(v);
      }
      CHECK(mixed_membership(P("1", n), pg, t) == Verdict::no);
      if (t == 1) {
        for (int i = 0; i < 20; ++i) {
          auto f = oracle::random_poly(ZZ, n, 4, 4, rng) * pg.outer_product();
          CHECK(mixed_membership(f, pg, 1) == punctured_membership(f, pg, 1));
        }
      }
    }
  }
}

TEST_CASE("mixed decompositions") {
  auto pg = pgrid01(2);
  auto basis = mixed_basis(pg, 2);
  auto c = mixed_decompose(basis[0].poly, pg, 2);
  CHECK(c.quotients[0] == P("1", 2));
  CHECK(c.basis_kind == "mixed");
  auto layer = mixed_decompose(P("(x1^2-x1)*(x1-1)*(x2-1)", 2), pg, 2);
  CHECK(layer.remainder.is_zero());
  CHECK(*member_labelled(layer.basis, layer.quotients, "(1,0)*g/h") == P("1", 2));
  auto zero = mixed_decompose(P("0", 2), pg, 2);
  for (const auto& q : zero.quotients) CHECK(q.is_zero());
  CHECK_THROWS_AS(mixed_decompose(P("1", 2), pg, 2), Error);
}

TEST_CASE("minimum extra degree") {
  auto pg = pgrid01(2);
  auto x = min_extra_degree(pg, 2);
  CHECK(x.value == 4);
  CHECK(x.witness == P("(x1^2-x1)*(x1-1)*(x2-1)", 2));
  CHECK(mixed_membership(x.witness, pg, 2) == Verdict::yes);
  CHECK(in_power_ideal(x.witness, pg.base(), 2) == Verdict::no);

  MultisetGrid g(ZZ, {GridAxis{{Scalar(0), Scalar(1), Scalar(2)}, {1, 2, 3}}, GridAxis{{Scalar(0), Scalar(5)}, {2, 1}}});
  PuncturedGrid p(g, Sets{{Scalar(0)}, {Scalar(5)}});
  // t = 1: off-puncture multiplicities only, (2 + 3) + 2.
  CHECK(min_extra_degree(p, 1).value == 7);
  // Whole-grid puncture: (t-1) times the smallest axis degree.
  PuncturedGrid whole(g, g.sets());
  CHECK(min_extra_degree(whole, 3).value == 2 * 3);
  for (unsigned t = 1; t <= 3; ++t) {
    auto r = min_extra_degree(p, t);
    CHECK(Int(r.witness.degree()) == r.value);
    CHECK(mixed_membership(r.witness, p, t) == Verdict::yes);
    if (t >= 2) CHECK(in_power_ideal(r.witness, g, t) == Verdict::no);
  }
  CHECK_THROWS_AS(min_extra_degree(PuncturedGrid(grid01(2), Sets{{}, {Scalar(0)}}), 1), Error);
}

TEST_CASE("condition (D) gates every decision") {
  const auto z6 = RingSpec::integers_mod(6);
  auto grid = MultisetGrid::uniform(z6, Sets{{Scalar(0), Scalar(3)}});
  CHECK_FALSE(grid.condition_d());
  PuncturedGrid pg(grid, Sets{{Scalar(0)}});
  auto f = P("x1^2 - 3*x1", 1, z6);
  CHECK(in_power_ideal(f, grid, 1) == Verdict::inapplicable);
  CHECK(punctured_membership(f, pg, 1) == Verdict::inapplicable);
  CHECK(mixed_membership(f, pg, 1) == Verdict::inapplicable);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code([&] { power_ideal_certificate(f, grid, 1); }) == Errc::inapplicable);
  CHECK(code([&] { punctured_analysis(f, pg, 1); }) == Errc::inapplicable);
  CHECK(code([&] { mixed_decompose(f, pg, 1); }) == Errc::inapplicable);
  CHECK(code([&] { min_extra_degree(pg, 1); }) == Errc::inapplicable);
}
