// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

#include "nullgb/cli.hpp"
#include "support/oracles.hpp"

using namespace nullgb;
using oracle::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit_s << " s";
    o.fail(s.str());
  }
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.empty() ? "" : " - ", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

/// Every vector in [0, top]^n for n = 1..3.
void for_small_vectors(unsigned top, const std::function<void(const ExpVec&)>& fn) {
  for (std::size_t n = 1; n <= 3; ++n) oracle::for_box(std::vector<unsigned>(n, top + 1), fn);
}

// Axis types of the grid sweep: (set, multiplicities) with |S| <= 2 and psi <= 2.
struct AxisType {
  std::vector<long> points;
  std::vector<unsigned> psi;
};
const std::vector<AxisType> kAxisTypes{
    {{}, {}}, {{0}, {1}}, {{0}, {2}}, {{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}, {{0, 1}, {2, 1}}, {{0, 1}, {2, 2}},
};

MultisetGrid make_grid(const RingSpec& ring, const std::vector<std::size_t>& types) {
  std::vector<GridAxis> axes;
  for (auto k : types) {
    GridAxis ax;
    for (auto p : kAxisTypes[k].points) ax.points.push_back(ring.from_int(Int(p)));
    ax.psi = kAxisTypes[k].psi;
    axes.push_back(std::move(ax));
  }
  return MultisetGrid(ring, std::move(axes));
}

/// Every ordered grid of the sweep, n = 1..3, with t = 0..3, over ZZ and GF(5).
void for_each_sweep_config(const std::function<void(const MultisetGrid&, unsigned)>& fn) {
  for (const auto& ring : {RingSpec::integers(), RingSpec::prime_field(5)})
    for (std::size_t n = 1; n <= 3; ++n)
      oracle::for_box(std::vector<unsigned>(n, static_cast<unsigned>(kAxisTypes.size())), [&](const ExpVec& code) {
        std::vector<std::size_t> types(code.begin(), code.end());
        const MultisetGrid grid = make_grid(ring, types);
        for (unsigned t = 0; t <= 3; ++t) fn(grid, t);
      });
}

std::string describe(const MultisetGrid& g, unsigned t) {
  std::ostringstream s;
  s << g.ring().to_string() << " n=" << g.nvars() << " t=" << t;
  for (std::size_t k = 0; k < g.nvars(); ++k) s << " g" << k + 1 << "=" << g.axis_poly(k).to_string();
  return s.str();
}

Poly random_combination(const MonicFamily& fam, std::size_t n, Rng& rng) {
  Poly f(fam.ring(), n);
  if (fam.empty()) return f;
  const long count = oracle::uniform(rng, 1, 2);
  for (long i = 0; i < count; ++i) {
    const auto& g = fam[static_cast<std::size_t>(oracle::uniform(rng, 0, long(fam.size()) - 1))].poly;
    f += oracle::random_poly(fam.ring(), n, 2, 2, rng) * g;
  }
  return f;
}

/// Whether f vanishes to order t at every point of prod S outside prod E (psi = 1), by substitution.
bool punctured_oracle(const Poly& f, const std::vector<std::vector<Scalar>>& sets, const std::vector<Scalar>& origin,
                      unsigned t) {
  for (const auto& a : oracle::grid_points(sets)) {
    if (a == origin) continue;
    const Poly shifted = oracle::substitute_shift(f, a);
    for (const auto& [e, c] : shifted.terms())
      if (e.total_degree() + 1 <= t) return false;
  }
  return true;
}

}  // namespace

int main() {
  run(1, "staircase counts equal lattice enumeration", 10, [](Outcome& o) {
    std::size_t checked = 0;
    for_small_vectors(3, [&](const ExpVec& alpha) {
      const std::size_t n = alpha.size();
      const ExpVec zero(n);
      for (unsigned t = 0; t <= 3; ++t) {
        const auto plain = oracle::lattice_count(alpha, t, oracle::simplex_generators(alpha, t, zero));
        if (count_grid_complement(alpha, t) != Int(plain)) o.fail("grid count at " + alpha.to_string());
        ++checked;
        std::vector<unsigned> top(alpha.begin(), alpha.end());
        for (auto& x : top) ++x;
        oracle::for_box(top, [&](const ExpVec& gamma) {
          if (t == 0) {
            // The punctured staircase is defined for t >= 1 only; t = 0 must be rejected.
            try {
              count_punctured_complement(alpha, gamma, 0);
              o.fail("punctured count accepted t = 0");
            } catch (const Error& e) {
              if (e.code() != Errc::invalid_argument) o.fail("wrong error for t = 0");
            }
            return;
          }
          auto gens = oracle::simplex_generators(alpha, t, zero);
          const auto shifted = oracle::simplex_generators(alpha, t - 1, alpha - gamma);
          gens.insert(gens.end(), shifted.begin(), shifted.end());
          if (count_punctured_complement(alpha, gamma, t) != Int(oracle::lattice_count(alpha, t, gens)))
            o.fail("punctured count at alpha=" + alpha.to_string() + " gamma=" + gamma.to_string());
          ++checked;
        });
      }
    });
    o.detail = o.pass ? std::to_string(checked) + " counts" : o.detail;
  });

  run(2, "division certificates on random inputs", 30, [](Outcome& o) {
    Rng rng(20240601);
    std::size_t checked = 0;
    for (const auto& ring : {RingSpec::integers(), RingSpec::integers_mod(6)}) {
      for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        MonicFamily fam(ring, n);
        const long size = oracle::uniform(rng, 1, 3);
        for (long k = 0; k < size; ++k) fam.add(oracle::random_monic(ring, n, 4, rng));
        const Poly f = oracle::random_poly(ring, n, 6, 6, rng);
        const auto out = reduce(f, fam);
        if (!oracle::division_conditions_hold(f, fam, out)) o.fail("conditions fail for f = " + f.to_string());
        if (!check_outcome(f, fam, out.quotients, out.remainder).all()) o.fail("library audit disagrees");
        const auto again = reduce(out.remainder, fam);
        if (!(again.remainder == out.remainder) || again.steps != 0) o.fail("not idempotent on " + out.remainder.to_string());
        ++checked;
      }
    }
    if (o.pass) o.detail = std::to_string(checked) + " pairs (1000 over ZZ, 1000 over ZZ/6)";
  });

  run(3, "power bases pass the s-polynomial test across the grid sweep", 60, [](Outcome& o) {
    std::size_t configs = 0;
    for_each_sweep_config([&](const MultisetGrid& grid, unsigned t) {
      if (!buchberger_certifies(power_basis(grid, t))) o.fail(describe(grid, t));
      ++configs;
    });
    if (o.pass) o.detail = std::to_string(configs) + " configurations";
  });

  run(4, "vanishing test agrees with zero normal form", 0, [](Outcome& o) {
    Rng rng(777);
    std::size_t configs = 0, polys = 0, members = 0;
    for_each_sweep_config([&](const MultisetGrid& grid, unsigned t) {
      const std::size_t n = grid.nvars();
      const CertifiedBasis basis = certified_power_basis(grid, t);
      std::size_t here = 0;
      for (int i = 0; i < 1000; ++i) {
        Poly f = oracle::random_poly(grid.ring(), n, 4, 4, rng);
        // Mix pure members, perturbed members and arbitrary polynomials.
        if (i % 3 == 0) f = random_combination(basis.family(), n, rng);
        else if (i % 3 == 1) f = random_combination(basis.family(), n, rng) + oracle::random_poly(grid.ring(), n, 1, 1, rng);
        const Verdict v = in_power_ideal(f, grid, t);
        const bool nf_zero = normal_form(f, basis).is_zero();
        if (v == Verdict::inapplicable || (v == Verdict::yes) != nf_zero)
          o.fail(describe(grid, t) + " f = " + f.to_string());
        members += nf_zero;
        ++here;
      }
      polys += here;
      ++configs;
    });
    if (o.pass)
      o.detail = std::to_string(configs) + " configurations, " + std::to_string(polys) + " polynomials (" +
                 std::to_string(members) + " members), 0 disagreements";
  });

  run(5, "punctured pipeline and the minimum extra degree", 0, [](Outcome& o) {
    Rng rng(4242);
    std::size_t sampled = 0, bound_checked = 0;
    for (const auto& ring : {RingSpec::integers(), RingSpec::prime_field(5)}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        const std::vector<std::vector<Scalar>> sets(n, {ring.zero(), ring.one()});
        const std::vector<std::vector<Scalar>> punct(n, {ring.zero()});
        const std::vector<Scalar> origin(n, ring.zero());
        const PuncturedGrid pgrid(MultisetGrid::uniform(ring, sets), punct);
        Poly outer = Poly::constant(ring, n, ring.one());
        for (std::size_t k = 0; k < n; ++k) outer = outer * Poly::parse(ring, "x" + std::to_string(k + 1) + " - 1", n);
        if (!(pgrid.outer_product() == outer)) o.fail("outer product for n = " + std::to_string(n));
        for (unsigned t = 1; t <= 2; ++t) {
          const MonicFamily mixed = mixed_basis(pgrid, t);
          const long bound = long(t) - 1 + long(n);
          for (int i = 0; i < 150; ++i) {
            Poly f = random_combination(mixed, n, rng) + oracle::random_poly(ring, n, 2, 2, rng) * outer.pow(t);
            if (f.is_zero()) continue;
            if (!punctured_oracle(f, sets, origin, t)) o.fail("sampler produced a non-member");
            if (punctured_membership(f, pgrid, t) != Verdict::yes) o.fail("membership rejects " + f.to_string());
            const PuncturedReport r = punctured_analysis(f, pgrid, t);
            const auto q = divide_exact(r.eta, outer);
            if (!q || !(r.divisor == outer) || !(r.cofactor * r.divisor == r.eta))
              o.fail("divisibility fails for " + f.to_string());
            const bool nonvanishing = !oracle::vanishes_on(f, oracle::grid_points(sets));
            if (r.degrees.applies != nonvanishing) o.fail("applicability flag wrong for " + f.to_string());
            if (nonvanishing) {
              if (!(f.degree() >= r.eta.degree() && r.eta.degree() >= bound && r.degrees.holds))
                o.fail("degree chain fails for " + f.to_string());
              ++bound_checked;
            }
            ++sampled;
          }
          // Each axis poly has degree 2 and one off-puncture root.
          const ExtraDegree d = min_extra_degree(pgrid, t);
          const long value = 2 * (long(t) - 1) + long(n);
          if (d.value != Int(value) || d.witness.degree() != value) o.fail("extra degree value for n, t");
          if (mixed_membership(d.witness, pgrid, t) != Verdict::yes) o.fail("witness outside the mixed ideal");
          if (in_power_ideal(d.witness, pgrid.base(), t) != Verdict::no) o.fail("witness lies in I_t");
        }
      }
    }
    // Minimality by exhaustion over GF(2) for n <= 2: no lower-degree member of the mixed ideal escapes I_t.
    const RingSpec f2 = RingSpec::prime_field(2);
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
      const PuncturedGrid pgrid(MultisetGrid::uniform(f2, std::vector<std::vector<Scalar>>(n, {f2.zero(), f2.one()})),
                                std::vector<std::vector<Scalar>>(n, {f2.zero()}));
      for (unsigned t = 1; t <= 2; ++t) {
        const long value = min_extra_degree(pgrid, t).value.convert_to<long>();
        std::vector<ExpVec> monos;
        oracle::for_box(std::vector<unsigned>(n, unsigned(value)), [&](const ExpVec& e) {
          if (long(e.total_degree()) < value) monos.push_back(e);
        });
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << monos.size()); ++mask) {
          Poly f(f2, n);
          for (std::size_t j = 0; j < monos.size(); ++j)
            if (mask >> j & 1) f.add_term(monos[j], f2.one());
          if (mixed_membership(f, pgrid, t) == Verdict::yes && in_power_ideal(f, pgrid.base(), t) != Verdict::yes)
            o.fail("lower-degree escapee " + f.to_string());
          ++exhaustive;
        }
      }
    }
    if (o.pass)
      o.detail = std::to_string(sampled) + " members, " + std::to_string(bound_checked) + " degree bounds, " +
                 std::to_string(exhaustive) + " GF(2) polynomials below the minimum";
  });

  run(6, "minimal affine blocking sets match the Jamison bound", 60, [](Outcome& o) {
    for (auto [q, size] : {std::pair<unsigned, std::size_t>{2, 3}, {3, 5}}) {
      const BlockingSearch s = min_blocking_multiset(q, 2, 1);
      if (s.min_size != size) o.fail("AG(2," + std::to_string(q) + ") minimum " + std::to_string(s.min_size));
      if (jamison_bound(q, 2, 1) != Int(size)) o.fail("bound for q = " + std::to_string(q));
      if (!blocking_set_audit(q, 2, 1, s.example).blocked) o.fail("reported example does not block");
      if (some_blocking_set_of_size(q, 2, 1, size - 1, true)) o.fail("a smaller subset blocks");
    }
    if (o.pass) o.detail = "sizes 3 and 5; no 2-subset of AG(2,2) or 4-subset of AG(2,3) blocks";
  });

  run(7, "Alon-Furedi bound over GF(2), n = 2", 0, [](Outcome& o) {
    const RingSpec f2 = RingSpec::prime_field(2);
    const std::vector<std::vector<Scalar>> sets(2, {f2.zero(), f2.one()});
    std::size_t polys = 0;
    oracle::for_box({2, 2}, [&](const ExpVec& beta) {
      std::vector<ExpVec> monos;
      oracle::for_box({unsigned(beta[0]) + 1, unsigned(beta[1]) + 1}, [&](const ExpVec& e) { monos.push_back(e); });
      bool sharp = false;
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << monos.size()); ++mask) {
        Poly f(f2, 2);
        for (std::size_t j = 0; j < monos.size(); ++j)
          if (mask >> j & 1) f.add_term(monos[j], f2.one());
        const AlonFurediReport r = alon_furedi(f, sets, beta);
        // Independent count of nonzeros on the grid.
        std::size_t nonzero = 0;
        for (const auto& a : oracle::grid_points(sets)) nonzero += !f2.is_zero(evaluate(f, a));
        if (r.actual != Int(nonzero)) o.fail("nonzero count for " + f.to_string());
        if (!(r.bound <= r.actual) || !r.holds) o.fail("bound exceeds count for " + f.to_string());
        sharp = sharp || r.bound == r.actual;
        ++polys;
      }
      if (!sharp) o.fail("no f attains the bound for beta = " + beta.to_string());
    });
    if (o.pass) o.detail = std::to_string(polys) + " polynomials, equality attained for every beta <= (1,1)";
  });

  run(8, "Condition (D) gating over ZZ/6 with S = {0,3}", 0, [](Outcome& o) {
    const RingSpec z6 = RingSpec::integers_mod(6);
    const std::vector<std::vector<Scalar>> one_axis{{Scalar(0), Scalar(3)}};
    const MultisetGrid grid = MultisetGrid::uniform(z6, one_axis);
    const PuncturedGrid pgrid(grid, {{Scalar(0)}});
    const Poly f = Poly::parse(z6, "x1^2 - 3*x1", 1);
    std::size_t ops = 0;
    auto expect_verdict = [&](const char* name, Verdict v) {
      ++ops;
      if (v != Verdict::inapplicable) o.fail(std::string(name) + " returned " + std::string(verdict_name(v)));
    };
    auto expect_throw = [&](const char* name, const std::function<void()>& fn) {
      ++ops;
      try {
        fn();
        o.fail(std::string(name) + " returned a result");
      } catch (const Error& e) {
        if (e.code() != Errc::inapplicable) o.fail(std::string(name) + " raised " + e.what());
      }
    };
    for (unsigned t = 1; t <= 2; ++t) {
      expect_verdict("in_power_ideal", in_power_ideal(f, grid, t));
      expect_verdict("punctured_membership", punctured_membership(f, pgrid, t));
      expect_verdict("mixed_membership", mixed_membership(f, pgrid, t));
      expect_throw("certified_power_basis", [&] { certified_power_basis(grid, t); });
      expect_throw("power_ideal_certificate", [&] { power_ideal_certificate(f, grid, t); });
      expect_throw("power_ideal_normal_form", [&] { power_ideal_normal_form(f, grid, t); });
      expect_throw("punctured_analysis", [&] { punctured_analysis(f, pgrid, t); });
      expect_throw("mixed_decompose", [&] { mixed_decompose(f, pgrid, t); });
      expect_throw("min_extra_degree", [&] { min_extra_degree(pgrid, t); });
      expect_throw("covering_audit", [&] { covering_audit(CoverInstance{pgrid, {}, t}); });
    }
    expect_throw("alon_furedi", [&] { alon_furedi(Poly::parse(z6, "x1", 1), one_axis, ExpVec{1}); });
    {
      VanishingSpec::BMap b;
      for (const auto& a : oracle::grid_points(one_axis)) b[a] = MonomialSet{ExpVec{1}};
      const CertReport r = certify_by_staircase_count(VanishingSpec(z6, one_axis, b), power_basis(grid, 1));
      ++ops;
      if (r.verdict != CertVerdict::inapplicable) o.fail("staircase certification gave a verdict");
    }
    // The command line maps the outcome to exit code 2 and prints no boolean.
    const std::vector<std::vector<std::string>> commands{
        {"membership", "--ring", "ZZ/6", "--grid", "{S:[[0,3]]}", "--t", "1", "--poly", "x1"},
        {"certificate", "--ring", "ZZ/6", "--grid", "{S:[[0,3]]}", "--t", "1", "--poly", "x1^2-3*x1"},
        {"normal-form", "--ring", "ZZ/6", "--grid", "{S:[[0,3]]}", "--t", "1", "--poly", "x1"},
        {"punctured", "--ring", "ZZ/6", "--pgrid", "{S:[[0,3]],E:[[0]]}", "--t", "1", "--poly", "x1"},
        {"mixed", "--ring", "ZZ/6", "--pgrid", "{S:[[0,3]],E:[[0]]}", "--t", "1", "--poly", "x1"},
        {"mixed", "--ring", "ZZ/6", "--pgrid", "{S:[[0,3]],E:[[0]]}", "--t", "1", "--min-degree"},
        {"alon-furedi", "--ring", "ZZ/6", "--poly", "x1", "--S", "[[0,3]]", "--beta", "(1,)"},
        {"self-test", "--ring", "ZZ/6", "--grid", "{S:[[0,3]]}", "--t", "1"},
    };
    for (const auto& args : commands) {
      std::ostringstream out, err;
      const int code = run_cli(args, out, err);
      ++ops;
      if (code != 2 || out.str().find("true") != std::string::npos || out.str().find("false") != std::string::npos)
        o.fail("cli " + args[0] + " exit " + std::to_string(code));
    }
    if (o.pass) o.detail = std::to_string(ops) + " gated calls, all inapplicable";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
