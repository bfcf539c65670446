#include "nullgb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "nullgb/serialize.hpp"

namespace nullgb {
namespace {

enum Exit { kYes = 0, kNo = 1, kInapplicable = 2, kUsage = 3, kInternal = 4 };

/// `@path` reads a file; anything else is taken literally.
std::string load(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(Errc::parse_error, "cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::inapplicable: return kInapplicable;
    case Errc::not_member:
    case Errc::not_in_q:
    case Errc::not_certified:
    case Errc::uncertified_basis: return kNo;
    case Errc::internal:
    case Errc::divisibility_failure:
    case Errc::nonzero_remainder: return kInternal;
    default: return kUsage;
  }
}

std::size_t infer_nvars(const std::vector<std::string>& texts) {
  std::size_t n = 1;
  for (const auto& t : texts) n = std::max(n, Poly::parse(RingSpec::rationals(), t).nvars());
  return n;
}

struct Common {
  std::string ring = "ZZ";
  std::string format = "text";
  bool verify = false;
  std::string poly;
  std::string grid;
  long long t = 1;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json() const { return fmt == "json"; }
  std::string fmt;
};

void emit(Context& ctx, const Json& j, const std::string& text) {
  if (ctx.json())
    ctx.out << j.dump(2) << "\n";
  else
    ctx.out << text << "\n";
}

std::string checks_text(const Json& checks) {
  std::string s;
  for (const auto& [k, v] : checks.items()) s += (s.empty() ? "" : " ") + k + "=" + (v.get<bool>() ? "true" : "false");
  return s;
}

std::string outcome_text(const Json& j) {
  std::string s;
  for (const auto& [label, q] : j.at("quotients").items()) s += "quotient[" + label + "]: " + q.get<std::string>() + "\n";
  s += "remainder: " + j.at("remainder").get<std::string>() + "\n";
  s += "checks: " + checks_text(j.at("checks"));
  return s;
}

Json verification_json(const VerifyResult& v) {
  return Json{{"verified", v.ok()},
              {"witnesses", v.witnesses},
              {"checks",
               {{"identity", v.checks.identity},
                {"support", v.checks.support},
                {"remainder_reduced", v.checks.remainder_reduced},
                {"remainder_in_downset", v.checks.remainder_in_downset}}}};
}

/// Emits a certificate, optionally re-verified from its serialized form alone.
/// Returns false when verification was requested and failed.
bool emit_certificate(Context& ctx, Json j, std::string text, bool verify) {
  bool ok = true;
  if (verify) {
    const VerifyResult v = verify_certificate(Json::parse(j.dump()));
    ok = v.ok();
    j["verification"] = verification_json(v);
    text += std::string("\nverified: ") + (ok ? "true" : "false");
  }
  emit(ctx, j, text);
  return ok;
}

unsigned positive_t(long long t, bool allow_zero) {
  if (t < 0 || (!allow_zero && t == 0)) throw Error(Errc::invalid_argument, "t must be " + std::string(allow_zero ? "nonnegative" : "positive"));
  return static_cast<unsigned>(t);
}

int verdict_exit(Verdict v) { return v == Verdict::yes ? kYes : v == Verdict::no ? kNo : kInapplicable; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Groebner-basis tools for combinatorial Nullstellensatz computations", "nullgb"};
  app.require_subcommand(1);
  Common c;
  std::string fmt = "text";
  app.add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto ring_opt = [&](CLI::App* s) { s->add_option("--ring", c.ring, "ZZ, QQ, ZZ/<m> or GF(<p>)"); };
  auto fmt_opt = [&](CLI::App* s) { s->add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"})); };

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Divide f by a monic family, with support certificate");
  std::vector<std::string> gens;
  std::size_t nvars = 0;
  ring_opt(reduce_cmd);
  fmt_opt(reduce_cmd);
  reduce_cmd->add_option("--poly", c.poly, "Dividend")->required();
  reduce_cmd->add_option("--gen", gens, "Monic divisor (repeatable)")->required();
  reduce_cmd->add_option("--nvars", nvars, "Number of variables (default: inferred)");
  reduce_cmd->add_flag("--verify", c.verify, "Re-check the serialized certificate");

  // groebner-check
  auto* gb_cmd = app.add_subcommand("groebner-check", "Certify a monic family as a Groebner basis");
  std::string spec_text;
  ring_opt(gb_cmd);
  fmt_opt(gb_cmd);
  gb_cmd->add_option("--gen", gens, "Monic family member (repeatable)")->required();
  gb_cmd->add_option("--nvars", nvars, "Number of variables (default: inferred)");
  gb_cmd->add_option("--spec", spec_text, "Vanishing spec JSON; switches to staircase counting");

  // membership / certificate / normal-form
  auto* mem_cmd = app.add_subcommand("membership", "Decide f in I_t by the vanishing conditions");
  auto* cert_cmd = app.add_subcommand("certificate", "Zero-remainder certificate for f in I_t");
  auto* nf_cmd = app.add_subcommand("normal-form", "Normal form of f modulo I_t");
  for (auto* s : {mem_cmd, cert_cmd, nf_cmd}) {
    ring_opt(s);
    fmt_opt(s);
    s->add_option("--grid", c.grid, "Grid JSON, e.g. {S:[[0,1],[0,1]]}")->required();
    s->add_option("--t", c.t, "Power t")->required();
    s->add_option("--poly", c.poly, "Polynomial")->required();
  }
  cert_cmd->add_flag("--verify", c.verify, "Re-check the serialized certificate");

  // punctured
  auto* punct_cmd = app.add_subcommand("punctured", "Punctured membership and the divisibility/degree analysis");
  ring_opt(punct_cmd);
  fmt_opt(punct_cmd);
  punct_cmd->add_option("--pgrid", c.grid, "Grid JSON with puncture sets E")->required();
  punct_cmd->add_option("--t", c.t, "Power t (>= 1)")->required();
  punct_cmd->add_option("--poly", c.poly, "Polynomial")->required();

  // mixed
  auto* mixed_cmd = app.add_subcommand("mixed", "Mixed ideal membership, certificates and minimum extra degree");
  bool min_degree = false;
  ring_opt(mixed_cmd);
  fmt_opt(mixed_cmd);
  mixed_cmd->add_option("--pgrid", c.grid, "Grid JSON with puncture sets E")->required();
  mixed_cmd->add_option("--t", c.t, "Power t (>= 1)")->required();
  mixed_cmd->add_option("--poly", c.poly, "Polynomial to test and decompose");
  mixed_cmd->add_flag("--min-degree", min_degree, "Report the least degree outside I_t with a witness");
  mixed_cmd->add_flag("--verify", c.verify, "Re-check the serialized certificate");

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "Hyperplane covering audits and blocking sets");
  unsigned q = 0, n = 0;
  bool bound_only = false, search = false, distinct = false;
  std::string points_text, instance_text;
  ring_opt(cover_cmd);
  fmt_opt(cover_cmd);
  cover_cmd->add_option("--q", q, "Field size (prime)");
  cover_cmd->add_option("--n", n, "Dimension");
  cover_cmd->add_option("--t", c.t, "Blocking multiplicity t");
  cover_cmd->add_flag("--bound-only", bound_only, "Print (n+t-1)(q-1)+1 only");
  cover_cmd->add_option("--points", points_text, "Point multiset to audit, e.g. [[0,1],[1,0],[1,1]]");
  cover_cmd->add_flag("--search", search, "Exhaustively find the least blocking multiset");
  cover_cmd->add_flag("--distinct", distinct, "Search sets without repetition");
  cover_cmd->add_option("--instance", instance_text, "Covering instance JSON {pgrid, planes, t}");

  // alon-furedi
  auto* af_cmd = app.add_subcommand("alon-furedi", "Generalized Alon-Furedi bound against brute force");
  std::string sets_text, beta_text;
  ring_opt(af_cmd);
  fmt_opt(af_cmd);
  af_cmd->add_option("--poly", c.poly, "Nonzero polynomial")->required();
  af_cmd->add_option("--S", sets_text, "Grid sets, e.g. [[0,1,2],[0,1,2]]")->required();
  af_cmd->add_option("--beta", beta_text, "Exponent bound, e.g. (2,0)")->required();

  // count
  auto* count_cmd = app.add_subcommand("count", "Staircase complement sizes in closed form");
  std::string alpha_text, gamma_text;
  fmt_opt(count_cmd);
  count_cmd->add_option("--alpha", alpha_text, "Exponent vector alpha")->required();
  count_cmd->add_option("--t", c.t, "Level t")->required();
  count_cmd->add_option("--gamma", gamma_text, "Puncture exponent gamma (punctured count)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a serialized certificate");
  std::string cert_text;
  fmt_opt(verify_cmd);
  verify_cmd->add_option("--cert", cert_text, "Certificate JSON (inline or @file)")->required();

  // self-test
  auto* self_cmd = app.add_subcommand("self-test", "Randomized agreement check: vanishing test vs normal form");
  unsigned long long seed = 1;
  unsigned trials = 200;
  fmt_opt(self_cmd);
  ring_opt(self_cmd);
  self_cmd->add_option("--seed", seed, "Random seed");
  self_cmd->add_option("--trials", trials, "Number of random polynomials");
  self_cmd->add_option("--grid", c.grid, "Grid JSON (default {S:[[0,1],[0,1]]})");
  self_cmd->add_option("--t", c.t, "Power t");

  std::vector<std::string> argv_store;
  argv_store.emplace_back("nullgb");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Context ctx{out, err, fmt};
  try {
    const RingSpec ring = RingSpec::parse(c.ring);

    if (reduce_cmd->parsed() || gb_cmd->parsed()) {
      for (auto& g : gens) g = load(g);
      std::vector<std::string> texts = gens;
      if (reduce_cmd->parsed()) texts.push_back(load(c.poly));
      const std::size_t nv = nvars ? nvars : infer_nvars(texts);
      MonicFamily family(ring, nv);
      for (std::size_t i = 0; i < gens.size(); ++i) family.add(Poly::parse(ring, gens[i], nv), "g" + std::to_string(i + 1));
      if (reduce_cmd->parsed()) {
        const Poly f = Poly::parse(ring, load(c.poly), nv);
        const Json j = outcome_to_json(f, family, reduce(f, family));
        return emit_certificate(ctx, j, outcome_text(j), c.verify) ? kYes : kInternal;
      }
      if (spec_text.empty()) {
        const bool ok = buchberger_certifies(family);
        emit(ctx, Json{{"method", "s-polynomials"}, {"verdict", ok ? "certified" : "inconclusive"}},
             ok ? "certified" : "inconclusive");
        return ok ? kYes : kNo;
      }
      const VanishingSpec spec = vanishing_spec_from_json(ring, parse_lenient_json(load(spec_text)));
      const CertReport r = certify_by_staircase_count(spec, family);
      Json j = cert_report_to_json(r);
      std::string text = "zeta1: " + r.zeta1.str() + "\nzeta2: " + (r.zeta2 ? r.zeta2->str() : std::string("infinite")) +
                         "\nverdict: " + j.at("verdict").get<std::string>();
      if (r.empty_grid) text += "\nnote: empty grid, every polynomial lies in Q";
      emit(ctx, j, text);
      return r.verdict == CertVerdict::groebner ? kYes : r.verdict == CertVerdict::not_groebner ? kNo : kInapplicable;
    }

    if (mem_cmd->parsed() || cert_cmd->parsed() || nf_cmd->parsed()) {
      const MultisetGrid grid = grid_from_json(ring, parse_lenient_json(load(c.grid)));
      const unsigned t = positive_t(c.t, true);
      const Poly f = Poly::parse(grid.ring(), load(c.poly), grid.nvars());
      if (mem_cmd->parsed()) {
        const Verdict v = in_power_ideal(f, grid, t);
        emit(ctx, Json{{"member", std::string(verdict_name(v))}}, std::string(verdict_name(v)));
        return verdict_exit(v);
      }
      if (nf_cmd->parsed()) {
        const Poly r = power_ideal_normal_form(f, grid, t);
        emit(ctx, Json{{"normal_form", r.to_string()}}, r.to_string());
        return kYes;
      }
      const Certificate cert = power_ideal_certificate(f, grid, t);
      const Json j = certificate_to_json(cert);
      return emit_certificate(ctx, j, outcome_text(j) + "\nsupport_ok: " + (cert.support_ok ? "true" : "false"), c.verify)
                 ? kYes
                 : kInternal;
    }

    if (punct_cmd->parsed()) {
      const PuncturedGrid pgrid = punctured_grid_from_json(ring, parse_lenient_json(load(c.grid)));
      const unsigned t = positive_t(c.t, false);
      const Poly f = Poly::parse(pgrid.base().ring(), load(c.poly), pgrid.nvars());
      const Verdict v = punctured_membership(f, pgrid, t);
      Json j{{"member", std::string(verdict_name(v))}};
      std::string text = std::string(verdict_name(v));
      if (v == Verdict::yes) {
        const PuncturedReport r = punctured_analysis(f, pgrid, t);
        j["analysis"] = punctured_report_to_json(r);
        text += "\neta: " + r.eta.to_string() + "\ncofactor: " + r.cofactor.to_string();
        if (r.degrees.applies)
          text += "\ndegree chain: " + std::to_string(r.degrees.deg_f) + " >= " + std::to_string(r.degrees.deg_eta) +
                  " >= " + r.degrees.bound.str() + (r.degrees.holds ? " (holds)" : " (VIOLATED)");
        else
          text += "\ndegree chain: not applicable (f vanishes on the grid)";
        if (r.degrees.applies && !r.degrees.holds) {
          emit(ctx, j, text);
          return kInternal;
        }
      }
      emit(ctx, j, text);
      return verdict_exit(v);
    }

    if (mixed_cmd->parsed()) {
      const PuncturedGrid pgrid = punctured_grid_from_json(ring, parse_lenient_json(load(c.grid)));
      const unsigned t = positive_t(c.t, false);
      if (min_degree) {
        const ExtraDegree d = min_extra_degree(pgrid, t);
        emit(ctx, Json{{"value", d.value.str()}, {"axis", d.axis + 1}, {"witness", d.witness.to_string()}},
             d.value.str() + "\nwitness: " + d.witness.to_string());
        return kYes;
      }
      if (c.poly.empty()) throw Error(Errc::invalid_argument, "mixed needs --poly or --min-degree");
      const Poly f = Poly::parse(pgrid.base().ring(), load(c.poly), pgrid.nvars());
      const Verdict v = mixed_membership(f, pgrid, t);
      if (v != Verdict::yes) {
        emit(ctx, Json{{"member", std::string(verdict_name(v))}}, std::string(verdict_name(v)));
        return verdict_exit(v);
      }
      const Certificate cert = mixed_decompose(f, pgrid, t);
      Json j = certificate_to_json(cert);
      j["member"] = "true";
      return emit_certificate(ctx, j, "true\n" + outcome_text(j), c.verify) ? kYes : kInternal;
    }

    if (cover_cmd->parsed()) {
      if (!instance_text.empty()) {
        const CoverInstance inst = cover_instance_from_json(ring, parse_lenient_json(load(instance_text)));
        const CoverReport r = covering_audit(inst);
        const Json j = cover_report_to_json(inst.pgrid.base().ring(), r);
        emit(ctx, j,
             std::string(cover_verdict_name(r.verdict)) + "\nsum of degrees: " + r.degree_sum.str() +
                 "\ndeg of product: " + std::to_string(r.product_degree) + "\nbound: " + r.bound.str());
        return r.verdict == CoverVerdict::holds ? kYes : r.verdict == CoverVerdict::hypotheses_unmet ? kNo : kInternal;
      }
      if (q == 0 || n == 0) throw Error(Errc::invalid_argument, "cover needs --q and --n (or --instance)");
      const unsigned t = positive_t(c.t, false);
      const Int bound = jamison_bound(q, n, t);
      if (bound_only) {
        emit(ctx, Json{{"bound", bound.str()}}, bound.str());
        return kYes;
      }
      if (search) {
        const BlockingSearch s = min_blocking_multiset(q, n, t, distinct);
        Json ex = Json::array();
        for (const auto& p : s.example) ex.push_back(p);
        emit(ctx, Json{{"min_size", s.min_size}, {"example", ex}, {"bound", bound.str()}},
             std::to_string(s.min_size) + "\nbound: " + bound.str());
        return kYes;
      }
      if (points_text.empty()) throw Error(Errc::invalid_argument, "cover needs --bound-only, --search, --points or --instance");
      const Json pts = parse_lenient_json(load(points_text));
      std::vector<std::vector<unsigned>> y;
      for (const auto& p : pts) y.push_back(p.get<std::vector<unsigned>>());
      const BlockingReport r = blocking_set_audit(q, n, t, y);
      Json j{{"blocked", r.blocked}, {"hyperplanes", r.hyperplanes}, {"size", r.size}, {"bound", r.bound.str()}};
      if (r.unblocked) j["unblocked"] = Json{{"normal", r.unblocked->normal}, {"offset", r.unblocked->offset}};
      emit(ctx, j, std::string(r.blocked ? "blocked" : "not blocked") + "\nsize: " + std::to_string(r.size) +
                       "\nbound: " + r.bound.str());
      return r.blocked ? kYes : kNo;
    }

    if (af_cmd->parsed()) {
      const Poly f = Poly::parse(ring, load(c.poly));
      const ExpVec beta = ExpVec::parse(beta_text);
      const Json sj = parse_lenient_json(load(sets_text));
      std::vector<std::vector<Scalar>> sets;
      for (const auto& s : sj) sets.push_back(set_from_json(ring, s));
      const std::size_t nv = std::max(f.nvars(), sets.size());
      const Poly fx = Poly::parse(ring, load(c.poly), nv);
      const AlonFurediReport r = alon_furedi(fx, sets, beta);
      emit(ctx, alon_furedi_to_json(r),
           "mu: " + r.mu.to_string() + "\nbound: " + r.bound.str() + "\nactual: " + r.actual.str());
      return r.holds ? kYes : kInternal;
    }

    if (count_cmd->parsed()) {
      const ExpVec alpha = ExpVec::parse(alpha_text);
      if (c.t < 0) throw Error(Errc::invalid_argument, "t must be nonnegative");
      const unsigned t = static_cast<unsigned>(c.t);
      const Int v = gamma_text.empty() ? count_grid_complement(alpha, t)
                                       : count_punctured_complement(alpha, ExpVec::parse(gamma_text), t);
      emit(ctx, Json{{"count", v.str()}}, v.str());
      return kYes;
    }

    if (verify_cmd->parsed()) {
      const VerifyResult v = verify_certificate(parse_lenient_json(load(cert_text)));
      emit(ctx, verification_json(v), std::string("verified: ") + (v.ok() ? "true" : "false"));
      return v.ok() ? kYes : kNo;
    }

    if (self_cmd->parsed()) {
      const MultisetGrid grid =
          grid_from_json(ring, parse_lenient_json(c.grid.empty() ? std::string("{S:[[0,1],[0,1]]}") : load(c.grid)));
      const unsigned t = positive_t(c.t, true);
      std::mt19937_64 rng(seed);
      const MonicFamily basis = power_basis(grid, t);
      std::size_t members = 0, disagreements = 0;
      for (unsigned i = 0; i < trials; ++i) {
        Poly f(grid.ring(), grid.nvars());
        for (int k = 0; k < 4; ++k) {
          ExpVec e(grid.nvars());
          for (std::size_t a = 0; a < e.size(); ++a) e[a] = static_cast<ExpVec::value_type>(rng() % 4);
          f.add_term(e, grid.ring().from_int(Int(static_cast<long long>(rng() % 7) - 3)));
        }
        if (i % 2 == 1 && !basis.empty()) f = f * basis[rng() % basis.size()].poly;
        const Verdict v = in_power_ideal(f, grid, t);
        if (v == Verdict::inapplicable) throw Error(Errc::inapplicable, "Condition (D) fails on some axis");
        const bool by_nf = power_ideal_normal_form(f, grid, t).is_zero();
        members += by_nf;
        disagreements += (v == Verdict::yes) != by_nf;
      }
      emit(ctx, Json{{"trials", trials}, {"members", members}, {"disagreements", disagreements}},
           "trials: " + std::to_string(trials) + "\nmembers: " + std::to_string(members) +
               "\ndisagreements: " + std::to_string(disagreements));
      return disagreements == 0 ? kYes : kInternal;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace nullgb
