#include "nullgb/serialize.hpp"

#include <cctype>

namespace nullgb {

Json parse_lenient_json(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 16);
  bool in_string = false;
  char last_sig = 0;  // last significant character outside strings
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) {
        out += text[++i];
      } else if (c == '"') {
        in_string = false;
        last_sig = '"';
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
      out += c;
      continue;
    }
    const bool ident_start = std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    if (ident_start && (last_sig == '{' || last_sig == ',')) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::size_t k = j;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == ':') {
        out += '"';
        out.append(text.substr(i, j - i));
        out += '"';
        i = j - 1;
        last_sig = '"';
        continue;
      }
    }
    out += c;
    if (!std::isspace(static_cast<unsigned char>(c))) last_sig = c;
  }
  try {
    return Json::parse(out);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

Scalar scalar_from_json(const RingSpec& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_int(Int(j.get<long long>()));
  if (j.is_string()) return ring.parse_element(j.get<std::string>());
  throw Error(Errc::parse_error, "ring element must be an integer or a string, got " + j.dump());
}

Json scalar_to_json(const RingSpec& ring, const Scalar& x) {
  if (x.den == 1 && x.num >= std::numeric_limits<long long>::min() && x.num <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x.num));
  return Json(ring.format(x));
}

std::vector<Scalar> set_from_json(const RingSpec& ring, const Json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "expected a list of ring elements, got " + j.dump());
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(ring, x));
  return out;
}

namespace {

RingSpec ring_override(const RingSpec& ring, const Json& j) {
  if (j.is_object() && j.contains("ring")) return RingSpec::parse(j.at("ring").get<std::string>());
  return ring;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::parse_error, std::string("missing key '") + key + "'");
  return j.at(key);
}

unsigned mult_from_json(const Json& m) {
  if (!m.is_number_integer()) throw Error(Errc::parse_error, "multiplicity must be an integer");
  long long v = m.get<long long>();
  if (v <= 0) throw Error(Errc::non_positive_multiplicity, "multiplicity " + std::to_string(v));
  return static_cast<unsigned>(v);
}

GridAxis axis_from_json(const RingSpec& ring, const Json& s, const Json* psi) {
  GridAxis ax;
  ax.points = set_from_json(ring, s);
  for (auto& u : ax.points) u = RingElement(ring, u).value();
  ax.psi.assign(ax.points.size(), 1);
  if (!psi || psi->is_null()) return ax;
  if (psi->is_array()) {
    if (psi->size() != ax.points.size()) throw Error(Errc::parse_error, "psi list length differs from S");
    for (std::size_t i = 0; i < ax.points.size(); ++i) ax.psi[i] = mult_from_json((*psi)[i]);
  } else if (psi->is_object()) {
    for (const auto& [key, val] : psi->items()) {
      Scalar u = ring.parse_element(key);
      auto it = std::find(ax.points.begin(), ax.points.end(), u);
      if (it == ax.points.end()) throw Error(Errc::parse_error, "psi given for " + key + ", which is not in S");
      ax.psi[static_cast<std::size_t>(it - ax.points.begin())] = mult_from_json(val);
    }
  } else {
    throw Error(Errc::parse_error, "psi must be a list or an object");
  }
  return ax;
}

}  // namespace

MultisetGrid grid_from_json(const RingSpec& ring_in, const Json& j) {
  const RingSpec ring = ring_override(ring_in, j);
  std::vector<GridAxis> axes;
  if (j.contains("axes")) {
    for (const auto& a : j.at("axes")) {
      const Json* psi = a.contains("psi") ? &a.at("psi") : nullptr;
      axes.push_back(axis_from_json(ring, require(a, "S"), psi));
    }
  } else {
    const Json& s = require(j, "S");
    if (!s.is_array()) throw Error(Errc::parse_error, "S must be a list of sets");
    const Json* psi = j.contains("psi") ? &j.at("psi") : nullptr;
    if (psi && (!psi->is_array() || psi->size() != s.size()))
      throw Error(Errc::parse_error, "psi must hold one entry per axis");
    for (std::size_t k = 0; k < s.size(); ++k) axes.push_back(axis_from_json(ring, s[k], psi ? &(*psi)[k] : nullptr));
  }
  return MultisetGrid(ring, std::move(axes));
}

PuncturedGrid punctured_grid_from_json(const RingSpec& ring_in, const Json& j) {
  MultisetGrid base = grid_from_json(ring_in, j);
  const Json& e = require(j, "E");
  if (!e.is_array() || e.size() != base.nvars()) throw Error(Errc::parse_error, "E must hold one set per axis");
  std::vector<std::vector<Scalar>> punct;
  for (const auto& s : e) punct.push_back(set_from_json(base.ring(), s));
  return PuncturedGrid(std::move(base), std::move(punct));
}

Json grid_to_json(const MultisetGrid& grid) {
  Json axes = Json::array();
  for (const auto& ax : grid.axes()) {
    Json s = Json::array();
    Json psi = Json::object();
    for (std::size_t i = 0; i < ax.points.size(); ++i) {
      s.push_back(scalar_to_json(grid.ring(), ax.points[i]));
      psi[grid.ring().format(ax.points[i])] = ax.psi[i];
    }
    axes.push_back(Json{{"S", s}, {"psi", psi}});
  }
  return Json{{"ring", grid.ring().to_string()}, {"axes", axes}};
}

Json punctured_grid_to_json(const PuncturedGrid& pgrid) {
  Json j = grid_to_json(pgrid.base());
  Json e = Json::array();
  for (const auto& s : pgrid.puncture()) {
    Json row = Json::array();
    for (const auto& u : s) row.push_back(scalar_to_json(pgrid.base().ring(), u));
    e.push_back(row);
  }
  j["E"] = e;
  return j;
}

VanishingSpec vanishing_spec_from_json(const RingSpec& ring_in, const Json& j) {
  const RingSpec ring = ring_override(ring_in, j);
  const Json& s = require(j, "S");
  std::vector<std::vector<Scalar>> sets;
  for (const auto& row : s) sets.push_back(set_from_json(ring, row));
  VanishingSpec::BMap b;
  for (const auto& [key, gens] : require(j, "B").items()) {
    // Keys look like "(0,1)"; split on commas inside the parentheses.
    std::string_view k = key;
    while (!k.empty() && std::isspace(static_cast<unsigned char>(k.front()))) k.remove_prefix(1);
    while (!k.empty() && std::isspace(static_cast<unsigned char>(k.back()))) k.remove_suffix(1);
    if (k.size() < 2 || k.front() != '(' || k.back() != ')') throw Error(Errc::parse_error, "bad grid point key " + key);
    k = k.substr(1, k.size() - 2);
    Point a;
    while (!k.empty()) {
      auto comma = k.find(',');
      auto part = k.substr(0, comma);
      if (!part.empty() && part.find_first_not_of(" \t") != std::string_view::npos) a.push_back(ring.parse_element(part));
      if (comma == std::string_view::npos) break;
      k.remove_prefix(comma + 1);
    }
    MonomialSet m;
    for (const auto& e : gens) {
      if (!e.is_array()) throw Error(Errc::parse_error, "exponent vectors must be lists");
      ExpVec v(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        long long x = e[i].get<long long>();
        if (x < 0) throw Error(Errc::parse_error, "negative exponent");
        v[i] = static_cast<ExpVec::value_type>(x);
      }
      if (v.size() != sets.size()) throw Error(Errc::arity_mismatch, "exponent vector length differs from n");
      m.insert(v);
    }
    if (a.size() != sets.size()) throw Error(Errc::arity_mismatch, "grid point key " + key + " has wrong length");
    b[a] = std::move(m);
  }
  return VanishingSpec(ring, std::move(sets), std::move(b));
}

namespace {
Json expvec_json(const ExpVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}
Json point_json(const RingSpec& ring, const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(scalar_to_json(ring, x));
  return a;
}
Json int_json(const Int& x) {
  if (x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}
}  // namespace

Json vanishing_spec_to_json(const VanishingSpec& spec) {
  Json s = Json::array();
  for (const auto& row : spec.sets()) s.push_back(point_json(spec.ring(), row));
  Json b = Json::object();
  for (const auto& [a, gens] : spec.generators()) {
    Json g = Json::array();
    for (const auto& e : gens) g.push_back(expvec_json(e));
    b[point_to_string(spec.ring(), a)] = g;
  }
  return Json{{"ring", spec.ring().to_string()}, {"S", s}, {"B", b}};
}

Json cert_report_to_json(const CertReport& r) {
  Json d = Json::array();
  for (bool x : r.condition_d) d.push_back(x);
  const char* verdict = r.verdict == CertVerdict::groebner       ? "groebner"
                        : r.verdict == CertVerdict::not_groebner ? "not_groebner"
                                                                 : "inapplicable";
  return Json{{"condition_D", d},
              {"zeta1", int_json(r.zeta1)},
              {"zeta2", r.zeta2 ? int_json(*r.zeta2) : Json("infinite")},
              {"verdict", verdict},
              {"groebner", r.verdict == CertVerdict::groebner},
              {"empty_grid", r.empty_grid}};
}

CoverInstance cover_instance_from_json(const RingSpec& ring_in, const Json& j) {
  const RingSpec ring = ring_override(ring_in, j);
  PuncturedGrid pgrid = punctured_grid_from_json(ring, require(j, "pgrid"));
  std::vector<Plane> planes;
  for (const auto& p : require(j, "planes")) {
    Poly rho = Poly::parse(pgrid.base().ring(), require(p, "poly").get<std::string>(), pgrid.nvars());
    unsigned deg = p.contains("degree") ? p.at("degree").get<unsigned>()
                                        : static_cast<unsigned>(std::max<Degree>(rho.degree(), 0));
    planes.push_back(Plane{std::move(rho), deg});
  }
  long long t = j.contains("t") ? j.at("t").get<long long>() : 1;
  if (t <= 0) throw Error(Errc::invalid_argument, "t must be positive");
  return CoverInstance{std::move(pgrid), std::move(planes), static_cast<unsigned>(t)};
}

Json cover_report_to_json(const RingSpec& ring, const CoverReport& r) {
  Json hyp{{"covering", r.covering_ok},
           {"uncovered_point", r.uncovered_point ? point_json(ring, *r.uncovered_point) : Json()},
           {"nonvanishing_product", r.witness.has_value()},
           {"witness", r.witness ? point_json(ring, *r.witness) : Json()}};
  return Json{{"hypotheses", hyp},
              {"lhs", int_json(r.degree_sum)},
              {"product_degree", r.product_degree == neg_inf_degree ? Json("-inf") : Json(r.product_degree)},
              {"bound", int_json(r.bound)},
              {"verdict", std::string(cover_verdict_name(r.verdict))}};
}

namespace {

Json outcome_core(const Poly& f, const MonicFamily& family, const std::vector<Poly>& quotients, const Poly& remainder,
                  const OutcomeChecks& checks) {
  Json gens = Json::array();
  for (const auto& m : family)
    gens.push_back(Json{{"label", m.label}, {"poly", m.poly.to_string()}, {"theta", m.theta.to_string()}});
  Json q = Json::object();
  for (std::size_t i = 0; i < family.size(); ++i) q[family[i].label] = quotients[i].to_string();
  return Json{{"ring", f.ring().to_string()},
              {"nvars", f.nvars()},
              {"generators", gens},
              {"f", f.to_string()},
              {"quotients", q},
              {"remainder", remainder.to_string()},
              {"checks",
               {{"identity", checks.identity},
                {"support", checks.support},
                {"remainder_reduced", checks.remainder_reduced},
                {"remainder_in_downset", checks.remainder_in_downset}}}};
}

}  // namespace

Json outcome_to_json(const Poly& f, const MonicFamily& family, const ReductionOutcome& out) {
  return outcome_core(f, family, out.quotients, out.remainder, check_outcome(f, family, out.quotients, out.remainder));
}

Json degree_report_to_json(const RingSpec& ring, const DegreeReport& d) {
  auto deg = [](Degree x) { return x == neg_inf_degree ? Json("-inf") : Json(x); };
  return Json{{"deg_f", deg(d.deg_f)},
              {"deg_eta", deg(d.deg_eta)},
              {"bound", int_json(d.bound)},
              {"applies", d.applies},
              {"nonvanishing_at", d.nonvanishing_at ? point_json(ring, *d.nonvanishing_at) : Json()},
              {"holds", d.holds}};
}

Json certificate_to_json(const Certificate& cert) {
  Json j = outcome_core(cert.f, cert.basis, cert.quotients, cert.remainder, cert.checks);
  j["support_ok"] = cert.support_ok;
  j["basis"] = cert.basis_kind;
  j["t"] = cert.t;
  j["degree_report"] = cert.degree_report ? degree_report_to_json(cert.f.ring(), *cert.degree_report) : Json();
  return j;
}

Json punctured_report_to_json(const PuncturedReport& r) {
  return Json{{"eta", r.eta.to_string()},
              {"divisor", r.divisor.to_string()},
              {"cofactor", r.cofactor.to_string()},
              {"degree_report", degree_report_to_json(r.eta.ring(), r.degrees)}};
}

Json alon_furedi_to_json(const AlonFurediReport& r) {
  return Json{{"mu", expvec_json(r.mu)}, {"bound", int_json(r.bound)}, {"actual", int_json(r.actual)}, {"holds", r.holds}};
}

VerifyResult verify_certificate(const Json& cert) {
  const RingSpec ring = RingSpec::parse(require(cert, "ring").get<std::string>());
  const std::size_t n = require(cert, "nvars").get<std::size_t>();
  VerifyResult res;
  res.witnesses = true;
  MonicFamily family(ring, n);
  for (const auto& g : require(cert, "generators")) {
    Poly p = Poly::parse(ring, require(g, "poly").get<std::string>(), n);
    ExpVec stated = ExpVec::parse(require(g, "theta").get<std::string>());
    auto w = is_monic(p);
    if (!w || !(w->theta == stated)) {
      res.witnesses = false;
      return res;
    }
    family.add(std::move(p), require(g, "label").get<std::string>());
  }
  const Poly f = Poly::parse(ring, require(cert, "f").get<std::string>(), n);
  std::vector<Poly> quotients(family.size(), Poly(ring, n));
  for (const auto& [label, text] : require(cert, "quotients").items()) {
    auto it = std::find_if(family.begin(), family.end(), [&](const FamilyMember& m) { return m.label == label; });
    if (it == family.end()) throw Error(Errc::parse_error, "quotient for unknown generator '" + label + "'");
    quotients[static_cast<std::size_t>(it - family.begin())] = Poly::parse(ring, text.get<std::string>(), n);
  }
  const Poly remainder = Poly::parse(ring, require(cert, "remainder").get<std::string>(), n);
  res.checks = check_outcome(f, family, quotients, remainder);
  return res;
}

}  // namespace nullgb
