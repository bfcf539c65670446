#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nullgb/cli.hpp"
#include "nullgb/serialize.hpp"

namespace py = pybind11;
using namespace nullgb;

namespace {

py::object big_int(const Int& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_lenient_json(o.cast<std::string>());
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ExpVec exps(const std::vector<unsigned>& v) {
  ExpVec e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = v[i];
  return e;
}

std::vector<unsigned> to_vec(const ExpVec& e) { return {e.begin(), e.end()}; }

Poly as_poly(const py::object& o, const RingSpec& ring, std::size_t nvars) {
  if (py::isinstance<Poly>(o)) return o.cast<Poly>();
  return Poly::parse(ring, o.cast<std::string>(), nvars);
}

MonicFamily family_of(const std::vector<Poly>& gens) {
  if (gens.empty()) throw Error(Errc::invalid_argument, "need at least one generator");
  std::size_t n = 0;
  for (const auto& g : gens) n = std::max(n, g.nvars());
  MonicFamily fam(gens.front().ring(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Poly g = gens[i].nvars() == n ? gens[i] : Poly::parse(gens[i].ring(), gens[i].to_string(), n);
    fam.add(g, "g" + std::to_string(i + 1));
  }
  return fam;
}

std::string verdict(Verdict v) { return std::string(verdict_name(v)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Groebner-basis tools for combinatorial Nullstellensatz computations";

  py::register_exception<Error>(m, "NullgbError", PyExc_ValueError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text, const std::string& ring, std::size_t nvars) {
             return Poly::parse(RingSpec::parse(ring), text, nvars ? std::optional<std::size_t>(nvars) : std::nullopt);
           }),
           py::arg("text"), py::arg("ring") = "ZZ", py::arg("nvars") = 0)
      .def_property_readonly("nvars", &Poly::nvars)
      .def_property_readonly("ring", [](const Poly& p) { return p.ring().to_string(); })
      .def_property_readonly("degree", [](const Poly& p) -> py::object {
        if (p.is_zero()) return py::none();
        return py::int_(p.degree());
      })
      .def("is_zero", &Poly::is_zero)
      .def("terms",
           [](const Poly& p) {
             py::list out;
             for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(py::tuple(py::cast(to_vec(e))), p.ring().format(c)));
             return out;
           })
      .def("evaluate",
           [](const Poly& p, const std::vector<std::string>& point) {
             Point a;
             for (const auto& x : point) a.push_back(p.ring().parse_element(x));
             return p.ring().format(evaluate(p, a));
           })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__neg__", [](const Poly& a) { return -a; })
      .def("__pow__", [](const Poly& a, unsigned e) { return a.pow(e); })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& p) { return "Poly('" + p.to_string() + "', ring='" + p.ring().to_string() + "')"; });

  m.def(
      "reduce",
      [](const Poly& f, const std::vector<Poly>& gens) {
        const MonicFamily fam = family_of(gens);
        const Poly g = f.nvars() == fam.nvars() ? f : Poly::parse(f.ring(), f.to_string(), fam.nvars());
        return to_py(outcome_to_json(g, fam, reduce(g, fam)));
      },
      py::arg("f"), py::arg("gens"), "Divide f by a monic family; returns the certificate as a dict.");
  m.def(
      "is_groebner", [](const std::vector<Poly>& gens) { return buchberger_certifies(family_of(gens)); }, py::arg("gens"),
      "S-polynomial test for a monic family.");

  auto grid_of = [](const py::object& grid, const std::string& ring) {
    return grid_from_json(RingSpec::parse(ring), from_py(grid));
  };
  auto pgrid_of = [](const py::object& grid, const std::string& ring) {
    return punctured_grid_from_json(RingSpec::parse(ring), from_py(grid));
  };

  m.def(
      "membership",
      [grid_of](const py::object& f, const py::object& grid, unsigned t, const std::string& ring) {
        const MultisetGrid g = grid_of(grid, ring);
        return verdict(in_power_ideal(as_poly(f, g.ring(), g.nvars()), g, t));
      },
      py::arg("f"), py::arg("grid"), py::arg("t"), py::arg("ring") = "ZZ",
      "Vanishing-condition membership in I_t: 'true', 'false' or 'inapplicable'.");
  m.def(
      "normal_form",
      [grid_of](const py::object& f, const py::object& grid, unsigned t, const std::string& ring) {
        const MultisetGrid g = grid_of(grid, ring);
        return power_ideal_normal_form(as_poly(f, g.ring(), g.nvars()), g, t);
      },
      py::arg("f"), py::arg("grid"), py::arg("t"), py::arg("ring") = "ZZ");
  m.def(
      "certificate",
      [grid_of](const py::object& f, const py::object& grid, unsigned t, const std::string& ring) {
        const MultisetGrid g = grid_of(grid, ring);
        return to_py(certificate_to_json(power_ideal_certificate(as_poly(f, g.ring(), g.nvars()), g, t)));
      },
      py::arg("f"), py::arg("grid"), py::arg("t"), py::arg("ring") = "ZZ");
  m.def(
      "verify_certificate", [](const py::object& cert) { return verify_certificate(from_py(cert)).ok(); },
      py::arg("cert"), "Re-check a serialized certificate using only its contents.");

  m.def(
      "punctured_membership",
      [pgrid_of](const py::object& f, const py::object& pgrid, unsigned t, const std::string& ring) {
        const PuncturedGrid g = pgrid_of(pgrid, ring);
        return verdict(punctured_membership(as_poly(f, g.base().ring(), g.nvars()), g, t));
      },
      py::arg("f"), py::arg("pgrid"), py::arg("t"), py::arg("ring") = "ZZ");
  m.def(
      "punctured_analysis",
      [pgrid_of](const py::object& f, const py::object& pgrid, unsigned t, const std::string& ring) {
        const PuncturedGrid g = pgrid_of(pgrid, ring);
        return to_py(punctured_report_to_json(punctured_analysis(as_poly(f, g.base().ring(), g.nvars()), g, t)));
      },
      py::arg("f"), py::arg("pgrid"), py::arg("t"), py::arg("ring") = "ZZ");
  m.def(
      "mixed_membership",
      [pgrid_of](const py::object& f, const py::object& pgrid, unsigned t, const std::string& ring) {
        const PuncturedGrid g = pgrid_of(pgrid, ring);
        return verdict(mixed_membership(as_poly(f, g.base().ring(), g.nvars()), g, t));
      },
      py::arg("f"), py::arg("pgrid"), py::arg("t"), py::arg("ring") = "ZZ");
  m.def(
      "min_extra_degree",
      [pgrid_of](const py::object& pgrid, unsigned t, const std::string& ring) {
        const ExtraDegree d = min_extra_degree(pgrid_of(pgrid, ring), t);
        return py::make_tuple(big_int(d.value), d.witness);
      },
      py::arg("pgrid"), py::arg("t"), py::arg("ring") = "ZZ", "Least degree outside I_t, with a witness.");

  m.def(
      "count_grid_complement",
      [](const std::vector<unsigned>& alpha, unsigned t) { return big_int(count_grid_complement(exps(alpha), t)); },
      py::arg("alpha"), py::arg("t"));
  m.def(
      "count_punctured_complement",
      [](const std::vector<unsigned>& alpha, const std::vector<unsigned>& gamma, unsigned t) {
        return big_int(count_punctured_complement(exps(alpha), exps(gamma), t));
      },
      py::arg("alpha"), py::arg("gamma"), py::arg("t"));

  m.def(
      "jamison_bound", [](unsigned q, unsigned n, unsigned t) { return big_int(jamison_bound(q, n, t)); }, py::arg("q"),
      py::arg("n"), py::arg("t") = 1);
  m.def(
      "min_blocking_multiset",
      [](unsigned q, unsigned n, unsigned t, bool distinct) {
        const BlockingSearch s = min_blocking_multiset(q, n, t, distinct);
        return py::make_tuple(s.min_size, s.example);
      },
      py::arg("q"), py::arg("n"), py::arg("t") = 1, py::arg("distinct") = false);
  m.def(
      "alon_furedi",
      [](const py::object& f, const std::vector<std::vector<std::string>>& sets, const std::vector<unsigned>& beta,
         const std::string& ring) {
        const RingSpec r = RingSpec::parse(ring);
        std::vector<std::vector<Scalar>> s;
        for (const auto& row : sets) {
          s.emplace_back();
          for (const auto& x : row) s.back().push_back(r.parse_element(x));
        }
        return to_py(alon_furedi_to_json(alon_furedi(as_poly(f, r, sets.size()), s, exps(beta))));
      },
      py::arg("f"), py::arg("sets"), py::arg("beta"), py::arg("ring") = "ZZ");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
