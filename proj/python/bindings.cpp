#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqcalc/calculus.hpp"
#include "fqcalc/cli.hpp"
#include "fqcalc/specialfn.hpp"
#include "fqcalc/text.hpp"
#include "fqcalc/verify.hpp"

namespace py = pybind11;
using namespace fqcalc;

namespace {

py::dict check_dict(const LawCheck& c) {
  py::dict d;
  d["name"] = c.name;
  d["holds"] = c.holds;
  d["vacuous"] = c.vacuous;
  d["lhs"] = c.lhs.to_string();
  d["rhs"] = c.rhs.to_string();
  d["required"] = c.required;
  d["note"] = c.note;
  return d;
}

py::dict report_dict(const IdentityReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["holds"] = r.holds();
  py::list checks;
  for (const LawCheck& c : r.checks) checks.append(check_dict(c));
  d["checks"] = checks;
  return d;
}

std::vector<Laurent> series_list(const Workspace& ws, const std::vector<std::string>& texts) {
  std::vector<Laurent> out;
  for (const auto& t : texts) out.push_back(parse_laurent(ws.field(), t));
  return out;
}

std::vector<std::string> texts(const std::vector<Laurent>& zs) {
  std::vector<std::string> out;
  for (const Laurent& z : zs) out.push_back(z.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact F_q-linear calculus over F_q((x))";

  py::register_exception<Error>(m, "FqcalcError", PyExc_ValueError);

  py::class_<FqContext, std::shared_ptr<FqContext>>(m, "Field")
      .def(py::init([](unsigned q) { return std::const_pointer_cast<FqContext>(FqContext::make(q)); }), py::arg("q"))
      .def_static(
          "from_p",
          [](unsigned p, unsigned gamma, std::optional<std::vector<unsigned>> modulus) {
            return std::const_pointer_cast<FqContext>(FqContext::make(p, gamma, std::move(modulus)));
          },
          py::arg("p"), py::arg("gamma") = 1, py::arg("modulus") = py::none())
      .def_property_readonly("p", &FqContext::p)
      .def_property_readonly("gamma", &FqContext::gamma)
      .def_property_readonly("q", &FqContext::q)
      .def_property_readonly("modulus", &FqContext::modulus)
      .def("elements",
           [](const FqContext& f) {
             std::vector<std::string> out;
             for (Code c : f.elements()) out.push_back(f.to_string(c));
             return out;
           })
      .def("__repr__", &FqContext::describe);

  py::class_<Laurent>(m, "Series")
      .def_static(
          "parse",
          [](const std::shared_ptr<FqContext>& f, const std::string& text) { return parse_laurent(f, text); },
          py::arg("field"), py::arg("text"))
      .def_property_readonly("valuation", [](const Laurent& z) -> std::optional<std::int64_t> {
        if (z.is_zero()) return std::nullopt;
        return z.valuation();
      })
      .def_property_readonly("precision", &Laurent::precision)
      .def_property_readonly("is_exact", &Laurent::is_exact)
      .def("coeff", [](const Laurent& z, std::int64_t e) { return z.field()->to_string(z.coeff(e)); })
      .def("agreement", [](const Laurent& a, const Laurent& b) -> std::optional<std::int64_t> {
        const auto n = a.agreement(b);
        if (n >= kInfinity) return std::nullopt;
        return n;
      })
      .def("inverse", &Laurent::inverse, py::arg("target"))
      .def("truncated", &Laurent::truncated)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Laurent::to_string)
      .def("__repr__", [](const Laurent& z) { return "Series('" + z.to_string() + "')"; });

  py::class_<Workspace>(m, "Workspace")
      .def(py::init([](const std::shared_ptr<FqContext>& f, std::int64_t precision) {
             return Workspace(f, precision);
           }),
           py::arg("field"), py::arg("precision") = 64)
      .def_property_readonly("q", &Workspace::q)
      .def_property_readonly("precision", &Workspace::precision)
      .def("bracket", [](const Workspace& ws, int i) { return ws.constants().bracket(i).to_string(); })
      .def("D", [](const Workspace& ws, int i) { return ws.constants().D(i).to_string(); })
      .def("L", [](const Workspace& ws, int i) { return ws.constants().L(i).to_string(); })
      .def("gamma", [](const Workspace& ws, std::uint64_t j) { return ws.constants().gamma(j).to_string(); })
      .def("binomial", [](const Workspace& ws, int i, int j) { return ws.constants().binomial(i, j).to_string(); });

  m.def(
      "to_carlitz",
      [](const Workspace& ws, const std::vector<std::string>& a) {
        return texts(to_carlitz(ws, QExpansion{series_list(ws, a)}).c);
      },
      py::arg("ws"), py::arg("a"), "Carlitz coefficients of sum a[n] t^(q^n).");
  m.def(
      "to_qexpansion",
      [](const Workspace& ws, const std::vector<std::string>& c) {
        return texts(to_qexpansion(ws, CarlitzExpansion{series_list(ws, c)}).a);
      },
      py::arg("ws"), py::arg("c"));

  m.def(
      "integrate",
      [](const Workspace& ws, const std::vector<std::string>& c, std::optional<std::int64_t> n_max) {
        const CarlitzExpansion u{series_list(ws, c)};
        const Laurent closed = volkenborn(ws, u).value;
        const IntegralResult lim = volkenborn_limit(ws, u, n_max.value_or(ws.precision() + 32));
        py::dict d;
        d["closed"] = closed;
        d["limit"] = lim.value;
        d["stabilized_n"] = lim.stabilized_n;
        d["agree"] = closed.agrees_to(lim.value, ws.precision() - kGuard);
        return d;
      },
      py::arg("ws"), py::arg("carlitz_coeffs"), py::arg("n_max") = py::none(),
      "Closed form and limit trace of the integral of sum c[n] f_n.");
  m.def("integrate_basis", [](const Workspace& ws, int n) { return volkenborn(ws, basis_vector(ws, n)).value; });

  m.def("log_c", [](const Workspace& ws, const Laurent& z) { return log_c(ws, z).value; });
  m.def("exp_c", [](const Workspace& ws, const Laurent& z) { return exp_c(ws, z).value; });
  m.def("carlitz_module", [](const Workspace& ws, const std::string& s, const Laurent& z) {
    return carlitz_module(ws, parse_poly(ws.field(), s), z).value;
  });
  m.def("goss_integral", [](const Workspace& ws, const std::string& a, const Laurent& z) {
    return report_dict(goss_integral(ws, parse_poly(ws.field(), a), z));
  });
  m.def("log_functional_equation", [](const Workspace& ws, const std::string& a, const Laurent& z) {
    return report_dict(log_functional_equation(ws, parse_poly(ws.field(), a), z));
  });

  m.def(
      "verify",
      [](std::optional<unsigned> q, std::int64_t precision, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.precision = precision;
        cfg.seed = seed;
        const auto results = q ? run_all(FqContext::make(*q), cfg) : run_suite(cfg);
        py::list out;
        for (const CheckResult& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("q") = py::none(), py::arg("precision") = 40, py::arg("seed") = 7);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr).");
}
