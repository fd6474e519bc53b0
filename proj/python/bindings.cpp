#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittsig/anisotropy.hpp"
#include "wittsig/claims.hpp"
#include "wittsig/errors.hpp"
#include "wittsig/signature.hpp"

namespace py = pybind11;
using namespace wittsig;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them
// in fractions.Fraction.
Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

Family parse_family(const std::string& f) {
  if (f == "D") return Family::D;
  if (f == "B") return Family::B;
  throw std::invalid_argument("family must be 'D' or 'B'");
}

Weight to_weight(const std::vector<i64>& coords2) { return Weight(coords2); }

py::object json_to_py(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

std::string py_to_json(const py::object& obj) {
  return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

RunConfig config_from(const py::object& cfg) {
  RunConfig c;
  if (!cfg.is_none()) c.merge(nlohmann::json::parse(py_to_json(cfg)));
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact cyclotomic arithmetic and Witt signatures (C++ core)";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<NotRealError>(m, "NotRealError", PyExc_ValueError);
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_ArithmeticError);
  py::register_exception<ConductorGuardExceeded>(m, "ConductorGuardExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DivisionByZero& e) {
      PyErr_SetString(PyExc_ZeroDivisionError, e.what());
    }
  });

  py::class_<CyclotomicNumber>(m, "Cyclotomic")
      .def(py::init<>())
      .def_static("integer", [](long v, i64 n) { return CyclotomicNumber::integer(v, n); },
                  py::arg("value"), py::arg("conductor") = 1)
      .def_static("rational", [](const std::string& q, i64 n) { return CyclotomicNumber::rational(parse_rational(q), n); },
                  py::arg("value"), py::arg("conductor") = 1)
      .def_static("zeta", &CyclotomicNumber::zeta, py::arg("n"), py::arg("power") = 1)
      .def_static("from_terms",
                  [](i64 n, const std::vector<std::pair<i64, std::string>>& terms) {
                    std::vector<std::pair<i64, Rational>> t;
                    for (const auto& [e, c] : terms) t.emplace_back(e, parse_rational(c));
                    return CyclotomicNumber::from_terms(n, t);
                  })
      .def_property_readonly("conductor", &CyclotomicNumber::conductor)
      .def("_coefficients",
           [](const CyclotomicNumber& x) {
             std::vector<std::string> out;
             for (const Rational& q : x.coefficients()) out.push_back(q.get_str());
             return out;
           })
      .def("is_zero", &CyclotomicNumber::is_zero)
      .def("inverse", &CyclotomicNumber::inverse)
      .def("__pow__", &CyclotomicNumber::pow)
      .def(-py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def("__complex__", [](const CyclotomicNumber& x) { return approximate(x); })
      .def("__str__", &CyclotomicNumber::to_string)
      .def("__repr__", [](const CyclotomicNumber& x) { return "Cyclotomic(" + x.to_string() + ")"; });

  m.def("galois_apply", py::overload_cast<i64, const CyclotomicNumber&>(&galois_apply), py::arg("k"), py::arg("x"));
  m.def("complex_conjugate", &complex_conjugate);
  m.def("embed", &embed);
  m.def("minimize_conductor", &minimize_conductor);
  m.def("is_real", &is_real);
  m.def("certified_sign",
        [](const CyclotomicNumber& x, unsigned start, unsigned cap) {
          return to_int(certified_sign(x, {start, cap}));
        },
        py::arg("x"), py::arg("start_bits") = 128, py::arg("cap_bits") = 16384);
  m.def("decimal_string", &decimal_string, py::arg("x"), py::arg("digits") = 50);
  m.def("sqrt_int", &sqrt_int);
  m.def("sin_pi_frac", &sin_pi_frac);
  m.def("cos_pi_frac", &cos_pi_frac);
  m.def("conjugates", &conjugates);
  m.def("_algebraic_norm", [](const CyclotomicNumber& x) { return algebraic_norm(x).get_str(); });
  m.def("is_totally_positive", [](const CyclotomicNumber& x) { return is_totally_positive(x); });

  m.def("jacobi", &jacobi);
  m.def("crt", [](const std::vector<std::pair<i64, i64>>& system) {
    std::vector<Congruence> cs;
    for (auto [r, mod] : system) cs.push_back({r, mod});
    const Congruence c = crt_solve(cs);
    return std::make_pair(c.residue, c.modulus);
  });

  m.def("alcove", [](int r) {
    std::vector<std::vector<i64>> out;
    for (const Weight& w : alcove_D(r)) out.push_back(w.coords2);
    return out;
  });
  m.def("d_count", &d_count);
  m.def("d_count_bruteforce", &d_count_bruteforce);
  m.def("s_set", &s_set);
  m.def("c_count", &c_count);

  m.def("twist_exponent", [](int r, const std::vector<i64>& w) { return twist_exponent(r, to_weight(w)); });
  m.def("twist_modulus", &twist_modulus);
  m.def("qdim", [](int r, const std::vector<i64>& w) { return qdim(r, to_weight(w)); });
  m.def("t_order", &t_order);
  m.def("_category_json", [](int r, unsigned threads) {
    py::gil_scoped_release nogil;
    return category_json(build_category_data(r, threads));
  }, py::arg("r"), py::arg("threads") = 1);

  m.def("signature", [](const std::string& family, int rank, i64 k) {
    return to_int(signature(parse_family(family), rank, k));
  });
  m.def("closed_form_signature_D", [](int r, i64 k) { return to_int(closed_form_signature_D(r, k)); });
  m.def("pointed_signature", [](i64 h, i64 k) { return to_int(pointed_signature(h, k)); });
  m.def("build_galois_element", [](std::pair<i64, i64> pinned, const std::vector<i64>& fixed) {
    return build_galois_element({pinned.first, pinned.second}, fixed);
  });
  m.def("ising_obstruction", &ising_obstruction);

  m.def("_list_claims", [] {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const ClaimInfo& c : list_claims()) all.push_back({{"id", c.id}, {"summary", c.summary}, {"defaults", c.defaults}});
    return all.dump();
  });
  m.def("_run_claim", [](const std::string& id, const std::string& params, const py::object& cfg) {
    const RunConfig config = config_from(cfg);
    const nlohmann::json p = nlohmann::json::parse(params);
    py::gil_scoped_release nogil;
    return run_claim(id, p, config).to_json().dump();
  });
  m.def("_anisotropy_json", [](unsigned threads) {
    py::gil_scoped_release nogil;
    return AnisotropyD4(threads).report().to_json().dump();
  }, py::arg("threads") = 1);
  m.def("anisotropy_text", [](unsigned threads) {
    py::gil_scoped_release nogil;
    return AnisotropyD4(threads).text_report();
  }, py::arg("threads") = 1);
}
