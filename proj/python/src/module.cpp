#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lienil/report.hpp"

namespace py = pybind11;
using namespace lienil;

namespace {

ScalarMode mode_of(const std::string& tag) { return ScalarMode::from_tag(tag); }

std::vector<ScalarMode> modes_of(const std::vector<std::string>& tags) {
  std::vector<ScalarMode> out;
  for (const auto& t : tags) out.push_back(mode_of(t));
  return out;
}

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const report::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of lienil";

  py::register_exception<ModeMismatch>(m, "ModeMismatch", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_MemoryError);

  m.attr("DEFAULT_PRIME") = kDefaultPrime;
  m.attr("SECOND_PRIME") = kSecondPrime;

  py::class_<NCPoly>(m, "NCPoly")
      .def_static("parse", [](const std::string& text, int n, const std::string& mode) {
        return NCPoly::parse(text, n, mode_of(mode));
      }, py::arg("text"), py::arg("n"), py::arg("mode") = "exact")
      .def_static("generator", [](int n, int k, const std::string& mode) {
        return NCPoly::generator(n, k, mode_of(mode));
      }, py::arg("n"), py::arg("k"), py::arg("mode") = "exact")
      .def_property_readonly("n", &NCPoly::n)
      .def_property_readonly("mode", [](const NCPoly& p) { return p.mode().tag(); })
      .def("is_zero", &NCPoly::is_zero)
      .def("__len__", &NCPoly::size)
      .def("terms", [](const NCPoly& p) {
        std::vector<std::pair<std::vector<int>, std::string>> out;
        for (const auto& [w, c] : p.terms()) out.emplace_back(w.letters(), c.to_string());
        return out;
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &NCPoly::to_string)
      .def("__repr__", [](const NCPoly& p) { return "NCPoly('" + p.to_string() + "')"; });

  m.def("commutator", &commutator);
  m.def("left_normed_bracket", [](const std::vector<NCPoly>& entries) { return left_normed_bracket(entries); });
  m.def("member_of_m", [](const NCPoly& p, int i) { return member_of_m(p, i, p.mode()); });
  m.def("q_dimension", [](int n, int i, const std::vector<int>& delta, const std::string& mode) {
    return q_dimension(n, i, MultiDegree(delta), mode_of(mode));
  }, py::arg("n"), py::arg("i"), py::arg("delta"), py::arg("mode") = "exact");
  m.def("hilbert_q", [](int n, int i, int max_degree, const std::string& mode) {
    return hilbert_q(n, i, max_degree, mode_of(mode)).coefficients;
  }, py::arg("n"), py::arg("i"), py::arg("max_degree"), py::arg("mode") = "exact");
  m.def("_lambda_weights", [](int n, int i, int max_degree, const std::string& mode) {
    return dump(report::weights_json(lambda_weights(n, i, max_degree, mode_of(mode))));
  });
  m.def("_lambda_dim", [](int n, int i, int max_degree, const std::string& mode) {
    return dump(report::lambda_dim_json(lambda_dim(n, i, max_degree, mode_of(mode))));
  });
  m.def("default_max_degree", &default_max_degree);

  m.def("null_pair_element", [](int a, int b, const std::string& mode) {
    return null_pair_element(a, b, mode_of(mode));
  }, py::arg("m"), py::arg("l"), py::arg("mode") = "exact");
  m.def("_check_null_pair", [](int a, int b, const std::vector<std::string>& modes) {
    return dump(report::pair_json(check_null_pair(a, b, modes_of(modes))));
  });
  m.def("_scan_null_pairs", [](int max_sum, const std::vector<std::string>& modes) {
    return dump(report::scan_json(scan_null_pairs(max_sum, modes_of(modes))));
  });
  m.def("s_element", [](int i, int j, int k, int l, int mm) {
    return s_element(std::max({5, i, j, k, l, mm}), i, j, k, l, mm);
  });
  m.def("r_element", [](int i, int j, int k, int l, int mm) {
    return r_element(std::max({5, i, j, k, l, mm}), i, j, k, l, mm);
  });
  m.def("verify_four_term_identity", &verify_four_term_identity);
  m.def("verify_r_identity", [](int i, int j, int k, int l, int mm, const std::string& mode) {
    return verify_r_identity(i, j, k, l, mm, mode_of(mode));
  }, py::arg("i"), py::arg("j"), py::arg("k"), py::arg("l"), py::arg("m"), py::arg("mode") = "exact");
  m.def("_check_gupta_levin", [](int a, int b, const std::vector<int>& delta, const std::string& mode) {
    return dump(report::containment_json(check_gupta_levin(a, b, MultiDegree(delta), mode_of(mode))));
  });
  m.def("_check_triple_bracket", [](int i, int j, int k, const std::vector<int>& delta, const std::string& mode) {
    return dump(report::containment_json(check_triple_bracket(i, j, k, MultiDegree(delta), mode_of(mode))));
  });

  m.def("_verify_presentation",
        [](int n, int i, int max_degree, const std::string& mode, std::optional<std::string> drop) {
          return dump(report::presentation_json(verify_presentation(n, i, max_degree, mode_of(mode), drop)));
        });

  py::class_<Form>(m, "Form")
      .def_static("parse", [](const std::string& text, int n, const std::string& mode) {
        return Form::parse(text, n, mode_of(mode));
      }, py::arg("text"), py::arg("n"), py::arg("mode") = "exact")
      .def_static("x", [](int n, int i) { return Form::x(n, i); })
      .def_static("dx", [](int n, int i) { return Form::dx(n, i); })
      .def("is_zero", &Form::is_zero)
      .def("is_even", &Form::is_even)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Form::to_string)
      .def("__repr__", [](const Form& f) { return "Form('" + f.to_string() + "')"; });
  m.def("wedge", &wedge);
  m.def("d", &d);
  m.def("star", &star);
  m.def("_fs_check", [](int n, int max_degree, const std::string& mode) {
    return dump(report::fs_json(fs_check(n, max_degree, mode_of(mode))));
  });

  m.def("weyl_dimension", [](const std::vector<int>& parts, int n) { return weyl_dimension(Partition(parts), n); });
  m.def("_kostka_weights", [](const std::vector<int>& parts, int n) {
    return dump(report::weights_json(kostka_weights(Partition(parts), n)));
  });
  m.def("_verify_corollary_k3", [](int n, const std::string& mode) {
    return dump(report::corollary_json(verify_corollary_k3(n, mode_of(mode))));
  });
}
