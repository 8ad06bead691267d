/*
 * Copyright 2026 The addesign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings. Designs, difference sets, embeddings and reports cross
// the boundary as JSON text; the package wrapper turns them into dicts.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addesign/additivity.hpp"
#include "addesign/designs.hpp"
#include "addesign/error.hpp"
#include "addesign/geometry.hpp"
#include "addesign/gf.hpp"
#include "addesign/io.hpp"

namespace py = pybind11;
using namespace addesign;

namespace {

using Poly = std::optional<std::vector<std::uint32_t>>;

std::string dump(const io::Json& j) { return j.dump(); }

designs::DifferenceSet diffset_of(const std::string& text) {
  const auto doc = io::parse(text);
  return io::is_diffset_document(doc) ? io::diffset_from_json(doc)
                                      : designs::base_difference_set(io::design_from_json(doc));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "addesign core bindings";
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  // finite fields
  py::class_<gf::Field>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t n, Poly poly) { return gf::Field::make(p, n, std::move(poly)); }),
           py::arg("p"), py::arg("n"), py::arg("poly") = py::none())
      .def_static("parse", &gf::parse_field)
      .def_property_readonly("characteristic", &gf::Field::characteristic)
      .def_property_readonly("degree", &gf::Field::degree)
      .def_property_readonly("order", &gf::Field::order)
      .def_property_readonly("polynomial", &gf::Field::polynomial)
      .def("zero", &gf::Field::zero)
      .def("one", &gf::Field::one)
      .def("root", &gf::Field::root)
      .def("exp", &gf::Field::exp)
      .def("log", &gf::Field::log)
      .def("element", [](const gf::Field& f, const std::vector<std::uint32_t>& c) { return f.from_coeffs(c); })
      .def("parse_element", &gf::Field::parse_element)
      .def("subgroup_generator", [](const gf::Field& f, std::uint64_t v) { return gf::subgroup_generator(f, v); })
      .def("power_sum", [](const gf::Field& f, std::uint64_t i) { return gf::power_sum(f, i); })
      .def(py::self == py::self)
      .def("__repr__", &gf::Field::describe)
      .def("__str__", &gf::Field::describe);

  py::class_<gf::Element>(m, "Element")
      .def_property_readonly("field", &gf::Element::field)
      .def_property_readonly("coeffs", &gf::Element::coeffs)
      .def_property_readonly("code", &gf::Element::code)
      .def("is_zero", &gf::Element::is_zero)
      .def("inverse", &gf::Element::inverse)
      .def("__pow__", [](const gf::Element& x, std::int64_t e) { return x.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const gf::Element& x) { return x.code(); })
      .def("__repr__", &gf::Element::to_string)
      .def("__str__", &gf::Element::to_string);

  m.def("is_prime", &gf::is_prime);
  m.def("mult_order", &gf::mult_order, py::arg("u"), py::arg("v"));
  m.def("trace", &gf::trace, py::arg("x"), py::arg("sub_order"));

  // counting
  m.def("bracket", &geometry::bracket, py::arg("n"), py::arg("q"));
  m.def("gaussian", &geometry::gaussian, py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("pg_points", &geometry::pg_points, py::arg("n"), py::arg("q"));

  // generators (JSON text out)
  m.def("pg_design", [](unsigned n, std::uint64_t q, unsigned d) { return dump(io::to_json(geometry::pg_design(n, q, d))); });
  m.def("ag_design", [](unsigned n, std::uint64_t q, unsigned d) { return dump(io::to_json(geometry::ag_design(n, q, d))); });
  m.def("pg_design_field_model", [](unsigned n, std::uint64_t q, unsigned d, const gf::Field& big) {
    return dump(io::to_json(geometry::pg_design_field_model(n, q, d, big)));
  });
  m.def("paley_diffset", [](std::uint32_t v) { return dump(io::to_json(designs::paley_diffset(v))); });
  m.def("singer_diffset", [](unsigned n, std::uint64_t q, Poly poly) {
    return dump(io::to_json(designs::singer_diffset(n, q, std::move(poly))));
  }, py::arg("n"), py::arg("q"), py::arg("poly") = py::none());
  m.def("difference_set", [](std::uint32_t v, std::vector<std::uint32_t> set) {
    return dump(io::to_json(designs::validate_difference_set(v, std::move(set))));
  });
  m.def("develop", [](const std::string& diffset) { return dump(io::to_json(designs::develop(diffset_of(diffset)))); });
  m.def("validate_design", [](const std::string& design) { return dump(io::to_json(io::design_from_json(io::parse(design)))); });

  // embeddings (JSON text in and out)
  m.def("symmetric_strong_embedding", [](const std::string& design) {
    return dump(io::to_json(additivity::symmetric_strong_embedding(io::design_from_json(io::parse(design)))));
  });
  m.def("cyclic_embedding", [](const std::string& source, std::uint32_t p, Poly poly) {
    return dump(io::to_json(additivity::cyclic_embedding(diffset_of(source), p, std::move(poly))));
  }, py::arg("source"), py::arg("p"), py::arg("poly") = py::none());
  m.def("pg_strong_embedding", [](unsigned n, std::uint64_t q, unsigned d) {
    return dump(io::to_json(additivity::pg_strong_embedding(n, q, d)));
  });
  m.def("subspace_embedding_exponents", [](const std::string& design, std::uint64_t q, const gf::Field& big) {
    const auto d = io::design_from_json(io::parse(design));
    return dump(io::to_json(additivity::subspace_embedding(d, q, additivity::exponent_class_reps(big, q))));
  }, "Subspace embedding for a design whose point i is the class of w^i in the big field.");
  m.def("identity_embedding", [](const std::vector<std::vector<std::uint32_t>>& points, std::uint64_t q) {
    return dump(io::to_json(additivity::identity_embedding(points, q)));
  });

  m.def("verify", [](const std::string& design, const std::string& embedding, bool strong, std::uint64_t cap,
                     unsigned jobs) {
    const auto d = io::design_from_json(io::parse(design));
    const auto e = io::embedding_from_json(io::parse(embedding));
    if (!strong) return dump(io::to_json(additivity::verify_embedding(d, e)));
    additivity::StrongOptions opts;
    opts.cap = cap;
    opts.jobs = jobs;
    py::gil_scoped_release release;
    return dump(io::to_json(additivity::verify_strong(d, e, opts)));
  }, py::arg("design"), py::arg("embedding"), py::arg("strong") = false, py::arg("cap") = 10'000'000,
        py::arg("jobs") = 1);
}
