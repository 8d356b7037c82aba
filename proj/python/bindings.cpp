// Copyright 2026 The cvtangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvtangle/entanglement.hpp"
#include "cvtangle/error.hpp"
#include "cvtangle/monogamy.hpp"
#include "cvtangle/states.hpp"
#include "cvtangle/symplectic.hpp"

namespace py = pybind11;
using namespace cvtangle;

namespace {

using Cut = std::pair<std::vector<int>, std::vector<int>>;

CovarianceMatrix cm_of(const Eigen::MatrixXd& m) { return CovarianceMatrix(m); }
Bipartition cut_of(const Cut& c) { return {c.first, c.second}; }

py::dict record_dict(const MonogamyRecord& r) {
  py::dict d;
  d["reference_mode"] = r.reference_mode;
  d["global"] = r.global_contangle;
  d["pairs"] = r.pair_contangles;
  d["residual"] = r.residual;
  d["violated"] = r.violated;
  d["index"] = r.index;
  d["seed"] = r.seed ? py::object(py::int_(*r.seed)) : py::object(py::none());
  d["failure"] = r.failure ? py::object(py::str(*r.failure)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement sharing in multimode Gaussian states.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object instance = exc(e.what());
      instance.attr("code") = to_string(e.code());
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  // Covariance matrices cross the boundary as (2n, 2n) float arrays.
  m.def("validate", [](const Eigen::MatrixXd& sigma) {
    const auto r = validate(sigma);
    py::dict d;
    d["symmetric"] = r.symmetric;
    d["physical"] = r.physical;
    d["pure"] = r.pure;
    d["min_symplectic_eigenvalue"] = r.min_symplectic_eigenvalue;
    return d;
  }, py::arg("sigma"));
  m.def("symplectic_spectrum",
        [](const Eigen::MatrixXd& s) { return symplectic_spectrum(cm_of(s)).values; },
        py::arg("sigma"));
  m.def("partial_transpose",
        [](const Eigen::MatrixXd& s, const Cut& c) {
          return partial_transpose(cm_of(s), cut_of(c)).matrix();
        },
        py::arg("sigma"), py::arg("cut"));
  m.def("partial_transpose_spectrum",
        [](const Eigen::MatrixXd& s, const Cut& c) {
          return partial_transpose_spectrum(cm_of(s), cut_of(c)).values;
        },
        py::arg("sigma"), py::arg("cut"));
  m.def("log_negativity",
        [](const Eigen::MatrixXd& s, const Cut& c) {
          return log_negativity(cm_of(s), cut_of(c)).value;
        },
        py::arg("sigma"), py::arg("cut"));
  m.def("contangle_pure",
        [](const Eigen::MatrixXd& s, const Cut& c) {
          return contangle_pure(cm_of(s), cut_of(c)).value;
        },
        py::arg("sigma"), py::arg("cut"));
  m.def("gaussian_contangle",
        [](const Eigen::MatrixXd& s, int starts, std::uint64_t seed) {
          GaussianContangleOptions o;
          o.starts = starts;
          o.seed = seed;
          return gaussian_contangle_two_mode(cm_of(s), o).value;
        },
        py::arg("sigma"), py::arg("starts") = 16, py::arg("seed") = GaussianContangleOptions{}.seed);
  m.def("glems_contangle",
        [](double a, double s, double d) { return glems_contangle({a, s, d}); },
        py::arg("a"), py::arg("s"), py::arg("d"));

  m.def("vacuum", [](int n) { return vacuum(n).matrix(); }, py::arg("modes"));
  m.def("two_mode_squeezed", [](double r) { return two_mode_squeezed(r).matrix(); },
        py::arg("r"));
  m.def("fully_symmetric_pure",
        [](int n, double a) { return fully_symmetric_pure({n, a}).matrix(); },
        py::arg("modes"), py::arg("a_loc"));
  m.def("three_mode_pure",
        [](double a1, double a2, double a3) { return three_mode_pure({a1, a2, a3}).matrix(); },
        py::arg("a1"), py::arg("a2"), py::arg("a3"));
  m.def("random_pure",
        [](int n, std::uint64_t seed, double squeeze_max) {
          return random_pure({n, seed, squeeze_max}).matrix();
        },
        py::arg("modes"), py::arg("seed"), py::arg("squeeze_max") = 1.5);

  m.def("residual_contangle", [](double a1, double a2, double a3) {
    const auto r = residual_contangle({a1, a2, a3});
    py::dict d;
    d["value"] = r.value;
    d["argmin_reference"] = r.argmin_reference;
    py::list per;
    for (const auto& rec : r.per_reference) per.append(record_dict(rec));
    d["per_reference"] = per;
    return d;
  }, py::arg("a1"), py::arg("a2"), py::arg("a3"));
  m.def("monogamy_record",
        [](const Eigen::MatrixXd& s, int reference) {
          return record_dict(monogamy_record(cm_of(s), reference));
        },
        py::arg("sigma"), py::arg("reference") = 0);
  m.def("symmetric_monogamy_residual", &symmetric_monogamy_residual, py::arg("a_loc"),
        py::arg("n"));
  m.def("monte_carlo",
        [](int n, std::size_t count, std::uint64_t seed, double squeeze_max, int jobs) {
          MonteCarloOptions o;
          o.jobs = jobs;
          std::vector<MonogamyRecord> records;
          {
            py::gil_scoped_release release;
            records = monte_carlo({n, seed, squeeze_max}, count, o);
          }
          py::list out;
          for (const auto& r : records) out.append(record_dict(r));
          return out;
        },
        py::arg("modes"), py::arg("count"), py::arg("seed"), py::arg("squeeze_max") = 1.5,
        py::arg("jobs") = 1);
}
