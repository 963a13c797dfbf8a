#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "pbell/combinatorics.hpp"
#include "pbell/harness.hpp"
#include "pbell/moments.hpp"
#include "pbell/prob_bell.hpp"
#include "pbell/rational.hpp"

namespace py = pybind11;
using namespace pbell;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_string(q)));
}

// Accepts int, str ("a/b" or "a"), or fractions.Fraction.
Rational from_object(const py::object& obj) {
  return parse_rational(py::cast<std::string>(py::str(obj)));
}

py::dict report_to_dict(const VerificationReport& report) {
  py::dict d;
  d["identity"] = report.identity;
  d["grid"] = report.grid;
  d["cases"] = report.cases_run;
  py::list failures;
  for (const auto& f : report.failures) {
    py::dict fd;
    fd["params"] = f.params;
    fd["lhs"] = f.lhs;
    fd["rhs"] = f.rhs;
    failures.append(fd);
  }
  d["failures"] = failures;
  d["elapsed_ms"] = report.elapsed_ms;
  d["passed"] = report.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact probabilistic r-Stirling / r-Bell computations";

  py::class_<MomentModel>(m, "MomentModel")
      .def_static("parse", [](const std::string& spec) { return MomentModel::parse(spec); })
      .def_property_readonly("canonical_id", &MomentModel::canonical_id)
      .def("moment",
           [](const MomentModel& self, unsigned long n) { return to_fraction(self.moment(n)); })
      .def("sum_moment",
           [](const MomentModel& self, unsigned long k, unsigned long n) {
             return to_fraction(self.sum_moment(k, n));
           })
      .def("joint_moment",
           [](const MomentModel& self, unsigned long p, const std::vector<unsigned long>& ls) {
             return to_fraction(self.joint_moment(p, ls));
           })
      .def("__repr__", [](const MomentModel& self) {
        return "MomentModel('" + self.canonical_id() + "')";
      });

  m.def("stirling2", [](unsigned long n, unsigned long k) { return to_fraction(stirling2(n, k)); });
  m.def("r_stirling2", [](unsigned long n, unsigned long k, unsigned long r) {
    return to_fraction(r_stirling2(n, k, r));
  });
  m.def("bell_poly",
        [](unsigned long n, const py::object& x) { return to_fraction(bell_poly(n, from_object(x))); });
  m.def("r_bell_poly", [](unsigned long n, unsigned long r, const py::object& x) {
    return to_fraction(r_bell_poly(n, r, from_object(x)));
  });
  m.def("partial_bell", [](unsigned long n, unsigned long k, const py::list& xs) {
    std::vector<Rational> values;
    for (const auto& item : xs) values.push_back(from_object(py::reinterpret_borrow<py::object>(item)));
    return to_fraction(partial_bell(n, k, values));
  });

  m.def("prob_stirling2", [](const MomentModel& model, unsigned long n, unsigned long k) {
    return to_fraction(prob_stirling2(model, n, k));
  });
  m.def("prob_r_stirling2",
        [](const MomentModel& model, unsigned long n, unsigned long k, unsigned long r) {
          return to_fraction(prob_r_stirling2(model, n, k, r));
        });
  m.def("prob_r_stirling2_egf",
        [](const MomentModel& model, unsigned long n, unsigned long k, unsigned long r) {
          return to_fraction(prob_r_stirling2_egf(model, n, k, r));
        });
  m.def("prob_bell_poly", [](const MomentModel& model, unsigned long n, const py::object& x) {
    return to_fraction(prob_bell_poly(model, n, from_object(x)));
  });
  m.def("prob_r_bell_poly",
        [](const MomentModel& model, unsigned long n, unsigned long r, const py::object& x) {
          return to_fraction(prob_r_bell_poly(model, n, r, from_object(x)));
        });
  m.def("recurrence_step",
        [](const MomentModel& model, unsigned long n, unsigned long r, const py::object& x) {
          return to_fraction(recurrence_step(model, n, r, from_object(x)));
        });
  m.def("spivey_general_rhs",
        [](const MomentModel& model, const py::object& y, unsigned long r, unsigned long n,
           unsigned long j) {
          return to_fraction(spivey_general_rhs(model, from_object(y), r, n, j));
        });

  m.def("identities", []() {
    std::vector<std::string> names;
    for (auto id : all_identities()) names.push_back(identity_name(id));
    return names;
  });
  m.def(
      "verify",
      [](const std::string& identity, unsigned long max_sum, unsigned long max_r,
         const std::vector<std::string>& dists) {
        auto id = parse_identity(identity);
        if (!id) throw std::invalid_argument("unknown identity '" + identity + "'");
        GridConfig grid;
        grid.max_sum = max_sum;
        grid.max_r = max_r;
        std::vector<MomentModel> models;
        if (dists.empty()) {
          models = default_models();
        } else {
          for (const auto& d : dists) models.push_back(MomentModel::parse(d));
        }
        return report_to_dict(verify(*id, grid, models));
      },
      py::arg("identity"), py::arg("max_sum") = 10, py::arg("max_r") = 3,
      py::arg("dists") = std::vector<std::string>{});
  m.def(
      "mc_check",
      [](const std::string& dist, unsigned long n, unsigned long k, long samples,
         std::uint64_t seed) {
        auto est = mc_check(MomentModel::parse(dist), n, k, samples, seed);
        py::dict d;
        d["target"] = est.target;
        d["samples"] = est.samples;
        d["estimate"] = est.estimate;
        d["stderr"] = est.stderr_;
        d["exact"] = to_fraction(est.exact);
        d["z_score"] = est.z_score;
        return d;
      },
      py::arg("dist"), py::arg("n"), py::arg("k"), py::arg("samples") = 100000,
      py::arg("seed") = 0);
}
