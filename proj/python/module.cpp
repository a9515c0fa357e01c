#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vacctree/generator.hpp"
#include "vacctree/percolation.hpp"
#include "vacctree/vacc1.hpp"
#include "vacctree/vacc2.hpp"

namespace py = pybind11;
using namespace vacctree;

namespace {

ThresholdValue threshold_from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return ThresholdValue{h.cast<std::int64_t>()};
  if (py::isinstance<py::float_>(h)) {
    const double v = h.cast<double>();
    if (std::isinf(v) && v > 0) return ThresholdValue::pos_inf();
    throw py::value_error("threshold must be an integer, inf, or \"inf\"");
  }
  if (py::isinstance<py::str>(h) && h.cast<std::string>() == "inf")
    return ThresholdValue::pos_inf();
  throw py::value_error("threshold must be an integer, inf, or \"inf\"");
}

py::object threshold_to_py(ThresholdValue t) {
  if (t.is_infinite())
    return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(t.finite_value());
}

py::object ext_to_py(ExtValue v) {
  if (!v.is_finite()) return py::none();
  return py::int_(v.value());
}

ExtValue ext_from_py(const py::handle& h) {
  if (h.is_none()) return ExtValue::neg_inf();
  return ExtValue(h.cast<int>());
}

Instance make_instance(int n, std::vector<std::pair<int, int>> edges,
                       const py::sequence& tau, std::optional<int> budget) {
  Instance inst;
  inst.n = n;
  inst.edges = std::move(edges);
  for (const auto& entry : tau) inst.tau.push_back(threshold_from_py(entry));
  inst.budget = budget;
  validate_instance(inst);
  return inst;
}

}  // namespace

PYBIND11_MODULE(vacctree, m) {
  m.doc() =
      "Exact solvers for threshold-spreading vaccination problems on trees: "
      "hull computation, brute-force oracles, and the vacc1/vacc2 dynamic "
      "programs with witness reconstruction.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError",
                                         PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance",
                       "A labeled tree with per-vertex thresholds; thresholds "
                       "are integers or inf.")
      .def(py::init(&make_instance), py::arg("n"), py::arg("edges"),
           py::arg("tau"), py::arg("budget") = std::nullopt)
      .def_static(
          "from_json",
          [](const std::string& text) { return parse_instance(text); },
          py::arg("text"))
      .def_readonly("n", &Instance::n)
      .def_readonly("edges", &Instance::edges)
      .def_property_readonly("tau",
                             [](const Instance& inst) {
                               py::list out;
                               for (const auto& t : inst.tau)
                                 out.append(threshold_to_py(t));
                               return out;
                             })
      .def_readonly("budget", &Instance::budget)
      .def("to_json", [](const Instance& inst,
                         bool pretty) { return to_json(inst, pretty); },
           py::arg("pretty") = false)
      .def("__repr__", [](const Instance& inst) {
        return "Instance(" + to_json(inst) + ")";
      });

  m.def(
      "immunize",
      [](const Instance& inst, const std::vector<int>& x) {
        for (int u : x)
          if (u < 0 || u >= inst.n) throw py::value_error("vertex out of range");
        Instance out = inst;
        out.tau = immunize(inst.tau, x);
        return out;
      },
      py::arg("instance"), py::arg("x"),
      "Raise the thresholds of X to inf (tau_X).");

  m.def(
      "decrement_at",
      [](const Instance& inst, int u) {
        if (u < 0 || u >= inst.n) throw py::value_error("vertex out of range");
        Instance out = inst;
        out.tau = decrement_at(inst.tau, u);
        return out;
      },
      py::arg("instance"), py::arg("u"),
      "Lower the threshold of u by one (tau^u).");

  m.def(
      "hull",
      [](const Instance& inst, const std::vector<int>& seeds) {
        return hull(AdjacencyView::of(inst), inst.tau, seeds);
      },
      py::arg("instance"), py::arg("seeds"));

  m.def(
      "is_dynamic_monopoly",
      [](const Instance& inst, const std::vector<int>& seeds) {
        return is_dynamic_monopoly(AdjacencyView::of(inst), inst.tau, seeds);
      },
      py::arg("instance"), py::arg("seeds"));

  m.def(
      "mandatory_vertices",
      [](const Instance& inst) {
        return mandatory_vertices(AdjacencyView::of(inst), inst.tau);
      },
      py::arg("instance"));

  m.def(
      "dyn_bruteforce",
      [](const Instance& inst, int max_n) {
        const DynResult r =
            dyn_bruteforce(AdjacencyView::of(inst), inst.tau, max_n);
        return py::make_tuple(ext_to_py(r.value), r.witness);
      },
      py::arg("instance"), py::arg("max_n") = kDefaultDynGuard);

  m.def(
      "vacc1_bruteforce",
      [](const Instance& inst, int b, int max_n) {
        const VaccResult r = vacc1_bruteforce(inst, b, max_n);
        return py::make_tuple(ext_to_py(r.value), r.witness);
      },
      py::arg("instance"), py::arg("b"), py::arg("max_n") = kDefaultVaccGuard);

  m.def(
      "vacc2_bruteforce",
      [](const Instance& inst, int b, int max_n) {
        const VaccResult r = vacc2_bruteforce(inst, b, max_n);
        return py::make_tuple(ext_to_py(r.value), r.witness);
      },
      py::arg("instance"), py::arg("b"), py::arg("max_n") = kDefaultVaccGuard);

  m.def(
      "solve_vacc1",
      [](const Instance& inst, int b, int root) {
        return ext_to_py(solve_vacc1(inst, b, root));
      },
      py::arg("instance"), py::arg("b"), py::arg("root") = 0,
      "vacc1 value; None when b > n.");

  m.def(
      "vacc1_witness",
      [](const Instance& inst, int b, int root) {
        return reconstruct_x(inst, b, root);
      },
      py::arg("instance"), py::arg("b"), py::arg("root") = 0,
      "An optimal immunization set X with |X| = b.");

  m.def(
      "solve_vacc2",
      [](const Instance& inst, int b, int root) {
        return ext_to_py(solve_vacc2(inst, b, root));
      },
      py::arg("instance"), py::arg("b"), py::arg("root") = 0,
      "vacc2 value; None when b > n.");

  m.def(
      "vacc2_witness",
      [](const Instance& inst, int b, int root) {
        return reconstruct_y(inst, b, root);
      },
      py::arg("instance"), py::arg("b"), py::arg("root") = 0,
      "An optimal deletion set Y with |Y| = b.");

  m.def(
      "min_monopoly",
      [](const Instance& inst, int root) {
        return reconstruct_monopoly(inst, root);
      },
      py::arg("instance"), py::arg("root") = 0,
      "A minimum dynamic monopoly of (T, tau).");

  m.def(
      "certify_vacc1",
      [](const Instance& inst, const std::vector<int>& x,
         const py::object& value, int root) {
        return certify_vacc1(inst, x, ext_from_py(value), root);
      },
      py::arg("instance"), py::arg("x"), py::arg("value"), py::arg("root") = 0);

  m.def(
      "certify_vacc2",
      [](const Instance& inst, const std::vector<int>& y,
         const py::object& value) {
        return certify_vacc2(inst, y, ext_from_py(value));
      },
      py::arg("instance"), py::arg("y"), py::arg("value"));

  m.def(
      "delete_vertices",
      [](const Instance& inst, const std::vector<int>& y) {
        for (int u : y)
          if (u < 0 || u >= inst.n) throw py::value_error("vertex out of range");
        py::list out;
        for (auto& comp : delete_vertices(inst, y))
          out.append(py::make_tuple(comp.instance, comp.original_label));
        return out;
      },
      py::arg("instance"), py::arg("y"),
      "Components of T - Y as (instance, original_labels) pairs.");

  m.def(
      "random_instance",
      [](int n, const std::string& profile, std::uint64_t seed) {
        if (n < 1) throw py::value_error("n must be at least 1");
        Rng rng(seed);
        return random_instance(n, ThresholdProfile::parse(profile), rng);
      },
      py::arg("n"), py::arg("profile") = "const:1", py::arg("seed") = 0,
      "Uniform random labeled tree with sampled thresholds.");
}
