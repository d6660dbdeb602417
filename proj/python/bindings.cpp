// Python bindings. Objects cross the boundary in the same JSON shapes the
// CLI reads and writes (rationals as "num/den" strings); inputs may also
// use Python ints and fractions.Fraction anywhere a rational is expected.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamcut/alpha_cut.hpp"
#include "hamcut/arrangement.hpp"
#include "hamcut/error.hpp"
#include "hamcut/grid_uso.hpp"
#include "hamcut/io.hpp"
#include "hamcut/levels.hpp"
#include "hamcut/separation.hpp"
#include "hamcut/stretchability.hpp"

namespace py = pybind11;
using namespace hamcut;
using io::Json;

namespace {

Json to_json(const py::handle& obj) {
  const py::module_ json = py::module_::import("json");
  const py::object builtins_str = py::module_::import("builtins").attr("str");
  return io::parse(json.attr("dumps")(obj, py::arg("default") = builtins_str).cast<std::string>());
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// Bare class lists are accepted in place of a full instance document.
ColoredPointSet instance(const py::handle& obj) {
  Json j = to_json(obj);
  if (j.is_array()) {
    const std::size_t d = j.empty() || j[0].empty() ? 0 : j[0][0].size();
    j = {{"dimension", d}, {"classes", j}};
  }
  return io::instance_from(j);
}

py::object cuts_to_py(const std::vector<Cut>& cuts) {
  Json out = Json::array();
  for (const Cut& c : cuts) out.push_back(io::to_json(c));
  return to_py(out);
}

AllowableSequence sequence(const py::handle& obj) {
  Json j = to_json(obj);
  if (j.is_array()) j = {{"n", j.empty() ? 0 : j[0].size()}, {"perms", j}};
  return io::sequence_from(j);
}

std::vector<Hyperplane> hyperplanes(const py::handle& obj) {
  std::vector<Hyperplane> out;
  for (const Json& h : to_json(obj)) out.push_back(io::hyperplane_from(h));
  return out;
}

py::object hyperplanes_to_py(const std::vector<Hyperplane>& lines) {
  Json out = Json::array();
  for (const Hyperplane& h : lines) out.push_back(io::to_json(h));
  return to_py(out);
}

UsoMode mode_from(const std::string& mode) {
  if (mode == "full") return UsoMode::Full;
  if (mode == "lemma21") return UsoMode::CubeCriterion;
  throw Error(ErrorKind::OutOfRange, "mode must be full or lemma21");
}

}  // namespace

PYBIND11_MODULE(_hamcut, m) {
  m.doc() = "Exact colorful ham-sandwich cuts, grid USOs and bicolored stretchability";

  static py::exception<Error> error(m, "HamcutError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<GridOrientation>(m, "GridOrientation")
      .def_property_readonly("shape", [](const GridOrientation& o) { return o.shape().dims; })
      .def("points_out", [](const GridOrientation& o, const GridVertex& v, std::size_t dim,
                            std::size_t b) { return o.points_out(v, dim, b); })
      .def("outmap", [](const GridOrientation& o, const GridVertex& v) { return outmap(o, v); })
      .def(
          "is_uso",
          [](const GridOrientation& o, const std::string& mode) {
            return to_py(io::to_json(is_uso(o, mode_from(mode)), o.shape()));
          },
          py::arg("mode") = "full")
      .def("outmap_bijective", [](const GridOrientation& o) { return outmap_table(o).bijection; })
      .def("find_vertex_with_outmap",
           [](const GridOrientation& o, const Outmap& target) { return find_vertex_with_outmap(o, target); })
      .def("to_json", [](const GridOrientation& o) { return to_py(io::to_json(o)); })
      .def_static("from_json", [](const py::object& j) { return io::orientation_from(to_json(j)); })
      .def("__eq__", [](const GridOrientation& a, const GridOrientation& b) { return a == b; });

  m.def("check_weak_general_position",
        [](const py::object& p) { return to_py(io::to_json(check_weak_general_position(instance(p)))); });
  m.def("check_well_separated", [](const py::object& p) { return to_py(io::to_json(check_well_separated(instance(p)))); });
  m.def("check_beta_gamma", [](const py::object& p, std::vector<std::size_t> beta, std::vector<std::size_t> gamma) {
    return to_py(io::to_json(check_beta_gamma(instance(p), {std::move(beta), std::move(gamma)})));
  });

  m.def("build_sigma", [](const py::object& p) { return build_sigma(instance(p)); });
  m.def("find_alpha_cut",
        [](const py::object& p, const AlphaVector& alpha) { return to_py(io::to_json(find_alpha_cut(instance(p), alpha))); });
  m.def("cut_from_grid",
        [](const py::object& p, const AlphaVector& alpha) { return to_py(io::to_json(cut_from_grid(instance(p), alpha))); });
  m.def("all_alpha_cuts", [](const py::object& p) {
    std::vector<Cut> cuts;
    for (auto& [alpha, cut] : all_alpha_cuts(instance(p))) cuts.push_back(cut);
    return cuts_to_py(cuts);
  });
  m.def("probe_lemma_a1", [](const py::object& p) {
    const SemiCutProbeReport r = probe_lemma_a1(instance(p));
    return py::dict(py::arg("semi_cuts") = r.semi_cuts, py::arg("degenerate_tuples") = r.degenerate_tuples,
                    py::arg("multiple") = r.multiple.size());
  });

  m.def("dualize", [](const py::object& p) { return to_py(io::to_json(dualize(instance(p)))); });
  m.def("verify_rainbow_ws", [](const py::object& a) {
    const RainbowReport r = verify_rainbow_ws(io::arrangement_from(to_json(a)));
    return py::dict(py::arg("rainbow") = r.rainbow, py::arg("well_separated") = r.well_separated);
  });
  m.def("x_alpha", [](const py::object& a, const AlphaVector& alpha) {
    return to_py(io::to_json(x_alpha_bruteforce(io::arrangement_from(to_json(a)), alpha)));
  });
  m.def("k_level", [](const py::object& lines, std::size_t k) { return to_py(io::to_json(k_level(hyperplanes(lines), k))); });

  m.def("sweep_sequence", [](const py::object& lines) { return to_py(io::to_json(sweep_sequence(hyperplanes(lines)))); });
  m.def("validate_allowable", [](const py::object& seq) { return validate_allowable(sequence(seq)); });
  m.def("reduce_to_bicolored", [](const py::object& seq) { return to_py(io::to_json(reduce_to_bicolored(sequence(seq)))); });
  m.def("realize_pseudolines",
        [](const py::object& desc) { return to_py(io::to_json(realize_pseudolines(io::description_from(to_json(desc))))); });
  m.def("realize_straight", [](const py::object& seq, const py::object& lines) {
    return to_py(io::to_json(realize_straight(sequence(seq), hyperplanes(lines))));
  });
  m.def("extract_allowable",
        [](const py::object& arr) { return hyperplanes_to_py(extract_allowable(io::lines2d_from(to_json(arr))).lines); });
  m.def("verify_description", [](const py::object& arr, const py::object& desc) {
    const Json aj = to_json(arr);
    const BicoloredDescription d = io::description_from(to_json(desc));
    const VerifyReport r = io::is_straight(aj) ? verify_description(io::lines2d_from(aj), d)
                                               : verify_description(io::polylines_from(aj), d);
    return py::make_tuple(r.ok, r.diff);
  });
  m.def("crossing_lower_bound", [](const py::object& desc, const std::string& a, const std::string& b) {
    return crossing_lower_bound(io::description_from(to_json(desc)), a, b);
  });
  m.def("orientation_from_description",
        [](const py::object& desc) { return orientation_from_description(io::description_from(to_json(desc))); });
  m.def("describe", [](const py::object& arr) {
    const Json aj = to_json(arr);
    return to_py(io::to_json(io::is_straight(aj) ? describe(io::lines2d_from(aj)) : describe(io::polylines_from(aj))));
  });
  m.def("dual_line_arrangement", [](const py::object& p) { return to_py(io::to_json(dual_line_arrangement(instance(p)))); });
}
