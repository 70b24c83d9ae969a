#include <memory>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toroidal/errors.hpp"
#include "toroidal/garland.hpp"
#include "toroidal/rootsys.hpp"
#include "toroidal/symfun.hpp"
#include "toroidal/weylmod.hpp"

namespace py = pybind11;
using namespace toroidal;

namespace {

// FockSpace is neither copyable nor movable; keep it and the model together.
struct Model {
  Model(char type, int rank, int nvars)
      : space(std::make_unique<fock::FockSpace>(fock::Lattice(rootsys::build_root_system(type, rank), nvars))),
        model(std::make_unique<weylmod::WeylModel>(*space)) {}
  std::unique_ptr<fock::FockSpace> space;
  std::unique_ptr<weylmod::WeylModel> model;
};

weylmod::CharTable table(const Model& m, const std::string& which, int order, int window) {
  std::vector<std::pair<int, int>> mwin(m.space->nvars() - 1, {-2, 2});
  if (which == "L0") return weylmod::l_zero_char(*m.space, order);
  if (which == "L0-closed-form") return weylmod::l_zero_closed_form(*m.space, order);
  if (which == "Vfock") return weylmod::fock_character(*m.space, order, mwin);
  if (which == "Wloc-spanning") return weylmod::spanning_character(*m.space, order, window);
  if (which == "Wloc-local") return weylmod::local_fock_character(*m.model, order, window);
  if (which == "closed-form") return weylmod::closed_form(*m.space, order, window, true);
  throw InvalidArgument("unknown table '" + which + "'");
}

}  // namespace

PYBIND11_MODULE(_toroidal, m) {
  m.doc() = "Bindings for the toroidal Weyl module toolkit";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NotSimplyLaced>(m, "NotSimplyLaced", PyExc_ValueError);
  py::register_exception<SliceExhausted>(m, "SliceExhausted", PyExc_RuntimeError);
  py::register_exception<WindowMismatch>(m, "WindowMismatch", PyExc_ValueError);

  py::class_<Model>(m, "Model")
      .def(py::init<char, int, int>(), py::arg("type") = 'A', py::arg("rank") = 1, py::arg("nvars") = 2)
      .def_property_readonly("rank", [](const Model& x) { return x.space->rank(); })
      .def_property_readonly("nvars", [](const Model& x) { return x.space->nvars(); })
      .def_property_readonly("label", [](const Model& x) { return x.space->lattice().root_system().label(); })
      .def(
          "basis_size",
          [](const Model& x, int emax, int lo, int hi) {
            std::vector<std::pair<int, int>> w(x.space->nvars() - 1, {lo, hi});
            return x.space->enumerate_basis(emax, w).size();
          },
          py::arg("emax"), py::arg("lo") = -2, py::arg("hi") = 2);

  m.def(
      "verify",
      [](const Model& x, const std::string& suite, int emax, int samples, int per_family, std::uint32_t seed,
         int rmax, int order, int window) {
        weylmod::SuiteOptions opt;
        opt.slice.emax = emax;
        opt.slice.samples = samples;
        opt.slice.per_family = per_family;
        opt.slice.seed = seed;
        opt.rmax = rmax;
        opt.order = order;
        opt.window = window;
        py::gil_scoped_release release;
        return weylmod::run_suite(*x.model, suite, opt).to_jsonl();
      },
      py::arg("model"), py::arg("suite"), py::arg("emax") = 6, py::arg("samples") = 200, py::arg("per_family") = 8,
      py::arg("seed") = 1, py::arg("rmax") = -1, py::arg("order") = 6, py::arg("window") = 2,
      "Runs a suite and returns its JSON-lines report.");

  m.def("suite_names", &weylmod::suite_names);

  m.def(
      "char_table",
      [](const Model& x, const std::string& which, int order, int window, const std::string& format) {
        weylmod::CharTable t = table(x, which, order, window);
        if (format == "csv") return t.to_csv();
        if (format == "json") return t.to_json();
        throw InvalidArgument("format must be json or csv");
      },
      py::arg("model"), py::arg("which"), py::arg("order") = 6, py::arg("window") = 2, py::arg("format") = "json");

  m.def(
      "garland_coeff",
      [](int s) { return garland::garland_coeffs(s).at(s).to_string(); }, py::arg("s"));

  m.def(
      "elementary",
      [](int r, int nvars) { return symfun::elementary(r, nvars).to_string(); }, py::arg("r"), py::arg("nvars"));
}
