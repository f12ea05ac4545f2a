// Thin string/JSON layer over the core; the Python package converts to Fraction and dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tiltwall/errors.hpp"
#include "tiltwall/ledger.hpp"
#include "tiltwall/serialize.hpp"
#include "tiltwall/stability_bounds.hpp"
#include "tiltwall/surface_push.hpp"
#include "tiltwall/svg.hpp"
#include "tiltwall/wall_finder.hpp"

namespace py = pybind11;
using namespace tiltwall;

namespace {

HChern cls(const std::string& text, const std::string& space) { return HChern::parse(text, Space::parse(space)); }

std::string wall_json(const std::optional<Wall>& w) { return w ? Json(*w).dump() : "null"; }

std::string enumerate(const std::string& v, const std::optional<std::string>& rho_min, bool q_floor,
                      bool torsion_rank2, bool parity, std::optional<long> rank_max, unsigned threads) {
  WallConstraints cons;
  if (rho_min) cons.rho_sq_min = Rational::parse(*rho_min);
  cons.use_q_wall_floor = q_floor;
  cons.torsion_rank_two_ceiling = torsion_rank2;
  cons.ch2_parity = parity;
  cons.rank_max = rank_max;
  cons.threads = threads;
  return Json(enumerate_walls(cls(v, "p3"), cons)).dump();
}

std::string ledger(const std::optional<std::string>& filter) { return Json(run_ledger(filter)).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tilt-stability wall computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("twist", [](const std::string& v, const std::string& beta, const std::string& space) {
    return twist(cls(v, space), Rational::parse(beta)).str();
  }, py::arg("v"), py::arg("beta"), py::arg("space") = "p3");
  m.def("delta", [](const std::string& v, const std::string& space) { return delta(cls(v, space)).str(); },
        py::arg("v"), py::arg("space") = "p3");
  m.def("chi", [](const std::string& v) { return euler_char_p3(cls(v, "p3")).str(); }, py::arg("v"));
  m.def("wall", [](const std::string& v, const std::string& w) {
    return wall_json(wall_between(cls(v, "p3"), cls(w, "p3")));
  }, py::arg("v"), py::arg("w"));
  m.def("wall_q", [](const std::string& v) { return wall_json(wall_q(cls(v, "p3"))); }, py::arg("v"));
  m.def("q_form", [](const std::string& v, const std::string& beta, const std::string& alpha) {
    return q_form(cls(v, "p3"), {Rational::parse(beta), Rational::parse(alpha)}).str();
  }, py::arg("v"), py::arg("beta"), py::arg("alpha"));
  m.def("push", [](int d, const std::string& chs, const std::string& input) {
    const SurfaceContext ctx(d);
    const HChern raw = HChern::parse(chs, ctx.space());
    return push_to_p3(ctx, surface_class(d, parse_surface_input(input), raw[0], raw[1], raw[2])).str();
  }, py::arg("d"), py::arg("ch_s"), py::arg("input") = "plain");
  m.def("enumerate_walls", &enumerate, py::arg("v"), py::arg("rho_min") = std::nullopt,
        py::arg("q_floor") = false, py::arg("torsion_rank2") = false, py::arg("parity") = false,
        py::arg("rank_max") = std::nullopt, py::arg("threads") = 1);
  m.def("run_ledger", &ledger, py::arg("filter") = std::nullopt);
  m.def("render_svg", [](const std::string& spec) { return render_svg(plot_spec_from_json(parse_json(spec))); },
        py::arg("spec_json"));
}
