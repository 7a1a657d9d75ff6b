#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>
#include <vector>

#include "monoideal/augment.hpp"
#include "monoideal/error.hpp"
#include "monoideal/generic.hpp"
#include "monoideal/reconstruct.hpp"
#include "monoideal/updown.hpp"

namespace py = pybind11;
using namespace monoideal;

namespace {

using Coords = std::vector<LatticePoint::value_type>;
using Points = std::vector<Coords>;

LatticePoint to_point(const Coords& c) { return LatticePoint(c); }

std::optional<LatticePoint> to_point(const std::optional<Coords>& c) {
  if (!c) return std::nullopt;
  return LatticePoint(*c);
}

Antichain to_antichain(const Points& points) {
  PointSet pts;
  for (const auto& c : points) pts.emplace_back(c);
  return Antichain::from_points(std::move(pts));
}

py::list to_python(const Antichain& a) {
  py::list out;
  for (const auto& p : a) out.append(py::tuple(py::cast(Coords(p.coords().begin(), p.coords().end()))));
  return out;
}

}  // namespace

PYBIND11_MODULE(_monoideal, m) {
  m.doc() = "Socles and generators of monomial ideals via the dominance order on Z^d";

  auto error = py::register_exception<Error>(m, "MonoidealError", PyExc_ValueError);
  py::register_exception<NotAnAntichain>(m, "NotAnAntichain", error.ptr());
  py::register_exception<NotCofinite>(m, "NotCofinite", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<OverflowError>(m, "ArithmeticOverflow", error.ptr());

  m.def("leq", [](const Coords& a, const Coords& b) { return leq(to_point(a), to_point(b)); },
        "Dominance order a <= b.");
  m.def("is_antichain", [](const Points& points) {
    PointSet pts(points.begin(), points.end());
    return is_antichain(pts);
  });
  m.def("minimal_elements", [](const Points& points) {
    PointSet pts(points.begin(), points.end());
    return to_python(minimal_elements(pts));
  });
  m.def("maximal_elements", [](const Points& points) {
    PointSet pts(points.begin(), points.end());
    return to_python(maximal_elements(pts));
  });

  m.def("socle_down", [](const Points& gens) { return to_python(socle_down(UpSet(to_antichain(gens)))); },
        "Maximal points outside the upset generated by `gens`.");
  m.def("socle_up", [](const Points& gens) { return to_python(socle_up(DownSet(to_antichain(gens)))); },
        "Minimal points outside the downset generated by `gens`.");

  m.def(
      "augment_up",
      [](const Points& gens, std::optional<Coords> lower, std::optional<Coords> upper) {
        return to_python(augment_up(to_antichain(gens), to_point(lower), to_point(upper)));
      },
      py::arg("generators"), py::arg("lower") = py::none(), py::arg("upper") = py::none());
  m.def(
      "augment_down",
      [](const Points& socle, std::optional<Coords> lower, std::optional<Coords> upper) {
        return to_python(augment_down(to_antichain(socle), to_point(lower), to_point(upper)));
      },
      py::arg("socle"), py::arg("lower") = py::none(), py::arg("upper") = py::none());

  m.def("retrieve_generators",
        [](const Points& socle) { return to_python(retrieve_generators(to_antichain(socle))); });
  m.def(
      "socle_to_generators",
      [](const Points& socle, std::optional<Coords> lower, std::optional<Coords> upper) {
        return to_python(socle_to_generators(to_antichain(socle), to_point(lower), to_point(upper)));
      },
      py::arg("socle"), py::arg("lower") = py::none(), py::arg("upper") = py::none());
  m.def(
      "zero_dim_ideal_from_socle",
      [](const Points& socle, std::optional<Coords> upper) {
        return to_python(zero_dim_ideal_from_socle(to_antichain(socle), to_point(upper)));
      },
      py::arg("socle"), py::arg("upper") = py::none());
  m.def("type2_generators", [](const Coords& p, const Coords& q) {
    return to_python(type2_generators(to_point(p), to_point(q)));
  });
  m.def("type3_generators",
        [](const Points& socle) { return to_python(type3_generators(to_antichain(socle))); });

  m.def("classify_type", [](const Points& gens) {
    const auto t = classify_type(to_antichain(gens));
    py::dict out;
    out["zero_dimensional"] = t.zero_dimensional;
    out["type"] = t.type ? py::cast(*t.type) : py::none();
    out["gorenstein"] = t.gorenstein;
    return out;
  });
  m.def("is_order_generic", [](const Points& points) { return is_order_generic(to_antichain(points)); });
  m.def("ordered_bell", &ordered_bell, py::arg("k"));
}
