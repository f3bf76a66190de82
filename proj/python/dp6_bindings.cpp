#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dp6/scenario.hpp"

namespace py = pybind11;
using namespace dp6;

namespace {

FieldPtr field_q() {
  return NumberField::make(QPoly({Rat(0), Rat(1)}), {QPoly()});
}

ProjPoint point_from_strings(const FieldPtr& F, const std::vector<std::string>& coords) {
  if (coords.size() != 3) throw py::value_error("a point needs 3 coordinates");
  return ProjPoint(F->from_rational(parse_rat(coords[0])), F->from_rational(parse_rat(coords[1])),
                   F->from_rational(parse_rat(coords[2])));
}

std::vector<std::string> point_to_strings(const ProjPoint& p) {
  std::vector<std::string> out;
  for (int i = 0; i < 3; ++i) {
    if (!p[i].is_rational()) throw py::value_error("point is not rational");
    out.push_back(rat_to_string(p[i].rational_value()));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_dp6, m) {
  m.doc() = "exact degree-6 Del Pezzo surface data: construction and verification";

  m.def("selftest", [](bool as_json) {
    Report rep = run_selftest();
    return py::make_tuple(rep.any_fail() ? 1 : 0,
                          as_json ? rep.to_json().dump(2) : rep.to_text());
  }, py::arg("as_json") = true, "run the built-in corpus; returns (exit_code, report)");

  m.def("verify", [](const std::string& scenario_json, const std::vector<std::string>& checks,
                     bool as_json) {
    Scenario s = parse_scenario(scenario_json);
    apply_env_overrides(s);
    Report rep = run_verify(s, checks);
    return py::make_tuple(rep.any_fail() ? 1 : 0,
                          as_json ? rep.to_json().dump(2) : rep.to_text());
  }, py::arg("scenario_json"), py::arg("checks") = std::vector<std::string>{},
     py::arg("as_json") = true, "verify a scenario given as a JSON string");

  m.def("construct", [](const std::string& scenario_json) {
    Scenario s = parse_scenario(scenario_json);
    apply_env_overrides(s);
    return construct_json(s).dump(2);
  }, py::arg("scenario_json"), "build the surface description JSON from a scenario");

  m.def("cremona", [](const std::vector<std::string>& coords) {
    return point_to_strings(cremona(point_from_strings(field_q(), coords)));
  }, py::arg("point"), "the quadratic involution (yz : xz : xy) on rational points");

  m.def("collinear", [](const std::vector<std::string>& p, const std::vector<std::string>& q,
                        const std::vector<std::string>& r) {
    FieldPtr F = field_q();
    return collinear(point_from_strings(F, p), point_from_strings(F, q),
                     point_from_strings(F, r));
  }, "exact collinearity of three rational points");

  m.def("frame_map", [](const std::vector<std::vector<std::string>>& pts) {
    if (pts.size() != 4) throw py::value_error("need 4 points");
    FieldPtr F = field_q();
    ProjMap mmap = frame_map(point_from_strings(F, pts[0]), point_from_strings(F, pts[1]),
                             point_from_strings(F, pts[2]), point_from_strings(F, pts[3]));
    std::vector<std::vector<std::string>> out(3, std::vector<std::string>(3));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out[r][c] = rat_to_string(mmap.at(r, c).rational_value());
    return out;
  }, "matrix sending four rational points in general position to the standard frame");

  m.def("picard_report", [] {
    PicardReport p = picard_check();
    py::dict out;
    out["kk"] = p.kk;
    out["ok"] = p.ok();
    py::list classes;
    for (const auto& c : p.classes)
      classes.append(py::make_tuple(c.v[0], c.v[1], c.v[2], c.v[3]));
    out["classes"] = classes;
    return out;
  }, "lattice facts: (K,K) and the six (-1)-classes");

  m.def("decompose3", [](const std::vector<std::vector<int>>& involution,
                         const std::vector<int>& x) {
    Brauer3Group g = Brauer3Group::make(static_cast<int>(involution.size()), involution);
    auto [plus, minus] = decompose3(x, g);
    return py::make_tuple(plus, minus);
  }, py::arg("involution"), py::arg("x"),
     "split x into its fixed and anti-fixed parts mod 3");

  m.def("w_basis", [](const std::vector<std::vector<int>>& involution) {
    Brauer3Group g = Brauer3Group::make(static_cast<int>(involution.size()), involution);
    return w_subgroup(g);
  }, py::arg("involution"), "basis of the anti-fixed subgroup W");

  m.def("fixture", [](const std::string& name) -> std::string {
    if (name == "split-rational") return fixtures::split_rational();
    if (name == "cyclic-cubic") return fixtures::cyclic_cubic();
    if (name == "quadratic-swap") return fixtures::quadratic_swap();
    if (name == "corrupted-descent") return fixtures::corrupted_descent();
    throw py::value_error("unknown fixture '" + name + "'");
  }, py::arg("name"), "built-in scenario JSON by name");

  py::register_exception<Error>(m, "Dp6Error");
}
