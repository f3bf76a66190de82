#include "dp6/scenario.hpp"

#include <cstdlib>
#include <sstream>

namespace dp6 {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail(Err::ParseError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

std::vector<Rat> rat_vector(const Json& j) {
  if (!j.is_array()) fail(Err::ParseError, "expected a coefficient array, got " + j.dump());
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

FieldElem elem_from_json(const FieldPtr& f, const Json& j) { return f->elem(rat_vector(j)); }

ProjPoint point_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array() || j.size() != 3)
    fail(Err::ParseError, "a point needs exactly 3 coordinates");
  return ProjPoint(elem_from_json(f, j[0]), elem_from_json(f, j[1]), elem_from_json(f, j[2]));
}

ProjMap map_from_json(const FieldPtr& f, const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(Err::ParseError, "a matrix needs 3 rows");
  std::array<std::array<FieldElem, 3>, 3> m;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) fail(Err::ParseError, "a matrix row needs 3 entries");
    for (int c = 0; c < 3; ++c) m[r][c] = elem_from_json(f, j[r][c]);
  }
  return ProjMap(std::move(m));
}

}  // namespace

Json elem_to_json(const FieldElem& e) {
  Json out = Json::array();
  for (const Rat& c : e.coeffs()) out.push_back(rat_to_string(c));
  return out;
}

Json point_to_json(const ProjPoint& p) {
  return Json::array({elem_to_json(p[0]), elem_to_json(p[1]), elem_to_json(p[2])});
}

Json map_to_json(const ProjMap& m) {
  Json out = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(elem_to_json(m.at(r, c)));
    out.push_back(row);
  }
  return out;
}

Json mat3_to_json(const std::array<std::array<FieldElem, 3>, 3>& m) {
  Json out = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(elem_to_json(m[r][c]));
    out.push_back(row);
  }
  return out;
}

Json poly_to_json(const QPoly& p) {
  Json out = Json::array();
  for (const Rat& c : p.coeffs()) out.push_back(rat_to_string(c));
  return out;
}

Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, e.what());
  }
  try {
    if (!j.is_object()) fail(Err::ParseError, "scenario must be a JSON object");
    if (j.value("schema", "") != std::string("dp6-scenario/1"))
      fail(Err::ParseError, "missing or unsupported schema tag (want dp6-scenario/1)");

    Scenario s;
    s.name = j.value("name", "scenario");

    const Json& jf = j.at("field");
    QPoly modulus(rat_vector(jf.at("modulus")));
    std::vector<QPoly> images;
    for (const auto& img : jf.at("automorphisms")) images.emplace_back(rat_vector(img));
    s.field = NumberField::make(modulus, images);

    const Json& jp = j.at("points");
    const Json& triple = jp.at("triple");
    if (!triple.is_array() || triple.size() != 3)
      fail(Err::ParseError, "points.triple needs exactly 3 points");
    for (int i = 0; i < 3; ++i) s.points[i] = point_from_json(s.field, triple[i]);
    if (jp.contains("aux")) s.aux = point_from_json(s.field, jp.at("aux"));

    if (j.contains("subgroup")) {
      std::vector<int> idx;
      for (const auto& x : j.at("subgroup")) idx.push_back(x.get<int>());
      s.subgroup = Subgroup::make(s.field, std::move(idx));
    }

    if (j.contains("cocycle")) {
      const Json& jc = j.at("cocycle");
      std::vector<int> idx;
      for (const auto& x : jc.at("group")) idx.push_back(x.get<int>());
      Subgroup grp = Subgroup::make(s.field, std::move(idx));
      std::map<int, ProjMap> table;
      for (const auto& [key, val] : jc.at("maps").items())
        table.emplace(std::stoi(key), map_from_json(s.field, val));
      s.cocycle = Cocycle(grp, std::move(table));
    }

    if (j.contains("options")) {
      const Json& jo = j.at("options");
      s.options.random_checks = jo.value("random_checks", s.options.random_checks);
      s.options.solver_bound = jo.value("solver_bound", s.options.solver_bound);
      s.options.seed = jo.value("seed", s.options.seed);
      s.options.corrupt_descent = jo.value("corrupt_descent", s.options.corrupt_descent);
      if (s.options.random_checks <= 0 || s.options.solver_bound <= 0)
        fail(Err::ParseError, "options counts must be positive");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, e.what());
  }
}

void apply_env_overrides(Scenario& s) {
  if (const char* bound = std::getenv("DP6_SOLVER_BOUND")) {
    int b = std::atoi(bound);
    if (b > 0) s.options.solver_bound = b;
  }
}

bool Report::any_fail() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

Json Report::to_json() const {
  Json out;
  out["schema"] = "dp6-report/1";
  out["scenario"] = scenario;
  out["checks"] = Json::array();
  int pass = 0, failc = 0, indet = 0;
  for (const auto& c : checks) {
    Json jc;
    jc["name"] = c.name;
    jc["law"] = c.law;
    jc["status"] = c.status;
    jc["detail"] = c.detail;
    jc["witness"] = c.witness.is_null() ? Json(nullptr) : c.witness;
    out["checks"].push_back(jc);
    if (c.status == "pass") ++pass;
    else if (c.status == "fail") ++failc;
    else ++indet;
  }
  out["summary"] = Json{{"pass", pass}, {"fail", failc}, {"indeterminate", indet}};
  return out;
}

std::string Report::to_text(double elapsed_seconds) const {
  std::ostringstream out;
  out << "scenario: " << scenario << "\n";
  int pass = 0, failc = 0, indet = 0;
  for (const auto& c : checks) {
    std::string tag = c.status == "pass" ? "PASS" : (c.status == "fail" ? "FAIL" : "INDET");
    out << "  [" << tag << "] " << c.name << " — " << c.law;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
    if (c.status == "pass") ++pass;
    else if (c.status == "fail") ++failc;
    else ++indet;
  }
  out << "summary: " << pass << " pass, " << failc << " fail, " << indet << " indeterminate";
  if (elapsed_seconds >= 0) out << " [" << elapsed_seconds << " s]";
  out << "\n";
  return out.str();
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{
      "field-laws", "construct", "hexagon",  "galois-action",
      "triangle-field", "cocycles", "opposite", "descent", "roundtrip"};
  return names;
}

namespace {

struct CheckContext {
  const Scenario& s;
  std::optional<Dp6Surface> surface;
  std::optional<HexagonAction> hexagon;
  std::optional<Subgroup> kernel;
  std::optional<Etale2> triangle;
  std::optional<std::pair<Cocycle, Cocycle>> cocycles;

  const Dp6Surface& surf() {
    if (!surface) surface = dp6_construct(s.field, s.points, s.aux);
    return *surface;
  }
  const HexagonAction& hex() {
    if (!hexagon) hexagon = galois_hexagon_action(surf());
    return *hexagon;
  }
  const Subgroup& ker() {
    if (!kernel) kernel = triangle_kernel(surf());
    return *kernel;
  }
  const Etale2& tri() {
    if (!triangle) triangle = fixed_subfield(s.field, ker());
    return *triangle;
  }
  const std::pair<Cocycle, Cocycle>& bdc() {
    if (!cocycles) cocycles = blow_down_cocycles(surf());
    return *cocycles;
  }
};

CheckResult run_one_check(CheckContext& ctx, const std::string& name) {
  const Scenario& s = ctx.s;
  CheckResult r;
  r.name = name;
  r.status = "pass";
  r.witness = Json(nullptr);
  try {
    if (name == "field-laws") {
      r.law = "automorphism group action and exact inverses";
      Rng rng(s.options.seed);
      const int n = s.field->group_order();
      for (int k = 0; k < std::max(1, s.options.random_checks / 5); ++k) {
        FieldElem x = rng.field_elem(s.field);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            FieldElem lhs = s.field->apply(s.field->compose(a, b), x);
            FieldElem rhs = s.field->apply(a, s.field->apply(b, x));
            if (!(lhs == rhs)) {
              r.status = "fail";
              r.detail = "composition law violated";
            }
          }
        FieldElem y = rng.field_elem_nonzero(s.field);
        if (!(y * s.field->inv(y) == s.field->one())) {
          r.status = "fail";
          r.detail = "inverse law violated";
        }
      }
    } else if (name == "construct") {
      r.law = "closure of the graph of the quadratic involution";
      const Dp6Surface& surf = ctx.surf();
      // both forms vanish at (p, transported b(p)) for sampled p, and the
      // fiber over p is cut out uniquely (the two forms are independent)
      Rng rng(s.options.seed + 1);
      ProjMap psi_inv = surf.psi.inverse();
      int tested = 0;
      for (int k = 0; k < s.options.random_checks * 4 && tested < s.options.random_checks; ++k) {
        auto [p, q_fiber] = surface_sample(surf, rng);
        ProjPoint fp = surf.phi(p);
        if (fp[0].is_zero() || fp[1].is_zero() || fp[2].is_zero()) continue;  // base locus
        ProjPoint q = psi_inv(cremona(fp));
        ++tested;
        if (q != q_fiber) {
          r.status = "fail";
          r.detail = "transported involution image differs from the cut-out fiber";
        }
        for (int g = 0; g < 2; ++g) {
          FieldElem v = s.field->zero();
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) v = v + p[a] * surf.ideal[g][a][b] * q[b];
          if (!v.is_zero()) {
            r.status = "fail";
            r.detail = "a generator fails to vanish on the graph";
          }
        }
      }
      r.detail = r.status == "pass" ? (std::to_string(tested) + " graph points verified")
                                    : r.detail;
      r.witness = Json{{"ideal", Json::array({mat3_to_json(surf.ideal[0]),
                                              mat3_to_json(surf.ideal[1])})}};
    } else if (name == "hexagon") {
      r.law = "the six exceptional curves form a single 6-cycle";
      const HexagonAction& h = ctx.hex();
      if (!h.hexagon_ok) {
        r.status = "fail";
        r.detail = "incidence matrix is not the hexagon";
      }
      Json inc = Json::array();
      for (int i = 0; i < 6; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 6; ++j) row.push_back(h.incidence[i][j]);
        inc.push_back(row);
      }
      r.witness = Json{{"incidence", inc}};
    } else if (name == "galois-action") {
      r.law = "Galois acts through hexagon automorphisms";
      const HexagonAction& h = ctx.hex();  // construction already verifies the laws
      Json acts = Json::array();
      for (size_t sg = 0; sg < h.perms.size(); ++sg) {
        Json perm = Json::array();
        for (int i = 0; i < 6; ++i) perm.push_back(kCurveNames[h.perms[sg][i]]);
        acts.push_back(Json{{"sigma", sg}, {"swaps_triangles", h.swap_char[sg] == 1},
                            {"perm", perm}});
      }
      r.witness = Json{{"action", acts}};
    } else if (name == "triangle-field") {
      r.law = "the triangle field has degree at most 2";
      const Etale2& L = ctx.tri();
      if (s.subgroup && !(ctx.ker() == *s.subgroup)) {
        r.status = "fail";
        r.detail = "declared subgroup differs from the swap-character kernel";
      } else {
        r.detail = L.is_split() ? "split" : ("quadratic, " + L.minpoly.str());
      }
      r.witness = L.is_split() ? Json{{"kind", "split"}}
                               : Json{{"kind", "quadratic"}, {"minpoly", poly_to_json(L.minpoly)}};
    } else if (name == "cocycles") {
      r.law = "frame cocycles satisfy the cocycle law and land in H";
      const auto& [eta, xi] = ctx.bdc();
      if (!cocycle_check(eta) || !cocycle_check(xi)) {
        r.status = "fail";
        r.detail = "cocycle law violated";
      }
      for (int sg : eta.group().indices())
        if (!is_monomial(eta.at(sg)) || !is_monomial(xi.at(sg))) {
          r.status = "fail";
          r.detail = "a cocycle value is not monomial";
        }
    } else if (name == "opposite") {
      r.law = "second cocycle is the transpose-inverse of the first";
      const auto& [eta, xi] = ctx.bdc();
      if (!verify_opposite(eta, xi)) {
        r.status = "fail";
        r.detail = "opposition identity violated";
      }
    } else if (name == "descent") {
      r.law = "the twisted factor swap squares to the identity";
      if (ctx.tri().is_split()) {
        r.status = "indeterminate";
        r.detail = "not applicable: split triangle field";
      } else {
        int sigma = -1;
        for (int sg = 0; sg < s.field->group_order(); ++sg)
          if (!ctx.ker().contains(sg)) { sigma = sg; break; }
        DescentMap f = switch_descent_map(ctx.surf(), sigma);
        if (s.options.corrupt_descent) {
          const FieldPtr& F = s.field;
          f.corruption = ProjMap::diagonal(F->from_rational(2), F->one(), F->one());
        }
        bool ok = descent_verify(ctx.surf(), f, s.options.random_checks, s.options.seed + 2);
        if (!ok) {
          r.status = "fail";
          r.detail = s.options.corrupt_descent ? "corrupted control failed as intended"
                                               : "descent law violated";
        }
        r.witness = Json{{"sigma", f.sigma}, {"corrupted", s.options.corrupt_descent}};
      }
    } else if (name == "roundtrip") {
      r.law = "data triple equivalence under extract after construct";
      DataTriple recovered = extract_data_triple(ctx.surf());
      DataTriple input = recovered;
      input.points = s.points;
      if (s.subgroup) input.etale = fixed_subfield(s.field, *s.subgroup);
      if (s.cocycle) input.cocycle = *s.cocycle;
      RoundtripReport rr = roundtrip_compare(input, recovered, s.options.solver_bound);
      switch (rr.overall()) {
        case CmpStatus::True: r.status = "pass"; break;
        case CmpStatus::False: r.status = "fail"; break;
        case CmpStatus::Indeterminate: r.status = "indeterminate"; break;
      }
      r.detail = rr.detail;
      if (rr.witness) r.witness = Json{{"coboundary", map_to_json(*rr.witness)}};
    } else {
      fail(Err::ParseError, "unknown check '" + name + "'");
    }
  } catch (const Error& e) {
    if (e.code() == Err::ParseError) throw;
    r.status = "fail";
    r.detail = e.what();
  }
  return r;
}

CheckResult picard_result() {
  CheckResult r;
  r.name = "picard";
  r.law = "(K,K) = 6 and exactly six (-1)-classes of degree 1";
  PicardReport p = picard_check();
  r.status = p.ok() ? "pass" : "fail";
  r.detail = "(K,K) = " + std::to_string(p.kk) + ", " + std::to_string(p.classes.size()) +
             " classes";
  Json cls = Json::array();
  for (const auto& c : p.classes) cls.push_back(Json::array({c.v[0], c.v[1], c.v[2], c.v[3]}));
  r.witness = Json{{"classes", cls}};
  return r;
}

CheckResult brauer3_result() {
  CheckResult r;
  r.name = "brauer3";
  r.law = "eigenspace decomposition and fixed + W direct sum";
  r.status = "pass";
  r.witness = Json(nullptr);
  int cases = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    std::vector<Brauer3Group> gs{Brauer3Group::identity_involution(rank),
                                 Brauer3Group::negation(rank)};
    if (rank >= 2) gs.push_back(Brauer3Group::coordinate_swap(rank));
    for (const auto& g : gs) {
      ++cases;
      if (!direct_sum_check(g)) r.status = "fail";
      // exhaustive over the whole group
      int total = 1;
      for (int i = 0; i < rank; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<int> x(rank);
        int c = code;
        for (int i = 0; i < rank; ++i) { x[i] = c % 3; c /= 3; }
        auto [plus, minus] = decompose3(x, g);
        auto splus = g.apply(plus);
        auto sminus = g.apply(minus);
        for (int i = 0; i < rank; ++i) {
          if ((plus[i] + minus[i]) % 3 != x[i] % 3) r.status = "fail";
          if (splus[i] != plus[i]) r.status = "fail";
          if ((sminus[i] + minus[i]) % 3 != 0) r.status = "fail";
        }
      }
    }
  }
  r.detail = std::to_string(cases) + " involutions, exhaustive vectors";
  return r;
}

}  // namespace

Report run_verify(const Scenario& s, const std::vector<std::string>& selected) {
  std::vector<std::string> names = selected.empty() ? verify_check_names() : selected;
  for (const auto& n : names) {
    const auto& known = verify_check_names();
    if (std::find(known.begin(), known.end(), n) == known.end())
      fail(Err::ParseError, "unknown check '" + n + "'");
  }
  Report rep;
  rep.scenario = s.name;
  CheckContext ctx{s};
  for (const auto& n : names) rep.checks.push_back(run_one_check(ctx, n));
  return rep;
}

Report run_selftest() {
  Report rep;
  rep.scenario = "selftest";
  for (const char* text : {fixtures::split_rational(), fixtures::cyclic_cubic(),
                           fixtures::quadratic_swap()}) {
    Scenario s = parse_scenario(text);
    apply_env_overrides(s);
    Report sub = run_verify(s);
    for (auto& c : sub.checks) {
      c.name = s.name + "/" + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  rep.checks.push_back(picard_result());
  rep.checks.push_back(brauer3_result());
  return rep;
}

Json construct_json(const Scenario& s) {
  Dp6Surface surf = dp6_construct(s.field, s.points, s.aux);
  HexagonAction h = galois_hexagon_action(surf);
  Etale2 L = fixed_subfield(s.field, triangle_kernel(surf));

  Json out;
  out["schema"] = "dp6-surface/1";
  out["scenario"] = s.name;
  out["frames"] = Json{{"phi", map_to_json(surf.phi)}, {"psi", map_to_json(surf.psi)}};
  out["ideal"] = Json::array({mat3_to_json(surf.ideal[0]), mat3_to_json(surf.ideal[1])});
  out["p_triple"] = Json::array({point_to_json(surf.p_triple[0]), point_to_json(surf.p_triple[1]),
                                 point_to_json(surf.p_triple[2])});
  out["q_triple"] = Json::array({point_to_json(surf.q_triple[0]), point_to_json(surf.q_triple[1]),
                                 point_to_json(surf.q_triple[2])});
  out["aux"] = point_to_json(surf.aux);

  Json curves = Json::array();
  for (int i = 0; i < 6; ++i) {
    const ExcCurve& c = h.curves[i];
    curves.push_back(Json{
        {"name", kCurveNames[i]},
        {"kind", c.kind == ExcCurve::Kind::PointTimesLine ? "point x line" : "line x point"},
        {"point", point_to_json(c.point)},
        {"line", point_to_json(c.line)}});
  }
  Json inc = Json::array();
  for (int i = 0; i < 6; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 6; ++j) row.push_back(h.incidence[i][j]);
    inc.push_back(row);
  }
  Json acts = Json::array();
  for (size_t sg = 0; sg < h.perms.size(); ++sg) {
    Json perm = Json::array();
    for (int i = 0; i < 6; ++i) perm.push_back(kCurveNames[h.perms[sg][i]]);
    acts.push_back(
        Json{{"sigma", sg}, {"swaps_triangles", h.swap_char[sg] == 1}, {"perm", perm}});
  }
  out["hexagon"] = Json{{"curves", curves}, {"incidence", inc}, {"action", acts}};
  out["triangle_field"] = L.is_split()
                              ? Json{{"kind", "split"}}
                              : Json{{"kind", "quadratic"}, {"minpoly", poly_to_json(L.minpoly)}};
  return out;
}

}  // namespace dp6
