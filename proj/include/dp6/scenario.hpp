#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dp6/brauer3.hpp"
#include "dp6/dp6core.hpp"

namespace dp6 {

using Json = nlohmann::ordered_json;

struct ScenarioOptions {
  int random_checks = 50;
  int solver_bound = 200;
  uint64_t seed = 271828182;
  bool corrupt_descent = false;
};

struct Scenario {
  std::string name = "scenario";
  FieldPtr field;
  std::array<ProjPoint, 3> points;
  std::optional<ProjPoint> aux;
  std::optional<Subgroup> subgroup;   // G_{M/L} of the input datum
  std::optional<Cocycle> cocycle;     // input class representative
  ScenarioOptions options;
};

// ParseError on malformed input; numbers may be JSON integers or "p/q" strings.
Scenario parse_scenario(const std::string& text);
// DP6_SOLVER_BOUND, when set, overrides the witness-search caps.
void apply_env_overrides(Scenario& s);

struct CheckResult {
  std::string name;
  std::string law;     // the identity the check verifies
  std::string status;  // "pass" | "fail" | "indeterminate"
  std::string detail;
  Json witness;  // structured witness data (may be null)
};

struct Report {
  std::string scenario;
  std::vector<CheckResult> checks;
  bool any_fail() const;
  Json to_json() const;             // deterministic; no timing data
  std::string to_text(double elapsed_seconds = -1.0) const;
};

// known check names, in execution order
const std::vector<std::string>& verify_check_names();

Report run_verify(const Scenario& s, const std::vector<std::string>& selected = {});
Report run_selftest();

// surface description produced by `dp6 construct`
Json construct_json(const Scenario& s);

// rational/element/point/matrix serialization helpers
Json elem_to_json(const FieldElem& e);
Json point_to_json(const ProjPoint& p);
Json map_to_json(const ProjMap& m);
Json mat3_to_json(const std::array<std::array<FieldElem, 3>, 3>& m);
Json poly_to_json(const QPoly& p);

namespace fixtures {
const char* split_rational();
const char* cyclic_cubic();
const char* quadratic_swap();
const char* corrupted_descent();
}  // namespace fixtures

}  // namespace dp6
