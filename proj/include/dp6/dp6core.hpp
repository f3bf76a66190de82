#pragma once

#include <optional>

#include "dp6/cocohom.hpp"
#include "dp6/rng.hpp"

namespace dp6 {

// ---------------------------------------------------------------------------
// Picard lattice of the degree-6 surface: rank 4, basis (l, e1, e2, e3),
// intersection form diag(1,-1,-1,-1), canonical class K = -3l + e1 + e2 + e3.

struct LatticeClass {
  std::array<int, 4> v{0, 0, 0, 0};  // coefficients on (l, e1, e2, e3)
  int dot(const LatticeClass& o) const {
    return v[0] * o.v[0] - v[1] * o.v[1] - v[2] * o.v[2] - v[3] * o.v[3];
  }
};

struct PicardReport {
  int kk = 0;                          // (K, K)
  std::vector<LatticeClass> classes;   // self-intersection -1, degree 1, |coeff| <= 3
  bool kk_is_six = false;
  bool exactly_six = false;
  bool matches_expected = false;       // {e_i} and {l - e_i - e_j}
  bool hexagon_bijection = false;      // lattice pairing = hexagon incidence
  bool ok() const { return kk_is_six && exactly_six && matches_expected && hexagon_bijection; }
};

PicardReport picard_check();

// ---------------------------------------------------------------------------
// Exceptional curves. On the graph-closure model each one is a point in one
// factor times a line in the other.

struct ExcCurve {
  enum class Kind { PointTimesLine, LineTimesPoint };
  Kind kind;
  ProjPoint point;  // in the point factor
  ProjPoint line;   // covector in the line factor
  bool operator==(const ExcCurve& o) const {
    return kind == o.kind && point == o.point && line == o.line;
  }
};

// Curve labels, fixed order: E1 E2 E3 F23 F13 F12. F_jk sits opposite E_i
// (disjoint from it), with {i, j, k} = {1, 2, 3}.
enum : int { CURVE_E1 = 0, CURVE_E2, CURVE_E3, CURVE_F23, CURVE_F13, CURVE_F12 };
extern const char* const kCurveNames[6];

struct HexagonAction {
  std::array<ExcCurve, 6> curves;
  std::array<std::array<int, 6>, 6> incidence{};  // 0/1, zero diagonal
  // per automorphism of the full group: permutation of curve labels and the
  // triangle-swap character (1 when sigma exchanges the two blow-down triples)
  std::vector<std::array<int, 6>> perms;
  std::vector<int> swap_char;
  bool hexagon_ok = false;  // 6-cycle E1-F12-E2-F23-E3-F13-E1
};

// ---------------------------------------------------------------------------
// The surface: frame data plus the standard bihomogeneous ideal transported
// through the frames. The ideal is stored as the canonical reduced basis of
// the two (1,1)-forms p^T M q.

class Dp6Surface {
 public:
  FieldPtr field;
  std::array<ProjPoint, 3> p_triple;
  std::array<ProjPoint, 3> q_triple;
  ProjPoint aux;
  ProjMap phi;  // frame on the first factor: P1 P2 P3 aux -> standard frame
  ProjMap psi;  // frame on the second factor (transpose-inverse of phi)
  std::array<std::array<std::array<FieldElem, 3>, 3>, 2> ideal;  // canonical basis
  Subgroup p_stabilizer;  // elements of the full group preserving the P-set
};

// Blows up the plane at P (realized as the closure of the graph of the
// quadratic involution based at P). aux must be in general position; when
// omitted a documented sweep (1:1:1), (1:2:3), (1:3:2), (1:a:b)... is used.
// The P-set stabilizer must have index 1 or 2 in the full group
// (NotGaloisStable otherwise).
Dp6Surface dp6_construct(const FieldPtr& field, const std::array<ProjPoint, 3>& points,
                         std::optional<ProjPoint> aux = std::nullopt);

// The six exceptional curves with their incidence matrix.
HexagonAction exceptional_curves(const Dp6Surface& s);

// Adds the Galois permutations: sigma acts directly when it preserves the
// ideal, and through the factor swap when it maps the ideal to the swapped
// ideal (NotAnAction if neither, or if the assignment is not a homomorphism
// into the hexagon automorphisms).
HexagonAction galois_hexagon_action(const Dp6Surface& s);

// Kernel of the swap character; Split when nobody swaps.
Etale2 triangle_field(const Dp6Surface& s);
Subgroup triangle_kernel(const Dp6Surface& s);

// Frame cocycles eta, xi over G_{M/L}; both land in the monomial subgroup H.
std::pair<Cocycle, Cocycle> blow_down_cocycles(const Dp6Surface& s);

// xi_sigma = transpose_inverse(eta_sigma) for every sigma, computed through
// both the operator and the Cremona-conjugation route.
bool verify_opposite(const Cocycle& eta, const Cocycle& xi);

// Factor swap composed with entry-wise sigma; the descent datum of the
// quadratic case. `corruption` (a matrix applied to the first output factor)
// exists only to build negative controls.
struct DescentMap {
  int sigma;
  std::optional<ProjMap> corruption;
};

DescentMap switch_descent_map(const Dp6Surface& s, int sigma);  // NotQuadratic if L split

// Exact check that the sigma-twist of f composed with f is the identity on S:
// on the coordinate maps and on `samples` random surface points.
bool descent_verify(const Dp6Surface& s, const DescentMap& f, int samples = 50,
                    uint64_t seed = 0x5eed);

// Random point of S off the exceptional fibers: (p, q) with q cut out by the
// two forms at p.
std::pair<ProjPoint, ProjPoint> surface_sample(const Dp6Surface& s, Rng& rng);

// The correspondence datum of the surface.
struct DataTriple {
  Etale2 etale;
  Cocycle cocycle;          // over G_{M/L}
  std::array<ProjPoint, 3> points;
  IndexAction point_action; // Galois-set structure of the points over G_{M/L}
};

DataTriple extract_data_triple(const Dp6Surface& s);

enum class CmpStatus { True, False, Indeterminate };

struct RoundtripReport {
  CmpStatus etale = CmpStatus::False;
  CmpStatus points = CmpStatus::False;
  CmpStatus cocycles = CmpStatus::False;
  std::string detail;
  std::optional<ProjMap> witness;
  CmpStatus overall() const {
    auto worst = [](CmpStatus a, CmpStatus b) {
      if (a == CmpStatus::False || b == CmpStatus::False) return CmpStatus::False;
      if (a == CmpStatus::Indeterminate || b == CmpStatus::Indeterminate)
        return CmpStatus::Indeterminate;
      return CmpStatus::True;
    };
    return worst(etale, worst(points, cocycles));
  }
};

// Equivalence of data triples: etale algebras agree, point schemes are
// isomorphic (Galois-set structure plus coordinate minimal polynomials), and
// the cocycles are related by a torus coboundary found constructively.
RoundtripReport roundtrip_compare(const DataTriple& input, const DataTriple& recovered,
                                  int solver_bound = 200);

}  // namespace dp6
