#include <doctest.h>

#include "dp6/projlin.hpp"
#include "dp6/rng.hpp"
#include "test_fields.hpp"

using namespace dp6;
using namespace dp6::testing;

namespace {

ProjPoint pt(const FieldPtr& F, int x, int y, int z) {
  return ProjPoint::from_rationals(F, x, y, z);
}

ProjMap random_monomial(const FieldPtr& F, Rng& rng) {
  static const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  ProjMap d = ProjMap::diagonal(rng.field_elem_nonzero(F), rng.field_elem_nonzero(F),
                                rng.field_elem_nonzero(F));
  return d * ProjMap::permutation(F, perms[rng.below(6)]);
}

}  // namespace

TEST_CASE("projective equality ignores scaling") {
  FieldPtr F = rational_field();
  CHECK(pt(F, 2, 4, 6) == pt(F, 1, 2, 3));
  CHECK(pt(F, 0, 3, 9) == ProjPoint::from_rationals(F, Rat(0), Rat(1), Rat(3)));
}

TEST_CASE("collinear: the spec triples") {
  FieldPtr F = rational_field();
  CHECK(collinear(pt(F, 1, 0, 0), pt(F, 0, 1, 0), pt(F, 1, 1, 0)));
  CHECK(!collinear(pt(F, 1, 0, 0), pt(F, 0, 1, 0), pt(F, 0, 0, 1)));
}

TEST_CASE("collinear: Vandermonde points are never collinear") {
  FieldPtr F = rational_field();
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    Rat a = rng.small_rat(), b = rng.small_rat(), c = rng.small_rat();
    if (a == b || a == c || b == c) continue;
    auto v = vandermonde_points(F->from_rational(a), F->from_rational(b), F->from_rational(c));
    // oracle: the Vandermonde determinant (b-a)(c-a)(c-b)
    Rat det = (b - a) * (c - a) * (c - b);
    CHECK(det != 0);
    CHECK(!collinear(v[0], v[1], v[2]));
  }
  CHECK_THROWS_AS(vandermonde_points(F->from_rational(0), F->from_rational(1),
                                     F->from_rational(1)),
                  Error);
}

TEST_CASE("vandermonde points of the cyclic cubic form a Galois-stable 3-cycle") {
  FieldPtr C = cyclic_cubic();
  FieldElem a1 = C->gen();
  FieldElem a2 = C->apply(1, a1);
  FieldElem a3 = C->apply(2, a1);
  auto v = vandermonde_points(a1, a2, a3);
  CHECK(!collinear(v[0], v[1], v[2]));
  CHECK(apply_auto(1, v[0]) == v[1]);
  CHECK(apply_auto(1, v[1]) == v[2]);
  CHECK(apply_auto(1, v[2]) == v[0]);
}

TEST_CASE("frame_map: fixed points and the diagonal case") {
  FieldPtr F = rational_field();
  ProjPoint e1 = pt(F, 1, 0, 0), e2 = pt(F, 0, 1, 0), e3 = pt(F, 0, 0, 1), u = pt(F, 1, 1, 1);
  CHECK(frame_map(e1, e2, e3, u) == ProjMap::identity(F));
  ProjPoint p4 = pt(F, 2, 3, 5);
  ProjMap m = frame_map(e1, e2, e3, p4);
  CHECK(m == ProjMap::diagonal(F->from_rational(Rat(1, 2)), F->from_rational(Rat(1, 3)),
                               F->from_rational(Rat(1, 5))));
}

TEST_CASE("frame_map: self-checking oracle on random frames") {
  FieldPtr F = quad_m3();
  Rng rng(17);
  int done = 0;
  while (done < 20) {
    std::array<ProjPoint, 4> p;
    try {
      for (auto& x : p)
        x = ProjPoint(rng.field_elem(F), rng.field_elem(F), rng.field_elem(F));
      ProjMap m = frame_map(p[0], p[1], p[2], p[3]);
      CHECK(m(p[0]) == pt(F, 1, 0, 0));
      CHECK(m(p[1]) == pt(F, 0, 1, 0));
      CHECK(m(p[2]) == pt(F, 0, 0, 1));
      CHECK(m(p[3]) == pt(F, 1, 1, 1));
      ++done;
    } catch (const Error&) {
      continue;  // degenerate draw
    }
  }
}

TEST_CASE("frame_map rejects collinear triples") {
  FieldPtr F = rational_field();
  CHECK_THROWS_AS(frame_map(pt(F, 1, 0, 0), pt(F, 0, 1, 0), pt(F, 1, 1, 0), pt(F, 0, 0, 1)),
                  Error);
}

TEST_CASE("frame_map is independent of representative scaling") {
  FieldPtr F = rational_field();
  ProjPoint a = pt(F, 2, 3, 5), b = pt(F, 1, -1, 2), c = pt(F, 0, 1, 7), d = pt(F, 3, 1, 1);
  ProjPoint a2 = ProjPoint(a[0] * Rat(4), a[1] * Rat(4), a[2] * Rat(4));
  CHECK(frame_map(a, b, c, d) == frame_map(a2, b, c, d));
}

TEST_CASE("cremona: fixed point, formula, base points, involution") {
  FieldPtr F = rational_field();
  CHECK(cremona(pt(F, 1, 1, 1)) == pt(F, 1, 1, 1));
  CHECK(cremona(pt(F, 1, 2, 3)) == pt(F, 6, 3, 2));
  CHECK_THROWS_AS(cremona(pt(F, 1, 0, 0)), Error);
  // one zero coordinate is allowed and lands on a coordinate point
  CHECK(cremona(pt(F, 0, 1, 2)) == pt(F, 1, 0, 0));

  for (FieldPtr K : {rational_field(), quad_m3()}) {
    Rng rng(23);
    int done = 0;
    while (done < 100) {
      FieldElem x = rng.field_elem_nonzero(K), y = rng.field_elem_nonzero(K),
                z = rng.field_elem_nonzero(K);
      ProjPoint p(x, y, z);
      CHECK(cremona(cremona(p)) == p);
      ++done;
    }
  }
}

TEST_CASE("cremona commutes with the Galois action") {
  FieldPtr F = quad_m3();
  Rng rng(29);
  for (int k = 0; k < 50; ++k) {
    ProjPoint p(rng.field_elem_nonzero(F), rng.field_elem_nonzero(F),
                rng.field_elem_nonzero(F));
    CHECK(apply_auto(1, cremona(p)) == cremona(apply_auto(1, p)));
  }
}

TEST_CASE("monomial_decompose: diagonal, permutation, mixed") {
  FieldPtr F = rational_field();
  ProjMap d = ProjMap::diagonal(F->from_rational(2), F->from_rational(3), F->from_rational(5));
  auto dd = monomial_decompose(d);
  CHECK(dd.diagonal_part == d);
  CHECK(dd.permutation_part == ProjMap::identity(F));

  ProjMap cyc = ProjMap::permutation(F, {1, 2, 0});
  auto dc = monomial_decompose(cyc);
  CHECK(dc.diagonal_part == ProjMap::identity(F));
  CHECK(dc.permutation_part == cyc);

  // rows (0,a,0),(0,0,b),(c,0,0)
  ProjMap m = ProjMap::from_rational_rows(
      F, {{{Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(3)}, {Rat(5), Rat(0), Rat(0)}}});
  auto dm = monomial_decompose(m);
  CHECK(dm.diagonal_part ==
        ProjMap::diagonal(F->from_rational(2), F->from_rational(3), F->from_rational(5)));
  CHECK(dm.permutation_part == ProjMap::permutation(F, {1, 2, 0}));
  CHECK(dm.diagonal_part * dm.permutation_part == m);

  ProjMap not_mono = ProjMap::from_rational_rows(
      F, {{{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}});
  CHECK_THROWS_AS(monomial_decompose(not_mono), Error);
}

TEST_CASE("transpose_inverse: identity, diagonal scalar freedom") {
  FieldPtr F = rational_field();
  CHECK(transpose_inverse(ProjMap::identity(F)) == ProjMap::identity(F));
  ProjMap d = ProjMap::diagonal(F->from_rational(2), F->from_rational(3), F->from_rational(5));
  // diag(a,b,c)^{-t} = diag(bc, ac, ab) in PGL_3
  CHECK(transpose_inverse(d) == ProjMap::diagonal(F->from_rational(15), F->from_rational(10),
                                                  F->from_rational(6)));
}

TEST_CASE("cremona_conjugate equals transpose_inverse on H; both multiplicative") {
  FieldPtr F = quad_m3();
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    ProjMap a = random_monomial(F, rng);
    ProjMap b = random_monomial(F, rng);
    CHECK(cremona_conjugate(a) == transpose_inverse(a));
    CHECK(transpose_inverse(a * b) == transpose_inverse(a) * transpose_inverse(b));
  }
  // permutation matrices are fixed
  for (const auto& p :
       {std::array<int, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}}) {
    ProjMap m = ProjMap::permutation(F, p);
    CHECK(cremona_conjugate(m) == m);
  }
}

TEST_CASE("transpose_inverse is an involution on PGL_3") {
  FieldPtr F = quad_m3();
  Rng rng(37);
  int done = 0;
  while (done < 20) {
    try {
      std::array<std::array<FieldElem, 3>, 3> m;
      for (auto& row : m) row = {rng.field_elem(F), rng.field_elem(F), rng.field_elem(F)};
      ProjMap a(m);
      CHECK(transpose_inverse(transpose_inverse(a)) == a);
      ++done;
    } catch (const Error&) {
      continue;
    }
  }
}
