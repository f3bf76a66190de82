#pragma once

#include <array>
#include <optional>

#include "dp6/numfield.hpp"

namespace dp6 {

// Point of P^2(M). Canonical form: first nonzero coordinate scaled to 1, so
// equality is plain data comparison. Also used for line covectors, which
// canonicalize the same way.
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(FieldElem x, FieldElem y, FieldElem z);
  static ProjPoint from_rationals(const FieldPtr& F, const Rat& x, const Rat& y, const Rat& z);

  const FieldElem& operator[](int i) const { return c_[i]; }
  const std::array<FieldElem, 3>& coords() const { return c_; }
  const FieldPtr& field() const { return c_[0].field(); }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;

 private:
  std::array<FieldElem, 3> c_;
};

// Element of PGL_3(M): 3x3 matrix with nonzero determinant, canonical form
// scales the first nonzero entry in row-major order to 1.
class ProjMap {
 public:
  ProjMap() = default;
  explicit ProjMap(std::array<std::array<FieldElem, 3>, 3> m);
  static ProjMap identity(const FieldPtr& F);
  static ProjMap diagonal(const FieldElem& a, const FieldElem& b, const FieldElem& c);
  static ProjMap permutation(const FieldPtr& F, const std::array<int, 3>& p);
  static ProjMap from_rational_rows(const FieldPtr& F,
                                    const std::array<std::array<Rat, 3>, 3>& rows);

  const FieldElem& at(int r, int c) const { return m_[r][c]; }
  const FieldPtr& field() const { return m_[0][0].field(); }

  ProjMap operator*(const ProjMap& o) const;
  ProjPoint operator()(const ProjPoint& p) const;
  ProjMap inverse() const;    // adjugate, as a PGL class
  ProjMap transpose() const;
  FieldElem det() const;

  bool operator==(const ProjMap& o) const { return m_ == o.m_; }
  bool operator!=(const ProjMap& o) const { return !(*this == o); }
  std::string str() const;

 private:
  std::array<std::array<FieldElem, 3>, 3> m_;
};

// entry-wise Galois action; commutes with canonical forms
ProjPoint apply_auto(int sigma, const ProjPoint& p);
ProjMap apply_auto(int sigma, const ProjMap& a);

// true iff det of the coordinate matrix vanishes
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// The unique map sending p1..p4 (no three collinear) to the standard frame
// (1:0:0),(0:1:0),(0:0:1),(1:1:1).
ProjMap frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                  const ProjPoint& p4);

// b(x:y:z) = (yz:xz:xy); Indeterminate on the three coordinate points
ProjPoint cremona(const ProjPoint& p);

struct MonomialDecomp {
  ProjMap diagonal_part;
  ProjMap permutation_part;
  std::array<int, 3> perm;  // row i has its nonzero entry in column perm[i]
};

bool is_monomial(const ProjMap& a);
MonomialDecomp monomial_decompose(const ProjMap& a);  // NotMonomial if a outside H

ProjMap transpose_inverse(const ProjMap& a);

// For monomial a = A_D A_P, returns A_D^{-1} A_P, the conjugate of a by the
// Cremona involution; equals transpose_inverse(a) in PGL_3.
ProjMap cremona_conjugate(const ProjMap& a);

std::array<ProjPoint, 3> vandermonde_points(const FieldElem& a1, const FieldElem& a2,
                                            const FieldElem& a3);

// line through two distinct points, as a canonical covector
ProjPoint line_through(const ProjPoint& p, const ProjPoint& q);

FieldElem eval_covector(const ProjPoint& cov, const ProjPoint& p);

}  // namespace dp6
