#include "dp6/projlin.hpp"

#include <sstream>

namespace dp6 {

ProjPoint::ProjPoint(FieldElem x, FieldElem y, FieldElem z) : c_{std::move(x), std::move(y), std::move(z)} {
  int first = -1;
  for (int i = 0; i < 3; ++i)
    if (!c_[i].is_zero()) { first = i; break; }
  if (first < 0) fail(Err::DegenerateInput, "projective point with all coordinates zero");
  const FieldPtr& F = c_[0].field();
  FieldElem inv = F->inv(c_[first]);
  for (int i = 0; i < 3; ++i) c_[i] = c_[i] * inv;
}

ProjPoint ProjPoint::from_rationals(const FieldPtr& F, const Rat& x, const Rat& y, const Rat& z) {
  return ProjPoint(F->from_rational(x), F->from_rational(y), F->from_rational(z));
}

std::string ProjPoint::str() const {
  return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

ProjMap::ProjMap(std::array<std::array<FieldElem, 3>, 3> m) : m_(std::move(m)) {
  const FieldElem* first = nullptr;
  for (int r = 0; r < 3 && !first; ++r)
    for (int c = 0; c < 3 && !first; ++c)
      if (!m_[r][c].is_zero()) first = &m_[r][c];
  if (!first) fail(Err::DegenerateInput, "zero matrix");
  FieldElem inv = m_[0][0].field()->inv(*first);
  for (auto& row : m_)
    for (auto& e : row) e = e * inv;
  if (det().is_zero()) fail(Err::DegenerateInput, "singular matrix is not in PGL_3");
}

ProjMap ProjMap::identity(const FieldPtr& F) {
  return diagonal(F->one(), F->one(), F->one());
}

ProjMap ProjMap::diagonal(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  const FieldPtr& F = a.field();
  std::array<std::array<FieldElem, 3>, 3> m;
  for (auto& row : m) row = {F->zero(), F->zero(), F->zero()};
  m[0][0] = a; m[1][1] = b; m[2][2] = c;
  return ProjMap(std::move(m));
}

ProjMap ProjMap::permutation(const FieldPtr& F, const std::array<int, 3>& p) {
  std::array<std::array<FieldElem, 3>, 3> m;
  for (auto& row : m) row = {F->zero(), F->zero(), F->zero()};
  for (int i = 0; i < 3; ++i) m[i][p[i]] = F->one();
  return ProjMap(std::move(m));
}

ProjMap ProjMap::from_rational_rows(const FieldPtr& F,
                                    const std::array<std::array<Rat, 3>, 3>& rows) {
  std::array<std::array<FieldElem, 3>, 3> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = F->from_rational(rows[r][c]);
  return ProjMap(std::move(m));
}

ProjMap ProjMap::operator*(const ProjMap& o) const {
  const FieldPtr& F = field();
  std::array<std::array<FieldElem, 3>, 3> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      FieldElem s = F->zero();
      for (int k = 0; k < 3; ++k) s = s + m_[r][k] * o.m_[k][c];
      m[r][c] = s;
    }
  return ProjMap(std::move(m));
}

ProjPoint ProjMap::operator()(const ProjPoint& p) const {
  const FieldPtr& F = field();
  std::array<FieldElem, 3> out;
  for (int r = 0; r < 3; ++r) {
    FieldElem s = F->zero();
    for (int c = 0; c < 3; ++c) s = s + m_[r][c] * p[c];
    out[r] = s;
  }
  return ProjPoint(out[0], out[1], out[2]);
}

FieldElem ProjMap::det() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
         m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

ProjMap ProjMap::inverse() const {
  // adjugate: A * adj(A) = det(A) * I, so adj(A) represents A^{-1} in PGL_3
  std::array<std::array<FieldElem, 3>, 3> a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      int r1 = (c + 1) % 3, r2 = (c + 2) % 3;  // transposed cofactor
      int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      a[r][c] = m_[r1][c1] * m_[r2][c2] - m_[r1][c2] * m_[r2][c1];
    }
  return ProjMap(std::move(a));
}

ProjMap ProjMap::transpose() const {
  std::array<std::array<FieldElem, 3>, 3> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = m_[c][r];
  return ProjMap(std::move(m));
}

std::string ProjMap::str() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < 3; ++r) {
    out << "[" << m_[r][0].str() << ", " << m_[r][1].str() << ", " << m_[r][2].str() << "]";
    if (r < 2) out << ", ";
  }
  out << "]";
  return out.str();
}

ProjPoint apply_auto(int sigma, const ProjPoint& p) {
  const FieldPtr& F = p.field();
  return ProjPoint(F->apply(sigma, p[0]), F->apply(sigma, p[1]), F->apply(sigma, p[2]));
}

ProjMap apply_auto(int sigma, const ProjMap& a) {
  const FieldPtr& F = a.field();
  std::array<std::array<FieldElem, 3>, 3> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = F->apply(sigma, a.at(r, c));
  return ProjMap(std::move(m));
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  FieldElem d = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                p[2] * (q[0] * r[1] - q[1] * r[0]);
  return d.is_zero();
}

ProjMap frame_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                  const ProjPoint& p4) {
  const std::array<const ProjPoint*, 4> pts{&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (collinear(*pts[i], *pts[j], *pts[k]))
          fail(Err::DegenerateFrame, "three of the four frame points are collinear");

  const FieldPtr& F = p1.field();
  // columns of B are the canonical representatives of p1..p3
  std::array<std::array<FieldElem, 3>, 3> b;
  for (int r = 0; r < 3; ++r) b[r] = {p1[r], p2[r], p3[r]};
  ProjMap B(b);
  // lambda = B^{-1} p4 (inverse() is the adjugate; scaling is irrelevant here)
  ProjPoint lambda = B.inverse()(p4);
  ProjMap M = B * ProjMap::diagonal(lambda[0], lambda[1], lambda[2]);
  return M.inverse();
}

ProjPoint cremona(const ProjPoint& p) {
  int zeros = 0;
  for (int i = 0; i < 3; ++i)
    if (p[i].is_zero()) ++zeros;
  if (zeros >= 2)
    fail(Err::Indeterminate, "Cremona involution is undefined at the coordinate point " + p.str());
  return ProjPoint(p[1] * p[2], p[0] * p[2], p[0] * p[1]);
}

bool is_monomial(const ProjMap& a) {
  for (int r = 0; r < 3; ++r) {
    int cnt = 0;
    for (int c = 0; c < 3; ++c)
      if (!a.at(r, c).is_zero()) ++cnt;
    if (cnt != 1) return false;
  }
  for (int c = 0; c < 3; ++c) {
    int cnt = 0;
    for (int r = 0; r < 3; ++r)
      if (!a.at(r, c).is_zero()) ++cnt;
    if (cnt != 1) return false;
  }
  return true;
}

MonomialDecomp monomial_decompose(const ProjMap& a) {
  if (!is_monomial(a)) fail(Err::NotMonomial, "matrix is not in the monomial subgroup H");
  const FieldPtr& F = a.field();
  std::array<int, 3> perm{};
  std::array<FieldElem, 3> d;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!a.at(r, c).is_zero()) {
        perm[r] = c;
        d[r] = a.at(r, c);
      }
  MonomialDecomp out;
  out.perm = perm;
  out.diagonal_part = ProjMap::diagonal(d[0], d[1], d[2]);
  out.permutation_part = ProjMap::permutation(F, perm);
  return out;
}

ProjMap transpose_inverse(const ProjMap& a) { return a.inverse().transpose(); }

ProjMap cremona_conjugate(const ProjMap& a) {
  MonomialDecomp d = monomial_decompose(a);
  return d.diagonal_part.inverse() * d.permutation_part;
}

std::array<ProjPoint, 3> vandermonde_points(const FieldElem& a1, const FieldElem& a2,
                                            const FieldElem& a3) {
  if (a1 == a2 || a1 == a3 || a2 == a3)
    fail(Err::DuplicateAlpha, "Vandermonde parameters must be pairwise distinct");
  const FieldPtr& F = a1.field();
  auto mk = [&](const FieldElem& a) { return ProjPoint(F->one(), a, a * a); };
  return {mk(a1), mk(a2), mk(a3)};
}

ProjPoint line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) fail(Err::DegenerateInput, "line through coincident points");
  return ProjPoint(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                   p[0] * q[1] - p[1] * q[0]);
}

FieldElem eval_covector(const ProjPoint& cov, const ProjPoint& p) {
  return cov[0] * p[0] + cov[1] * p[1] + cov[2] * p[2];
}

}  // namespace dp6
