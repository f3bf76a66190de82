#pragma once

#include <array>
#include <memory>
#include <vector>

#include "dp6/poly.hpp"

namespace dp6 {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of M = Q[t]/(f), stored reduced mod f, coefficients constant-first.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<Rat> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  bool is_zero() const;
  bool is_rational() const;  // lies in the prime field
  Rat rational_value() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator*(const Rat& a) const;
  FieldElem operator/(const FieldElem& o) const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  QPoly as_poly() const { return QPoly(c_); }
  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<Rat> c_;
};

// A number field M = Q[t]/(f) given with its full automorphism list, which is
// verified at construction to be a group of order deg(f) acting by ring
// homomorphisms. The base field of every scenario is Q, the fixed field of the
// whole group.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Validates: f monic with integer coefficients, 1 <= deg <= 12; every image g
  // satisfies f(g) = 0 mod f; the images are pairwise distinct, closed under
  // composition with identity and inverses; composition is associative.
  static FieldPtr make(const QPoly& modulus, const std::vector<QPoly>& automorphism_images);

  int degree() const { return degree_; }
  int group_order() const { return degree_; }
  const QPoly& modulus() const { return modulus_; }
  const std::vector<QPoly>& images() const { return images_; }
  int identity_index() const { return id_index_; }
  int compose(int i, int j) const { return comp_[i][j]; }  // sigma_i after sigma_j
  int inverse(int i) const { return inv_[i]; }

  FieldElem elem(std::vector<Rat> coeffs) const;
  FieldElem from_rational(const Rat& a) const;
  FieldElem zero() const { return from_rational(0); }
  FieldElem one() const { return from_rational(1); }
  FieldElem gen() const;  // the class of t

  // sigma_i applied to x (entry precomputed as a linear map over Q)
  FieldElem apply(int i, const FieldElem& x) const;

  // x^{-1}; ZeroDivisor if gcd(x, f) is a nonunit of positive degree, which
  // signals a reducible modulus (irreducibility is never pre-verified).
  FieldElem inv(const FieldElem& x) const;

  // minimal polynomial of x over Q (monic)
  QPoly minimal_polynomial(const FieldElem& x) const;

 private:
  NumberField() = default;
  QPoly modulus_;
  std::vector<QPoly> images_;
  int degree_ = 0;
  int id_index_ = -1;
  std::vector<std::vector<int>> comp_;
  std::vector<int> inv_;
  // auto_mat_[i][k] = coefficients of sigma_i(t^k) reduced mod f
  std::vector<std::vector<std::vector<Rat>>> auto_mat_;
};

// Subgroup of the automorphism group, by index list. Verified closed with
// identity and inverses.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup make(FieldPtr field, std::vector<int> indices);
  static Subgroup whole(FieldPtr field);
  static Subgroup trivial(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<int>& indices() const { return idx_; }
  size_t order() const { return idx_.size(); }
  int index_in_group() const;
  bool contains(int i) const;
  // smallest automorphism index generating the whole subgroup, or -1 if not cyclic
  int cyclic_generator() const;

  bool operator==(const Subgroup& o) const { return field_ == o.field_ && idx_ == o.idx_; }

 private:
  FieldPtr field_;
  std::vector<int> idx_;
};

// Degree-2 etale algebra over Q: either split (Q x Q) or a quadratic subfield
// of M given by a primitive element and its minimal polynomial.
struct Etale2 {
  enum class Kind { Split, Quadratic };
  Kind kind = Kind::Split;
  FieldElem primitive;  // only for Quadratic
  QPoly minpoly;        // degree 2, monic, only for Quadratic

  static Etale2 split() { return {}; }
  static Etale2 quadratic(FieldElem prim, QPoly mp);
  bool is_split() const { return kind == Kind::Split; }
};

// Same quadratic field test: discriminants differ by a rational square.
bool same_quadratic_field(const QPoly& minpoly_a, const QPoly& minpoly_b);
// x^2 - d with d the squarefree discriminant part (falls back to the monic
// completed-square form if the discriminant resists factoring).
QPoly quadratic_normal_form(const QPoly& minpoly);

// Fixed subfield of H acting on F. Index 1 -> Split; index 2 -> Quadratic with
// primitive element found by a bounded deterministic sweep over H-orbit sums of
// monomials t^k and their small sums.
Etale2 fixed_subfield(const FieldPtr& field, const Subgroup& subgroup);

// Permutation action of a subgroup on a 3-element index set; verified to be a
// homomorphism with identity.
class IndexAction {
 public:
  IndexAction() = default;
  static IndexAction make(Subgroup group, std::vector<std::array<int, 3>> perms);
  static IndexAction trivial(Subgroup group);

  const Subgroup& group() const { return group_; }
  const std::array<int, 3>& perm(int sigma) const;
  std::array<int, 3> inverse_perm(int sigma) const;

 private:
  Subgroup group_;
  std::vector<std::array<int, 3>> perms_;  // aligned with group_.indices()
};

// Element of M tensor_L E under the splitting into M x M x M; components are
// permuted by the index action and entries moved by the field automorphism.
struct EtaleTriple {
  std::array<FieldElem, 3> v;

  static EtaleTriple ones(const FieldPtr& field);
  bool is_invertible() const;
  EtaleTriple mul(const EtaleTriple& o) const;
  EtaleTriple inv() const;  // NotInvertible if a component vanishes
  bool operator==(const EtaleTriple& o) const { return v == o.v; }
  std::string str() const;
};

// (sigma . e)_i = sigma(e_{pi(sigma)^{-1}(i)})
EtaleTriple etale_galois(const IndexAction& action, int sigma, const EtaleTriple& e);

}  // namespace dp6
