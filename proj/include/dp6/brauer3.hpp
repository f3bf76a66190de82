#pragma once

#include <array>
#include <vector>

#include "dp6/numfield.hpp"

namespace dp6 {

// Abstract model of (Br L)[3]: a finite exponent-3 group (Z/3)^n with an
// involution. All arithmetic is mod 3.
class Brauer3Group {
 public:
  // involution: n x n matrix over Z/3 with square = identity
  static Brauer3Group make(int rank, std::vector<std::vector<int>> involution);
  static Brauer3Group identity_involution(int rank);
  static Brauer3Group negation(int rank);
  static Brauer3Group coordinate_swap(int rank);  // swaps the first two coordinates

  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& involution() const { return inv_; }
  std::vector<int> apply(const std::vector<int>& x) const;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> inv_;
};

// x = x_plus + x_minus with x_plus = 2(x + sx), x_minus = 2(x - sx);
// s x_plus = x_plus and s x_minus = -x_minus.
std::pair<std::vector<int>, std::vector<int>> decompose3(const std::vector<int>& x,
                                                         const Brauer3Group& g);

// basis of W = { y : s y = -y }, by exact kernel computation of (s + id) mod 3
std::vector<std::vector<int>> w_subgroup(const Brauer3Group& g);
// basis of the fixed part { y : s y = y }
std::vector<std::vector<int>> fixed_subgroup(const Brauer3Group& g);

// fixed + W is an internal direct sum of the whole group
bool direct_sum_check(const Brauer3Group& g);

// Standard presentation of a 3-torsion class: a cyclic cubic extension
// descriptor plus a nonzero base-field element.
struct CyclicAlgebraDatum {
  FieldPtr extension;  // degree-3 field with its Galois group
  int generator;       // designated order-3 automorphism
  Rat a;               // nonzero element of the base field

  static CyclicAlgebraDatum make(FieldPtr extension, int generator, Rat a);
  bool operator==(const CyclicAlgebraDatum& o) const {
    return extension == o.extension && generator == o.generator && a == o.a;
  }
};

// class inverse: a -> 1/a; an involution on data
CyclicAlgebraDatum opposite(const CyclicAlgebraDatum& c);

// the L = k x k object: the pair (x, x^op), swapped by the factor involution
std::pair<CyclicAlgebraDatum, CyclicAlgebraDatum> split_pair(const CyclicAlgebraDatum& c);

}  // namespace dp6
