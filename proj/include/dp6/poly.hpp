#pragma once

#include <string>
#include <vector>

#include "dp6/rational.hpp"

namespace dp6 {

// Dense univariate polynomial over Q, coefficients constant-first.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rat& a) { return QPoly({a}); }
  static QPoly x() { return QPoly({Rat(0), Rat(1)}); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& a) const;
  QPoly operator-() const { return *this * Rat(-1); }

  // quotient and remainder; divisor must be nonzero
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly mod(const QPoly& d) const { return divmod(d).second; }

  Rat eval(const Rat& x) const;

  // monic gcd (zero polynomial for gcd(0,0))
  static QPoly gcd(QPoly a, QPoly b);

  // extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero)
  static std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace dp6
