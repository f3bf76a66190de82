#include "dp6/poly.hpp"

#include <sstream>

namespace dp6 {

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& a) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= a;
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) fail(Err::Internal, "polynomial division by zero");
  std::vector<Rat> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {QPoly(), *this};
  std::vector<Rat> quo(degree() - dd + 1, Rat(0));
  for (int i = degree(); i >= dd; --i) {
    Rat f = rem[i] / d.lead();
    if (f == 0) continue;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

Rat QPoly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a * (Rat(1) / a.lead());
  return a;
}

std::tuple<QPoly, QPoly, QPoly> QPoly::xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1); r1 = std::move(r);
    QPoly s = s0 - q * s1; s0 = std::move(s1); s1 = std::move(s);
    QPoly t = t0 - q * t1; t0 = std::move(t1); t1 = std::move(t);
  }
  if (!r0.is_zero()) {
    Rat inv = Rat(1) / r0.lead();
    r0 = r0 * inv; s0 = s0 * inv; t0 = t0 * inv;
  }
  return {r0, s0, t0};
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    Rat abs = a < 0 ? Rat(-a) : a;
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    bool show_coeff = (abs != 1) || i == 0;
    if (show_coeff) out << rat_to_string(abs);
    if (i > 0) {
      if (show_coeff) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace dp6
