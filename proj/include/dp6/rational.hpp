#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "dp6/errors.hpp"

namespace dp6 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Accepts "p", "-p", "p/q"; exact, no floating point.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(Err::ParseError, "zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    fail(Err::ParseError, "bad rational '" + s + "'");
  }
}

// Integer k-th root if exact.
inline std::optional<Int> int_kth_root(const Int& n, unsigned k) {
  if (k == 0) return std::nullopt;
  if (n == 0) return Int(0);
  bool neg = n < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  Int a = neg ? -n : n;
  // binary search
  Int lo = 0, hi = a + 1;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    Int p = 1;
    bool over = false;
    for (unsigned i = 0; i < k; ++i) {
      p *= mid;
      if (p > a) { over = true; break; }
    }
    if (!over && p == a) return neg ? Int(-mid) : mid;
    if (over || p > a) hi = mid; else lo = mid + 1;
  }
  return std::nullopt;
}

// Exact rational k-th root if one exists.
inline std::optional<Rat> rat_kth_root(const Rat& q, unsigned k) {
  auto num = int_kth_root(numerator(q), k);
  if (!num) return std::nullopt;
  auto den = int_kth_root(denominator(q), k);
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

inline bool rat_is_square(const Rat& q) {
  if (q < 0) return false;
  return rat_kth_root(q, 2).has_value();
}

// Squarefree part of a nonzero rational: d with q = d * (square), d a squarefree
// integer. Trial division; desk-scale inputs only. Returns nullopt past the cap.
inline std::optional<Int> squarefree_part(const Rat& q, const Int& cap = Int(100000000)) {
  if (q == 0) return std::nullopt;
  Int n = numerator(q) * denominator(q);  // same square class as q
  bool neg = n < 0;
  if (neg) n = -n;
  Int d = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (p > cap) return std::nullopt;
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    if (e % 2 == 1) d *= p;
  }
  d *= n;  // remaining prime
  return neg ? Int(-d) : d;
}

}  // namespace dp6
