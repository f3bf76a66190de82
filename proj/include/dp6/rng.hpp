#pragma once

#include <cstdint>

#include "dp6/numfield.hpp"

namespace dp6 {

// Deterministic generator for the sampled checks (fixed seeds in fixtures, so
// runs are reproducible). splitmix64 core, small-height rational outputs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }

  Rat small_rat() {
    int64_t num = static_cast<int64_t>(below(19)) - 9;  // -9..9
    int64_t den = static_cast<int64_t>(below(3)) + 1;   // 1..3
    return Rat(num, den);
  }

  Rat small_rat_nonzero() {
    Rat r = small_rat();
    while (r == 0) r = small_rat();
    return r;
  }

  FieldElem field_elem(const FieldPtr& f) {
    std::vector<Rat> c(f->degree());
    for (auto& x : c) x = small_rat();
    return f->elem(std::move(c));
  }

  FieldElem field_elem_nonzero(const FieldPtr& f) {
    FieldElem e = field_elem(f);
    while (e.is_zero()) e = field_elem(f);
    return e;
  }

 private:
  uint64_t state_;
};

}  // namespace dp6
