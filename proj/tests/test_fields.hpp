#pragma once

#include "dp6/numfield.hpp"

namespace dp6::testing {

// Q as a degree-1 quotient
inline FieldPtr rational_field() {
  return NumberField::make(QPoly({Rat(0), Rat(1)}), {QPoly()});
}

// Q(sqrt(-3)) = Q[t]/(t^2+3), conjugation t -> -t
inline FieldPtr quad_m3() {
  return NumberField::make(QPoly({Rat(3), Rat(0), Rat(1)}),
                           {QPoly({Rat(0), Rat(1)}), QPoly({Rat(0), Rat(-1)})});
}

// Q(i) = Q[t]/(t^2+1)
inline FieldPtr gauss() {
  return NumberField::make(QPoly({Rat(1), Rat(0), Rat(1)}),
                           {QPoly({Rat(0), Rat(1)}), QPoly({Rat(0), Rat(-1)})});
}

// cyclic cubic Q[t]/(t^3 - 3t - 1); generator sigma: t -> 2 - t^2
inline FieldPtr cyclic_cubic() {
  return NumberField::make(
      QPoly({Rat(-1), Rat(-3), Rat(0), Rat(1)}),
      {QPoly({Rat(0), Rat(1)}), QPoly({Rat(2), Rat(0), Rat(-1)}),
       QPoly({Rat(-2), Rat(-1), Rat(1)})});
}

// degree-6 field with S3 group: splitting field of t^3 - 2,
// f = t^6 + 3 t^5 + 6 t^4 + 3 t^3 + 9 t + 9
inline FieldPtr sextic_s3() {
  QPoly f({Rat(9), Rat(9), Rat(0), Rat(3), Rat(6), Rat(3), Rat(1)});
  auto P = [](std::vector<Rat> v) { return QPoly(std::move(v)); };
  std::vector<QPoly> imgs{
      P({Rat(0), Rat(1)}),
      P({Rat(3), Rat(1), Rat(-4, 3), Rat(4, 3), Rat(2, 3), Rat(4, 9)}),
      P({Rat(-1), Rat(0), Rat(4, 3), Rat(0), Rat(0), Rat(-1, 9)}),
      P({Rat(2), Rat(0), Rat(0), Rat(4, 3), Rat(2, 3), Rat(1, 3)}),
      P({Rat(-5), Rat(-1), Rat(2, 3), Rat(-2), Rat(-1), Rat(-5, 9)}),
      P({Rat(-2), Rat(-1), Rat(-2, 3), Rat(-2, 3), Rat(-1, 3), Rat(-1, 9)})};
  return NumberField::make(f, imgs);
}

}  // namespace dp6::testing
