#pragma once

#include <array>

#include "common/intmod.hpp"

namespace qclab {

// Row-major 2x2 integer matrix; row vectors act on the right (n -> n*M).
struct Mat2 {
  i64 a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

  static Mat2 identity() { return {1, 0, 0, 1}; }

  i64 det() const { return a * d - b * c; }
  i64 trace() const { return a + d; }

  Mat2 mul_mod(const Mat2& o, i64 m) const {
    return {mod(mulmod(a, o.a, m) + mulmod(b, o.c, m), m),
            mod(mulmod(a, o.b, m) + mulmod(b, o.d, m), m),
            mod(mulmod(c, o.a, m) + mulmod(d, o.c, m), m),
            mod(mulmod(c, o.b, m) + mulmod(d, o.d, m), m)};
  }

  Mat2 reduced(i64 m) const { return {mod(a, m), mod(b, m), mod(c, m), mod(d, m)}; }

  Mat2 pow_mod(i64 e, i64 m) const {
    Mat2 r = identity();
    Mat2 base = reduced(m);
    while (e > 0) {
      if (e & 1) r = r.mul_mod(base, m);
      base = base.mul_mod(base, m);
      e >>= 1;
    }
    return r;
  }

  // Inverse mod m; requires det invertible.
  Mat2 inv_mod(i64 m) const {
    i64 idet = invmod(det() % m, m);
    return {mod(mulmod(d, idet, m), m), mod(mulmod(-b, idet, m), m),
            mod(mulmod(-c, idet, m), m), mod(mulmod(a, idet, m), m)};
  }

  bool operator==(const Mat2&) const = default;
};

// Row vector * matrix, mod m.
inline std::array<i64, 2> vec_mul_mod(std::array<i64, 2> n, const Mat2& M, i64 m) {
  return {mod(mulmod(n[0], M.a, m) + mulmod(n[1], M.c, m), m),
          mod(mulmod(n[0], M.b, m) + mulmod(n[1], M.d, m), m)};
}

// Standard symplectic form omega(x, y) = x1*y2 - x2*y1.
inline i64 symplectic(std::array<i64, 2> x, std::array<i64, 2> y) {
  return x[0] * y[1] - x[1] * y[0];
}

inline i64 symplectic_mod(std::array<i64, 2> x, std::array<i64, 2> y, i64 m) {
  return mod(mulmod(x[0], y[1], m) - mulmod(x[1], y[0], m), m);
}

}  // namespace qclab
