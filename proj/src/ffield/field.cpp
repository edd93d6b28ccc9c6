#include "ffield/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qclab::ff {

cplx UnitPhase::value() const {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(mod(num, den)) /
                   static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

i64 find_primitive_root(i64 p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("find_primitive_root: p must be an odd prime");
  auto fac = factorize(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("find_primitive_root: none found");
}

FieldCtx::FieldCtx(i64 p) : p_(p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("FieldCtx: p must be an odd prime");
  if (p > 1000000) throw std::invalid_argument("FieldCtx: p above the 10^6 desk-scale cap");
  g_ = find_primitive_root(p);
  dlog_.assign(static_cast<size_t>(p), 0);
  i64 x = 1;
  for (i64 k = 0; k < p - 1; ++k) {
    dlog_[static_cast<size_t>(x)] = static_cast<int32_t>(k);
    x = mulmod(x, g_, p);
  }
  d_ = 0;
  for (i64 c = 2; c < p; ++c) {
    if (jacobi(c, p) == -1) {
      d_ = c;
      break;
    }
  }
}

Fp2 fp2_mul(const FieldCtx& F, Fp2 x, Fp2 y) {
  const i64 p = F.p(), d = F.ext_nonresidue();
  return {mod(mulmod(x.u, y.u, p) + mulmod(mulmod(x.v, y.v, p), d, p), p),
          mod(mulmod(x.u, y.v, p) + mulmod(x.v, y.u, p), p)};
}

Fp2 fp2_inv(const FieldCtx& F, Fp2 x) {
  const i64 p = F.p(), d = F.ext_nonresidue();
  i64 nrm = mod(mulmod(x.u, x.u, p) - mulmod(mulmod(x.v, x.v, p), d, p), p);
  i64 ni = invmod(nrm, p);
  return {mulmod(x.u, ni, p), mulmod(mod(-x.v, p), ni, p)};
}

Fp2 fp2_pow(const FieldCtx& F, Fp2 x, i64 e) {
  Fp2 r{1, 0};
  while (e > 0) {
    if (e & 1) r = fp2_mul(F, r, x);
    x = fp2_mul(F, x, x);
    e >>= 1;
  }
  return r;
}

std::pair<i64, i64> ext_norm_trace(const FieldCtx& F, Fp2 x) {
  const i64 p = F.p(), d = F.ext_nonresidue();
  i64 nrm = mod(mulmod(x.u, x.u, p) - mulmod(mulmod(x.v, x.v, p), d, p), p);
  i64 tr = mod(2 * x.u, p);
  return {nrm, tr};
}

Fp2 fp2_least_generator(const FieldCtx& F) {
  const i64 p = F.p();
  const i64 n = p * p - 1;
  auto fac = factorize(n);
  for (i64 u = 0; u < p; ++u) {
    for (i64 v = 0; v < p; ++v) {
      if (u == 0 && v == 0) continue;
      Fp2 x{u, v};
      bool ok = true;
      for (auto [q, e] : fac) {
        Fp2 y = fp2_pow(F, x, n / q);
        if (y == Fp2{1, 0}) {
          ok = false;
          break;
        }
      }
      if (ok) return x;
    }
  }
  throw std::logic_error("fp2_least_generator: none found");
}

i64 fp2_element_order(const FieldCtx& F, Fp2 x) {
  const i64 n = F.p() * F.p() - 1;
  i64 ord = n;
  for (auto [q, e] : factorize(n)) {
    for (int i = 0; i < e; ++i) {
      if (fp2_pow(F, x, ord / q) == Fp2{1, 0})
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

UnitPhase MultChar::phase(i64 x) const {
  const i64 p = F->p();
  x = mod(x, p);
  if (x == 0) throw std::domain_error("MultChar: evaluated at 0");
  return {mod(mulmod(mod(j, p - 1), F->dlog(x), p - 1), p - 1), p - 1};
}

UnitPhase AddChar::phase_ext(Fp2 x) const {
  const i64 p = F->p();
  // tr(a*x) for base-field a is a * 2u.
  i64 t = mod(mulmod(mod(a, p), mod(2 * x.u, p), p), p);
  return {t, p};
}

SplitType split_type(const Mat2& A, i64 N) {
  i64 t = A.trace();
  i64 disc = mod(t * t - 4, N);
  if (disc == 0) throw std::domain_error("split_type: ramified prime (N divides disc)");
  return jacobi(disc, N) == 1 ? SplitType::Split : SplitType::Inert;
}

Fp2 matrix_eigenvalue(const FieldCtx& F, const Mat2& A) {
  const i64 p = F.p();
  i64 t = mod(A.trace(), p);
  i64 disc = mod(t * t - 4, p);
  if (disc == 0) throw std::domain_error("matrix_eigenvalue: repeated eigenvalue mod N");
  i64 half = invmod(2, p);
  if (jacobi(disc, p) == 1) {
    i64 s = sqrt_mod(disc, p);
    return {mulmod(mod(t + s, p), half, p), 0};
  }
  // disc = d * s^2 with s = sqrt(disc/d); eigenvalue (t + s*sqrt(d))/2.
  i64 s = sqrt_mod(mulmod(disc, invmod(F.ext_nonresidue(), p), p), p);
  if (s < 0) throw std::logic_error("matrix_eigenvalue: disc/d not a residue");
  return {mulmod(t, half, p), mulmod(s, half, p)};
}

i64 matrix_order_mod(const Mat2& A, i64 N) {
  if (!is_prime(N)) throw std::invalid_argument("matrix_order_mod: N must be prime");
  Mat2 R = A.reduced(N);
  if (mod(R.det() - 1, N) != 0) throw std::invalid_argument("matrix_order_mod: det != 1 mod N");
  if (R == Mat2::identity()) return 1;
  i64 disc = mod(R.trace() * R.trace() - 4, N);
  if (N == 2 || disc == 0) {
    // Non-diagonalizable or tiny: iterate. Order divides N*(N-1)(N+1).
    Mat2 X = R;
    i64 r = 1;
    const i64 cap = N * (N * N - 1);
    while (!(X == Mat2::identity())) {
      X = X.mul_mod(R, N);
      ++r;
      if (r > cap) throw std::logic_error("matrix_order_mod: order search overflow");
    }
    return r;
  }
  FieldCtx F(N);
  Fp2 lam = matrix_eigenvalue(F, R);
  i64 r;
  if (lam.v == 0) {
    r = element_order(lam.u, N, N - 1);
  } else {
    // Inert eigenvalue has norm det = 1, so its order divides N + 1.
    i64 ord = N + 1;
    for (auto [q, e] : factorize(N + 1)) {
      for (int i = 0; i < e; ++i) {
        if (fp2_pow(F, lam, ord / q) == Fp2{1, 0})
          ord /= q;
        else
          break;
      }
    }
    r = ord;
  }
  return r;
}

}  // namespace qclab::ff
