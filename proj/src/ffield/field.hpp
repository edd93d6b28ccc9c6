#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "common/intmod.hpp"
#include "common/mat2.hpp"
#include "common/phase.hpp"

namespace qclab::ff {

// Exact value of a root of unity: e(num/den).
struct UnitPhase {
  i64 num;
  i64 den;
  cplx value() const;
};

// Arithmetic context for F_p (and its quadratic extension F_p[sqrt(d)] with d
// the least non-residue). Immutable after construction; shareable across
// threads.
class FieldCtx {
 public:
  explicit FieldCtx(i64 p);

  i64 p() const { return p_; }
  i64 generator() const { return g_; }
  i64 ext_nonresidue() const { return d_; }

  // Discrete log base g of x in F_p^*, x in [1, p).
  i64 dlog(i64 x) const { return dlog_[static_cast<size_t>(mod(x, p_))]; }

  i64 add(i64 a, i64 b) const { return mod(a + b, p_); }
  i64 sub(i64 a, i64 b) const { return mod(a - b, p_); }
  i64 mul(i64 a, i64 b) const { return mulmod(mod(a, p_), mod(b, p_), p_); }
  i64 inv(i64 a) const { return invmod(mod(a, p_), p_); }
  i64 neg(i64 a) const { return mod(-a, p_); }
  i64 pow(i64 a, i64 e) const { return powmod(a, e, p_); }
  int legendre(i64 a) const { return jacobi(mod(a, p_), p_); }

 private:
  i64 p_;
  i64 g_;
  i64 d_;
  std::vector<int32_t> dlog_;
};

i64 find_primitive_root(i64 p);

// ----- quadratic extension -----------------------------------------------

// Element u + v*sqrt(d) of F_{p^2}.
struct Fp2 {
  i64 u = 0, v = 0;
  bool operator==(const Fp2&) const = default;
};

Fp2 fp2_mul(const FieldCtx& F, Fp2 x, Fp2 y);
Fp2 fp2_inv(const FieldCtx& F, Fp2 x);
Fp2 fp2_pow(const FieldCtx& F, Fp2 x, i64 e);
// (norm, trace) = (u^2 - d v^2, 2u).
std::pair<i64, i64> ext_norm_trace(const FieldCtx& F, Fp2 x);
// Least (lex order on (u, v)) generator of F_{p^2}^*.
Fp2 fp2_least_generator(const FieldCtx& F);
i64 fp2_element_order(const FieldCtx& F, Fp2 x);

// ----- characters ----------------------------------------------------------

// Multiplicative character chi_j of F_p^*: chi_j(x) = e(j*dlog(x)/(p-1)).
struct MultChar {
  const FieldCtx* F;
  i64 j;

  UnitPhase phase(i64 x) const;  // x != 0 required
  cplx eval(i64 x) const { return phase(x).value(); }
  bool trivial() const { return mod(j, F->p() - 1) == 0; }
};

// Additive character psi_a of F_p: psi_a(x) = e(a*x/p).
struct AddChar {
  const FieldCtx* F;
  i64 a;

  UnitPhase phase(i64 x) const { return {mod(mulmod(mod(a, F->p()), mod(x, F->p()), F->p()), F->p()), F->p()}; }
  cplx eval(i64 x) const { return phase(x).value(); }
  // On the extension: psi_a(x) = e(tr(a*x)/p) with a in the base field.
  UnitPhase phase_ext(Fp2 x) const;
};

// ----- matrices mod N ------------------------------------------------------

enum class SplitType { Split, Inert };

// Split iff disc = (tr A)^2 - 4 is a nonzero square mod N. Throws
// std::domain_error for ramified N (N | disc).
SplitType split_type(const Mat2& A, i64 N);

// Least r >= 1 with A^r = I mod N; eigenvalue-order route with an iterative
// fallback when A is not diagonalizable mod N.
i64 matrix_order_mod(const Mat2& A, i64 N);

// Eigenvalue of A mod N in F_N (split) or F_{N^2} (inert), as an Fp2 with
// v = 0 in the split case. Requires N odd prime, N not dividing disc.
Fp2 matrix_eigenvalue(const FieldCtx& F, const Mat2& A);

}  // namespace qclab::ff
