#include <complex>

#include "doctest.h"
#include "common/rng.hpp"
#include "ffield/field.hpp"
#include "ffield/poly.hpp"

using namespace qclab;
using namespace qclab::ff;

TEST_CASE("least primitive roots") {
  CHECK(find_primitive_root(5) == 2);   // orders: 2->4
  CHECK(find_primitive_root(7) == 3);   // 2 has order 3 mod 7
  CHECK(find_primitive_root(3) == 2);
  CHECK_THROWS(find_primitive_root(9));
}

TEST_CASE("generator enumerates the full group and dlog inverts it") {
  for (i64 p : {5, 7, 101, 199}) {
    FieldCtx F(p);
    std::vector<bool> seen(p, false);
    i64 x = 1;
    for (i64 k = 0; k < p - 1; ++k) {
      CHECK(!seen[x]);
      seen[x] = true;
      CHECK(F.dlog(x) == k);
      x = F.mul(x, F.generator());
    }
    CHECK(x == 1);
  }
}

TEST_CASE("ext_nonresidue has no square root") {
  for (i64 p : {5, 7, 11, 101}) {
    FieldCtx F(p);
    CHECK(F.legendre(F.ext_nonresidue()) == -1);
    CHECK(powmod(F.ext_nonresidue(), (p - 1) / 2, p) == p - 1);  // Euler
  }
}

TEST_CASE("character evaluation with exact phases") {
  FieldCtx F(5);
  MultChar chi0{&F, 0}, chi1{&F, 1}, chi2{&F, 2};
  for (i64 x = 1; x < 5; ++x) CHECK(chi0.eval(x) == cplx{1.0, 0.0});
  // g = 2: chi_1(2) = e(1/4) = i
  auto ph = chi1.phase(2);
  CHECK(ph.num == 1);
  CHECK(ph.den == 4);
  CHECK(std::abs(chi1.eval(2) - cplx{0.0, 1.0}) < 1e-12);
  // chi_2(4) = chi_2(2^2) = e(4/4) = 1
  CHECK(chi2.phase(4).num == 0);
  CHECK_THROWS(chi1.phase(0));
}

TEST_CASE("character multiplicativity and orthogonality (exact counts)") {
  for (i64 p : {5, 7, 13, 101, 199}) {
    FieldCtx F(p);
    Rng rng(7 + p);
    for (int t = 0; t < 50; ++t) {
      i64 j = rng.range(0, p - 2);
      i64 x = rng.range(1, p - 1), y = rng.range(1, p - 1);
      MultChar chi{&F, j};
      auto lhs = chi.phase(F.mul(x, y));
      auto rhs_num = mod(chi.phase(x).num + chi.phase(y).num, p - 1);
      CHECK(lhs.num == rhs_num);
    }
    // orthogonality: counts of j*dlog(x) are a balanced progression for j != 0
    for (i64 j = 0; j < p - 1; ++j) {
      PhaseCounts counts(p - 1);
      MultChar chi{&F, j};
      for (i64 x = 1; x < p; ++x) counts.add(chi.phase(x).num);
      if (j == 0) {
        CHECK(counts.count(0) == p - 1);
      } else {
        CHECK(counts.is_balanced_progression());
        CHECK(std::abs(counts.value()) < 1e-9);
      }
    }
  }
}

TEST_CASE("additive character orthogonality (exact counts)") {
  for (i64 p : {5, 101, 199}) {
    FieldCtx F(p);
    for (i64 a : {i64(0), i64(1), i64(3)}) {
      AddChar psi{&F, a};
      PhaseCounts counts(p);
      for (i64 x = 0; x < p; ++x) counts.add(psi.phase(x).num);
      if (a == 0) {
        CHECK(counts.count(0) == p);
      } else {
        CHECK(counts.is_balanced_progression());
      }
    }
  }
}

TEST_CASE("extension norm and trace") {
  FieldCtx F7(7);
  CHECK(F7.ext_nonresidue() == 3);
  auto [n1, t1] = ext_norm_trace(F7, {1, 0});
  CHECK(n1 == 1);
  CHECK(t1 == 2);
  auto [n2, t2] = ext_norm_trace(F7, {0, 1});
  CHECK(n2 == mod(-3, 7));  // -d
  CHECK(t2 == 0);
  for (i64 c = 1; c < 7; ++c) {
    auto [n, t] = ext_norm_trace(F7, {c, 0});
    CHECK(n == mod(c * c, 7));
    CHECK(t == mod(2 * c, 7));
  }
}

TEST_CASE("norm multiplicativity on random pairs") {
  for (i64 p : {7, 101, 499}) {
    FieldCtx F(p);
    Rng rng(42 + p);
    for (int t = 0; t < 1000; ++t) {
      Fp2 a{rng.range(0, p - 1), rng.range(0, p - 1)};
      Fp2 b{rng.range(0, p - 1), rng.range(0, p - 1)};
      auto [na, ta] = ext_norm_trace(F, a);
      auto [nb, tb] = ext_norm_trace(F, b);
      auto [nab, tab] = ext_norm_trace(F, fp2_mul(F, a, b));
      CHECK(nab == F.mul(na, nb));
    }
  }
}

TEST_CASE("matrix order mod N") {
  Mat2 A{7, -2, 4, -1};
  CHECK(matrix_order_mod(A, 5) == 6);
  CHECK(matrix_order_mod(Mat2::identity(), 5) == 1);
  // oracle: repeated multiplication
  for (i64 N : {5, 7, 11, 13, 101}) {
    i64 ord = matrix_order_mod(A, N);
    Mat2 X = A.pow_mod(ord, N);
    CHECK(X == Mat2::identity());
    for (i64 r = 1; r < ord; ++r) CHECK(!(A.pow_mod(r, N) == Mat2::identity()));
  }
}

TEST_CASE("split type by Legendre symbol") {
  Mat2 A{7, -2, 4, -1};  // disc = 32
  CHECK(split_type(A, 7) == SplitType::Split);
  CHECK(split_type(A, 1997) == SplitType::Inert);
  CHECK(split_type(A, 101) == SplitType::Inert);
  CHECK(split_type(A, 401) == SplitType::Split);
  // split iff an eigenvalue exists in F_N
  for (i64 N : {7, 11, 13, 17, 23, 31, 41, 101}) {
    bool has_eig = false;
    i64 disc = mod(A.trace() * A.trace() - 4, N);
    has_eig = jacobi(disc, N) == 1;
    CHECK((split_type(A, N) == SplitType::Split) == has_eig);
  }
  Mat2 B{1, 2, 0, 1};  // disc = 0: every prime ramified
  CHECK_THROWS(split_type(B, 7));
}

TEST_CASE("eigenvalue consistency with characteristic polynomial") {
  Mat2 A{7, -2, 4, -1};
  for (i64 N : {7, 11, 101, 199}) {
    FieldCtx F(N);
    Fp2 lam = matrix_eigenvalue(F, A.reduced(N));
    // lambda^2 - tr*lambda + 1 = 0
    Fp2 lhs = fp2_mul(F, lam, lam);
    Fp2 tl = fp2_mul(F, {mod(A.trace(), N), 0}, lam);
    CHECK(mod(lhs.u - tl.u + 1, N) == 0);
    CHECK(mod(lhs.v - tl.v, N) == 0);
  }
}

TEST_CASE("univariate polynomial machinery") {
  FieldCtx F(13);
  FpField k{&F};
  auto X = poly_from(k, {0, 1});
  auto P = poly_from(k, {1, 0, 1});  // x^2 + 1; -1 is a QR mod 13, so reducible
  CHECK(!poly_is_irreducible(k, P));
  auto Q = poly_from(k, {2, 0, 1});  // x^2 + 2; -2 non-residue mod 13
  CHECK(F.legendre(-2) == -1);
  CHECK(poly_is_irreducible(k, Q));
  CHECK(poly_is_irreducible(k, X));
  // factorization of a quartic with known factors
  auto f = poly_mul(k, Q, poly_from(k, {5, 0, 1}));
  auto factors = poly_factor_deg4(k, f);
  CHECK(factors.size() == 2);
  auto prod = poly_from(k, {1});
  for (auto& g : factors) prod = poly_mul(k, prod, g);
  CHECK(poly_sub(k, prod, poly_monic(k, f)).is_zero());
}

TEST_CASE("resultant identities") {
  FieldCtx F(7);
  FpField k{&F};
  // res(P, Q) = prod over roots x of Q of P(x); so res(x-a, x-b) = b - a.
  for (i64 a = 0; a < 7; ++a)
    for (i64 b = 0; b < 7; ++b) {
      auto P = poly_from(k, {mod(-a, 7), 1});
      auto Q = poly_from(k, {mod(-b, 7), 1});
      CHECK(poly_resultant(k, P, Q) == mod(b - a, 7));
    }
  // res(x^2 + 1, x - 2) = P(2) = 5 over F_7
  auto P = poly_from(k, {1, 0, 1});
  auto Q = poly_from(k, {mod(-2, 7), 1});
  CHECK(poly_resultant(k, P, Q) == 5);
  // res(P, Q) = 0 iff gcd nontrivial
  auto A = poly_from(k, {6, 1});           // x + 6 = x - 1
  auto B = poly_mul(k, A, poly_from(k, {3, 1}));
  CHECK(poly_resultant(k, A, B) == 0);
  CHECK(poly_gcd(k, A, B).deg() == 1);
  // Sylvester-matrix oracle on random pairs
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    int dp = 1 + static_cast<int>(rng.below(3));
    int dq = 1 + static_cast<int>(rng.below(3));
    std::vector<i64> pc(dp + 1), qc(dq + 1);
    for (auto& c : pc) c = rng.range(0, 6);
    for (auto& c : qc) c = rng.range(0, 6);
    pc.back() = 1;
    qc.back() = 1;  // monic
    auto Pp = poly_from(k, pc), Qq = poly_from(k, qc);
    // Sylvester matrix of (Q, P): det = Res(Q, P) = res(P, Q) for monic Q.
    int n = dp + dq;
    std::vector<std::vector<i64>> M(n, std::vector<i64>(n, 0));
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j <= dq; ++j) M[i][i + j] = qc[dq - j];
    for (int i = 0; i < dq; ++i)
      for (int j = 0; j <= dp; ++j) M[dp + i][i + j] = pc[dp - j];
    // determinant mod 7 by Gaussian elimination
    i64 det = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (mod(M[r][col], 7) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(M[piv], M[col]);
        det = mod(-det, 7);
      }
      det = F.mul(det, M[col][col]);
      i64 inv = F.inv(M[col][col]);
      for (int r = col + 1; r < n; ++r) {
        i64 f = F.mul(M[r][col], inv);
        for (int cc = col; cc < n; ++cc) M[r][cc] = F.sub(M[r][cc], F.mul(f, M[col][cc]));
      }
    }
    CHECK(poly_resultant(k, Pp, Qq) == det);
  }
}
