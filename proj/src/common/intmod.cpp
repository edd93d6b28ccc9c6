#include "common/intmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace qclab {

i64 powmod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 r = 1;
  i64 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    exp >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("invmod: argument not invertible");
  return mod(old_s, m);
}

int jacobi(i64 a, i64 m) {
  a = mod(a, m);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) t = -t;
    a %= m;
  }
  return m == 1 ? t : 0;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3e24.
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.push_back({d, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

i64 element_order(i64 a, i64 p, i64 group_order) {
  i64 ord = group_order;
  for (auto [q, e] : factorize(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, ord / q, p) == 1)
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

i64 sqrt_mod(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  if (jacobi(a, p) != 1) return -1;
  if (p % 4 == 3) {
    i64 r = powmod(a, (p + 1) / 4, p);
    return std::min(r, p - r);
  }
  // Tonelli-Shanks.
  i64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  i64 z = 2;
  while (jacobi(z, p) != -1) ++z;
  i64 m = s;
  i64 c = powmod(z, q, p);
  i64 t = powmod(a, q, p);
  i64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    i64 t2 = t;
    i64 i = 0;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    i64 b = powmod(c, i64(1) << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

std::vector<i64> primes_in_range(i64 lo, i64 hi) {
  std::vector<i64> out;
  for (i64 n = std::max<i64>(2, lo); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace qclab
