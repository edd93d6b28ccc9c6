#pragma once

#include <cstdint>
#include <vector>

namespace qclab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128_t;

// Least nonnegative residue; works for negative a.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<i128>(a) * b % m);
}

i64 powmod(i64 base, i64 exp, i64 m);

// Modular inverse via extended gcd; requires gcd(a, m) == 1.
i64 invmod(i64 a, i64 m);

// Legendre/Jacobi symbol (a|m) for odd m > 0.
int jacobi(i64 a, i64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(i64 n);

// Prime factorization by trial division (inputs here stay <= ~1e12).
std::vector<std::pair<i64, int>> factorize(i64 n);

// Multiplicative order of a mod p given the factorization of `group_order`
// (a^group_order must be 1).
i64 element_order(i64 a, i64 p, i64 group_order);

// Square root mod an odd prime (Tonelli-Shanks). Returns -1 if a is a
// non-residue; the smaller of the two roots otherwise.
i64 sqrt_mod(i64 a, i64 p);

std::vector<i64> primes_in_range(i64 lo, i64 hi);

}  // namespace qclab
