// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace eds {

using u64 = std::uint64_t;

struct PrimePower {
  u64 p;
  unsigned e;
  bool operator==(const PrimePower&) const = default;
};

/// Primes in [2, limit], ascending (Eratosthenes).
std::vector<u64> primes_upto(u64 limit);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Trial-division factorisation, primes ascending. factor(1) is empty.
std::vector<PrimePower> factor(u64 n);

u64 gcd_u64(u64 a, u64 b);
/// lcm that throws ErrorKind::Overflow instead of wrapping.
u64 checked_lcm(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 ipow(u64 base, unsigned e);

u64 isqrt(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
/// Inverse modulo a prime; a must be nonzero mod p.
u64 invmod(u64 a, u64 p);
/// Square root modulo an odd prime (Tonelli-Shanks); a must be a square.
u64 sqrtmod(u64 a, u64 p);
/// Legendre symbol for odd prime p: -1, 0 or 1.
int legendre(u64 a, u64 p);

/// Reduce an arbitrary-precision integer into [0, m).
u64 mod_u64(const mpz_class& a, u64 m);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const mpz_class& a, u64 p);

}  // namespace eds
