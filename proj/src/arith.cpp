// SPDX-License-Identifier: Apache-2.0
#include "eds/arith.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "eds/error.hpp"

namespace eds {

std::vector<u64> primes_upto(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i <= limit / i)
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "zero has no inverse mod " + std::to_string(p));
  return powmod(a, p - 2, p);
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 sqrtmod(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (legendre(a, p) != 1)
    throw Error(ErrorKind::InvalidArgument, "not a quadratic residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (legendre(z, p) != -1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<PrimePower> factor(u64 n) {
  std::vector<PrimePower> out;
  auto strip = [&](u64 q) {
    if (n % q) return;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  };
  strip(2);
  strip(3);
  for (u64 q = 5; q <= n / q; q += 6) {
    strip(q);
    strip(q + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
  return r;
}

u64 checked_lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd_u64(a, b), b);
}

u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  while (e--) r = checked_mul(r, base);
  return r;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

u64 mod_u64(const mpz_class& a, u64 m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
  return r.get_ui();
}

unsigned valuation(const mpz_class& a, u64 p) {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  mpz_class q = a;
  mpz_class pz = p;
  return static_cast<unsigned>(mpz_remove(q.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace eds
