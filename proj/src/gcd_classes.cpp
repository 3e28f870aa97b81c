// SPDX-License-Identifier: Apache-2.0
#include "eds/gcd_classes.hpp"

#include <algorithm>
#include <string>

#include "eds/density.hpp"
#include "eds/error.hpp"

namespace eds {

namespace {

void require_positive(u64 k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "class index k must be positive");
}

void require_within_cap(const EdsSequence& seq, u64 x) {
  if (x > seq.index_cap())
    throw Error(ErrorKind::IndexCapExceeded,
                "direct enumeration to " + std::to_string(x) + " exceeds n_max = " + std::to_string(seq.index_cap()));
}

}  // namespace

bool is_class_nonempty(ApparitionCache& cache, u64 k) {
  require_positive(k);
  return cache.sequence().g(cache.l(k)) == k;
}

std::vector<u64> exclusion_set(ApparitionCache& cache, u64 k, u64 bound) {
  if (!is_class_nonempty(cache, k))
    throw Error(ErrorKind::ClassEmpty, "A_" + std::to_string(k) + " is empty");
  std::vector<u64> out;
  for (const auto& pe : factor(k))
    if (pe.p <= bound) out.push_back(pe.p);

  // l(kp) / l(k) <= bound forces p <= l(kp) <= bound l(k), so primes up to
  // bound * l(k) give every element below the bound.
  const u64 lk = cache.l(k);
  const u64 prime_limit = checked_mul(bound, lk);
  for (u64 p : primes_upto(prime_limit)) {
    if (k % p == 0) continue;
    const u64 lkp = cache.l(checked_mul(k, p));
    if (lkp % lk != 0)
      throw Error(ErrorKind::Integrity, "l(" + std::to_string(k) + ") does not divide l(" + std::to_string(k * p) + ")");
    const u64 q = lkp / lk;
    if (q <= bound) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GcdClassSpec describe_class(ApparitionCache& cache, u64 k, u64 bound) {
  GcdClassSpec spec;
  spec.k = k;
  spec.l_of_k = cache.l(k);
  spec.nonempty = is_class_nonempty(cache, k);
  spec.bound = bound;
  if (spec.nonempty) spec.exclusion_elements = exclusion_set(cache, k, bound);
  return spec;
}

std::vector<u64> class_members_structural(ApparitionCache& cache, u64 k, u64 x) {
  require_positive(k);
  if (!is_class_nonempty(cache, k))
    throw Error(ErrorKind::ClassEmpty, "A_" + std::to_string(k) + " is empty");
  const u64 lk = cache.l(k);
  const u64 mmax = x / lk;
  std::vector<u64> out;
  if (mmax == 0) return out;
  std::vector<bool> excluded(mmax + 1, false);
  for (u64 e : exclusion_set(cache, k, mmax))
    for (u64 m = e; m <= mmax; m += e) excluded[m] = true;
  for (u64 m = 1; m <= mmax; ++m)
    if (!excluded[m]) out.push_back(lk * m);
  return out;
}

std::vector<u64> class_members_direct(const EdsSequence& seq, u64 k, u64 x) {
  require_positive(k);
  require_within_cap(seq, x);
  std::vector<u64> out;
  for (u64 n = k; n <= x; n += k)
    if (seq.g(n) == k) out.push_back(n);
  return out;
}

std::vector<u64> b_set_members_direct(const EdsSequence& seq, u64 k, u64 x) {
  require_positive(k);
  require_within_cap(seq, x);
  std::vector<u64> out;
  for (u64 n = k; n <= x; n += k) {
    const u64 gn = seq.g(n);
    if (gn % k != 0) continue;
    bool radical_ok = true;
    for (const auto& pe : factor(gn)) {
      if (k % pe.p != 0) {
        radical_ok = false;
        break;
      }
    }
    if (radical_ok) out.push_back(n);
  }
  return out;
}

std::int64_t b_set_count_formula(ApparitionCache& cache, u64 k, u64 x) {
  require_positive(k);
  const MobiusTable mu = mobius_sieve(std::max<u64>(x, 1));
  std::int64_t total = 0;
  for (u64 d = 1; d <= x; ++d) {
    if (mu(d) == 0 || gcd_u64(d, k) != 1) continue;
    total += mu(d) * static_cast<std::int64_t>(x / cache.l(checked_mul(d, k)));
  }
  return total;
}

}  // namespace eds
