// SPDX-License-Identifier: Apache-2.0
#include "eds/apparition.hpp"

#include <cmath>
#include <string>

#include "eds/ec_finite.hpp"
#include "eds/error.hpp"

namespace eds {

ApparitionCache::ApparitionCache(const EdsSequence& sequence, u64 scan_bound_factor)
    : seq_(sequence), scan_bound_factor_(scan_bound_factor) {
  if (scan_bound_factor_ == 0) throw Error(ErrorKind::InvalidArgument, "scan_bound_factor must be positive");
  store(1, 1);
}

bool ApparitionCache::lookup(u64 n, u64& r) const {
  std::lock_guard lock(mutex_);
  auto it = ranks_.find(n);
  if (it == ranks_.end()) return false;
  r = it->second;
  return true;
}

void ApparitionCache::store(u64 n, u64 r) {
  std::lock_guard lock(mutex_);
  ranks_.emplace(n, r);
}

bool ApparitionCache::is_regular(u64 p) const {
  if (mpz_divisible_ui_p(seq_.curve().disc().get_mpz_t(), p)) return false;
  return !mpz_divisible_ui_p(seq_.normalizer().get_mpz_t(), p);
}

u64 ApparitionCache::scan_bound(u64 p, unsigned e) const {
  // ceil((sqrt p + 1)^2) = p + 1 + ceil(2 sqrt p)
  u64 r = isqrt(4 * p);
  if (r * r < 4 * p) ++r;
  return checked_mul(checked_mul(scan_bound_factor_, p + 1 + r), ipow(p, e - 1));
}

u64 ApparitionCache::scan_prime_power(u64 p, unsigned e, u64 start) {
  const u64 bound = scan_bound(p, e);
  for (u64 n = start; n <= bound; ++n)
    if (seq_.valuation_at_least(p, e, n)) return n;
  throw Error(ErrorKind::ApparitionNotFound, "no index <= " + std::to_string(bound) + " with " + std::to_string(p) +
                                                 "^" + std::to_string(e) + " | W_n");
}

u64 ApparitionCache::rank_prime(u64 p) {
  u64 r;
  if (lookup(p, r)) return r;
  if (is_regular(p)) {
    const CurveFp reduced = reduce_curve(seq_.curve(), p);
    r = point_order(reduced, reduce_point(seq_.curve(), seq_.base_point(), p));
  } else {
    r = scan_prime_power(p, 1, 1);
  }
  store(p, r);
  return r;
}

u64 ApparitionCache::rank_prime_power(u64 p, unsigned e) {
  if (e == 0) return 1;
  if (e == 1) return rank_prime(p);
  const u64 n = ipow(p, e);
  u64 r;
  if (lookup(n, r)) return r;
  const u64 prev = rank_prime_power(p, e - 1);
  if (is_regular(p)) {
    if (seq_.valuation_at_least(p, e, prev)) {
      r = prev;
    } else if (seq_.valuation_at_least(p, e, checked_mul(p, prev))) {
      r = p * prev;
    } else {
      throw Error(ErrorKind::Integrity, "neither r_(p^(e-1)) nor p r_(p^(e-1)) works for " + std::to_string(p) + "^" +
                                            std::to_string(e));
    }
  } else {
    r = scan_prime_power(p, e, prev);
  }
  store(n, r);
  return r;
}

u64 ApparitionCache::rank(u64 n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "rank of apparition needs n >= 1");
  u64 r;
  if (lookup(n, r)) return r;
  const auto fac = factor(n);
  if (fac.size() == 1) return rank_prime_power(fac[0].p, fac[0].e);

  // Regular parts combine by lcm; irregular parts are checked on multiples of
  // that lcm. W is a divisibility sequence, so lcm(base, r_(p^e) ...) always
  // qualifies and bounds the search.
  u64 base = 1;
  u64 bound = 1;
  std::vector<PrimePower> irregular;
  for (const auto& pe : fac) {
    const u64 rp = rank_prime_power(pe.p, pe.e);
    bound = checked_lcm(bound, rp);
    if (is_regular(pe.p))
      base = checked_lcm(base, rp);
    else
      irregular.push_back(pe);
  }
  r = 0;
  for (u64 cand = base; cand <= bound; cand += base) {
    bool ok = true;
    for (const auto& [p, e] : irregular) {
      if (!seq_.valuation_at_least(p, e, cand)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      r = cand;
      break;
    }
  }
  if (r == 0) throw Error(ErrorKind::Integrity, "rank of " + std::to_string(n) + " not found below " + std::to_string(bound));
  store(n, r);
  return r;
}

u64 ApparitionCache::l(u64 n) { return checked_lcm(n, rank(n)); }

ApparitionCache::QGamma ApparitionCache::q_gamma(u64 x, double gamma) {
  if (x < 2 || !(gamma > 0)) throw Error(ErrorKind::InvalidArgument, "q_gamma needs x >= 2 and gamma > 0");
  QGamma out;
  for (u64 p : primes_upto(x)) {
    if (static_cast<double>(rank_prime(p)) <= std::pow(static_cast<double>(p), gamma)) out.members.push_back(p);
  }
  out.count = out.members.size();
  return out;
}

std::vector<std::pair<u64, u64>> ApparitionCache::cached_ranks() const {
  std::lock_guard lock(mutex_);
  return {ranks_.begin(), ranks_.end()};
}

void ApparitionCache::import_rank(u64 n, u64 r) {
  if (n == 0 || r == 0) throw Error(ErrorKind::InvalidArgument, "ranks are positive");
  std::lock_guard lock(mutex_);
  auto [it, inserted] = ranks_.emplace(n, r);
  if (!inserted && it->second != r)
    throw Error(ErrorKind::Integrity, "cached r_" + std::to_string(n) + " disagrees with the computed value");
}

}  // namespace eds
