// SPDX-License-Identifier: Apache-2.0
#include "eds/density.hpp"

#include <algorithm>

#include "eds/ec_finite.hpp"
#include "eds/error.hpp"
#include "eds/gcd_classes.hpp"

namespace eds {

MobiusTable::MobiusTable(u64 limit) : values_(limit + 1, 0) {
  if (limit == 0) throw Error(ErrorKind::InvalidArgument, "Moebius table needs limit >= 1");
  values_[1] = 1;
  std::vector<u64> primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      values_[i] = -1;
    }
    for (u64 p : primes) {
      if (p > limit / i) break;
      composite[i * p] = true;
      if (i % p == 0) {
        values_[i * p] = 0;
        break;
      }
      values_[i * p] = static_cast<std::int8_t>(-values_[i]);
    }
  }
}

MobiusTable mobius_sieve(u64 limit) { return MobiusTable(limit); }

std::string render_decimal(const mpq_class& value, int significant) {
  if (significant < 1) throw Error(ErrorKind::InvalidArgument, "need at least one significant digit");
  if (value == 0) return "0." + std::string(significant - 1, '0');

  mpq_class mag = abs(value);
  // 10^e <= mag < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  auto pow10 = [](long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return mpq_class(r);
  };
  auto scale = [&](long k) { return k >= 0 ? pow10(k) : 1 / pow10(-k); };
  while (mag >= scale(e + 1)) ++e;
  while (mag < scale(e)) --e;

  auto round_half_even = [](const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    mpq_class frac = q - fl;
    const int cmp = ::cmp(frac, mpq_class(1, 2));
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
    return fl;
  };
  mpz_class digits = round_half_even(mag * scale(significant - 1 - e));
  mpz_class limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(significant));
  if (digits >= limit) {
    ++e;
    digits = round_half_even(mag * scale(significant - 1 - e));
  }
  std::string s = digits.get_str();  // exactly `significant` digits
  std::string out;
  if (e >= significant - 1) {
    out = s + std::string(static_cast<std::size_t>(e - (significant - 1)), '0');
  } else if (e >= 0) {
    out = s.substr(0, static_cast<std::size_t>(e + 1)) + "." + s.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
  }
  return value < 0 ? "-" + out : out;
}

std::string exact_string(const mpq_class& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::AbsSum: return "abs-sum";
    case ReportKind::SignedSum: return "signed-sum";
    case ReportKind::Empirical: return "empirical";
    case ReportKind::AnomalousCensus: return "anomalous-census";
  }
  return "unknown";
}

namespace {

DensityReport sum_report(ApparitionCache& cache, u64 k, u64 n, bool absolute) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "partial sums need n >= 1");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  DensityReport rep;
  rep.curve = cache.sequence().label();
  rep.kind = absolute ? ReportKind::AbsSum : ReportKind::SignedSum;
  if (!absolute) rep.params["k"] = std::to_string(k);
  rep.params["n"] = std::to_string(n);

  const MobiusTable mu = mobius_sieve(n);
  mpq_class acc = 0;
  rep.rows.reserve(n);
  for (u64 d = 1; d <= n; ++d) {
    const int m = mu(d);
    if (m != 0) {
      const mpz_class den = cache.l(checked_mul(k, d));
      acc += mpq_class(absolute ? 1 : m, 1) / den;
    }
    rep.rows.push_back({d, acc, render_decimal(acc)});
  }
  rep.exact_value = acc;
  rep.rendered = render_decimal(acc);
  return rep;
}

}  // namespace

DensityReport partial_abs_sum(ApparitionCache& cache, u64 n) { return sum_report(cache, 1, n, true); }

DensityReport partial_density(ApparitionCache& cache, u64 k, u64 n) { return sum_report(cache, k, n, false); }

DensityReport empirical_density(ApparitionCache& cache, u64 k, u64 x) {
  if (x == 0 || k == 0) throw Error(ErrorKind::InvalidArgument, "empirical density needs k, x >= 1");
  DensityReport rep;
  rep.curve = cache.sequence().label();
  rep.kind = ReportKind::Empirical;
  rep.params["k"] = std::to_string(k);
  rep.params["x"] = std::to_string(x);
  u64 count = 0;
  if (cache.l(k) <= x && is_class_nonempty(cache, k)) count = class_members_structural(cache, k, x).size();
  rep.exact_value = mpq_class(mpz_class(count), mpz_class(x));
  rep.exact_value.canonicalize();
  rep.rendered = render_decimal(rep.exact_value);
  rep.rows.push_back({x, rep.exact_value, rep.rendered});
  return rep;
}

DensityReport anomalous_scan(const EdsSequence& seq, u64 x) {
  if (x < 2) throw Error(ErrorKind::InvalidArgument, "anomalous scan needs x >= 2");
  DensityReport rep;
  rep.curve = seq.label();
  rep.kind = ReportKind::AnomalousCensus;
  rep.params["x"] = std::to_string(x);
  for (u64 p : primes_upto(x)) {
    const CurveFp reduced = reduce_curve(seq.curve(), p);
    if (!reduced.smooth) {
      rep.skipped_primes.push_back(p);
      continue;
    }
    if (group_order(reduced) == p) {
      rep.anomalous_primes.push_back(p);
      const mpq_class count(static_cast<unsigned long>(rep.anomalous_primes.size()));
      rep.rows.push_back({p, count, count.get_num().get_str()});
    }
  }
  rep.exact_value = mpq_class(static_cast<unsigned long>(rep.anomalous_primes.size()));
  rep.rendered = rep.exact_value.get_num().get_str();
  return rep;
}

}  // namespace eds
