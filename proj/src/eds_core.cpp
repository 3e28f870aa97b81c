// SPDX-License-Identifier: Apache-2.0
#include "eds/eds_core.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "eds/error.hpp"

namespace eds {

namespace {

mpz_class pow_ui(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

unsigned bit_length(u64 n) { return n == 0 ? 0 : 64 - __builtin_clzll(n); }

}  // namespace

EdsSequence::EdsSequence(CurveQ curve, PointQ base, u64 index_cap, std::string label)
    : curve_(std::move(curve)), base_(std::move(base)), index_cap_(index_cap), label_(std::move(label)) {
  if (!on_curve(curve_, base_)) throw Error(ErrorKind::NotOnCurve, "base point " + base_.to_string() + " is not on the curve");
  if (is_torsion(curve_, base_)) throw Error(ErrorKind::TorsionPoint, "base point " + base_.to_string() + " has finite order");

  const mpz_class& xden = base_.x.get_den();
  if (!mpz_perfect_square_p(xden.get_mpz_t()))
    throw Error(ErrorKind::Integrity, "denominator of x(P) is not a square");
  d_ = sqrt(xden);
  if (base_.y.get_den() != d_ * d_ * d_)
    throw Error(ErrorKind::Integrity, "denominator of y(P) is not the cube of D_1");
  if (d_ != 1) warnings_.push_back("D_1 = " + d_.get_str() + " != 1: the sequence is not normalized");

  a_ = base_.x.get_num();
  const mpz_class b = base_.y.get_num();
  const mpz_class& a = a_;
  const mpz_class d2 = d_ * d_;
  const CurveQ& c = curve_;

  // psi_2, psi_3, psi_4 at P, scaled by D_1^(n^2 - 1).
  mpz_class v2 = 2 * b + c.a1() * a * d_ + c.a3() * d2 * d_;
  mpz_class v3 = 3 * pow_ui(a, 4) + c.b2() * pow_ui(a, 3) * d2 + 3 * c.b4() * a * a * pow_ui(d_, 4) +
                 3 * c.b6() * a * pow_ui(d_, 6) + c.b8() * pow_ui(d_, 8);
  mpz_class v4 = v2 * (2 * pow_ui(a, 6) + c.b2() * pow_ui(a, 5) * d2 + 5 * c.b4() * pow_ui(a, 4) * pow_ui(d_, 4) +
                       10 * c.b6() * pow_ui(a, 3) * pow_ui(d_, 6) + 10 * c.b8() * a * a * pow_ui(d_, 8) +
                       (c.b2() * c.b8() - c.b4() * c.b6()) * a * pow_ui(d_, 10) +
                       (c.b4() * c.b8() - c.b6() * c.b6()) * pow_ui(d_, 12));
  v_ = {mpz_class(0), mpz_class(1), v2, v3, v4};
}

void EdsSequence::check_index(u64 n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sequence index must be positive");
  if (n > index_cap_)
    throw Error(ErrorKind::IndexCapExceeded,
                "index " + std::to_string(n) + " exceeds the cap n_max = " + std::to_string(index_cap_));
}

void EdsSequence::ensure(u64 n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < v_.size()) return;
  }
  std::unique_lock lock(mutex_);
  const mpz_class w2 = v_[2];
  v_.reserve(n + 1);
  for (u64 k = v_.size(); k <= n; ++k) {
    const u64 m = k / 2;
    mpz_class next;
    if (k & 1) {
      next = v_[m + 2] * v_[m] * v_[m] * v_[m] - v_[m - 1] * v_[m + 1] * v_[m + 1] * v_[m + 1];
    } else {
      mpz_class num = (v_[m + 2] * v_[m - 1] * v_[m - 1] - v_[m - 2] * v_[m + 1] * v_[m + 1]) * v_[m];
      if (!mpz_divisible_p(num.get_mpz_t(), w2.get_mpz_t()))
        throw Error(ErrorKind::Integrity, "recurrence division by W_2 is not exact at index " + std::to_string(k));
      mpz_divexact(next.get_mpz_t(), num.get_mpz_t(), w2.get_mpz_t());
    }
    if (next == 0) throw Error(ErrorKind::TorsionPoint, "W_" + std::to_string(k) + " vanished");
    if (auto it = imported_.find(k); it != imported_.end() && it->second != abs(next * d_))
      throw Error(ErrorKind::Integrity, "cached D_" + std::to_string(k) + " disagrees with the recurrence");
    v_.push_back(std::move(next));
  }
}

mpz_class EdsSequence::signed_term(u64 n) const {
  check_index(n);
  ensure(n);
  std::shared_lock lock(mutex_);
  return d_ * v_[n];
}

mpz_class EdsSequence::term(u64 n) const {
  check_index(n);
  {
    std::shared_lock lock(mutex_);
    if (n < v_.size()) return abs(d_ * v_[n]);
    if (auto it = imported_.find(n); it != imported_.end()) return it->second;
  }
  return abs(signed_term(n));
}

std::vector<mpz_class> EdsSequence::terms_upto(u64 count) const {
  if (count > 0) check_index(count);
  ensure(count);
  std::vector<mpz_class> out;
  out.reserve(count);
  std::shared_lock lock(mutex_);
  for (u64 n = 1; n <= count; ++n) out.push_back(abs(d_ * v_[n]));
  return out;
}

mpz_class EdsSequence::numerator(u64 n) const {
  check_index(n);
  ensure(n + 1);
  std::shared_lock lock(mutex_);
  return a_ * v_[n] * v_[n] - v_[n - 1] * v_[n + 1];
}

u64 EdsSequence::g(u64 n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sequence index must be positive");
  if (n <= index_cap_) {
    mpz_class r;
    mpz_class t = term(n);
    mpz_gcd_ui(r.get_mpz_t(), t.get_mpz_t(), n);
    return r.get_ui();
  }
  u64 out = 1;
  for (const auto& [p, e] : factor(n)) {
    for (unsigned k = 1; k <= e && valuation_at_least(p, k, n); ++k) out *= p;
  }
  return out;
}

unsigned EdsSequence::valuation(u64 p, u64 n) const { return eds::valuation(term(n), p); }

bool EdsSequence::valuation_at_least(u64 p, unsigned e, u64 n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sequence index must be positive");
  if (e == 0) return true;
  const unsigned vd = d_ == 1 ? 0 : eds::valuation(d_, p);
  if (vd >= e) return true;
  const unsigned need = e - vd;
  {
    std::shared_lock lock(mutex_);
    if (n < v_.size()) return eds::valuation(v_[n], p) >= need;
  }
  return residue_divisible(p, need, n);
}

// V_n mod p^E by the memoised recurrence. Each division by V_2 = p^s u costs
// s digits of precision and at most bit_length(n) + 1 divisions lie on any
// dependency chain, so E = need + s (bit_length(n) + 2) leaves `need` exact
// digits at the top.
bool EdsSequence::residue_divisible(u64 p, unsigned need, u64 n) const {
  std::vector<mpz_class> base;
  {
    std::shared_lock lock(mutex_);
    base.assign(v_.begin(), v_.begin() + 5);
  }
  const unsigned s = eds::valuation(base[2], p);
  const unsigned digits = need + s * (bit_length(n) + 2);
  const mpz_class pz = p;
  const mpz_class modulus = pow_ui(pz, digits);
  const mpz_class ps = pow_ui(pz, s);
  mpz_class unit = base[2] / ps;
  mpz_class unit_inv;
  if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw Error(ErrorKind::Integrity, "unit part of W_2 not invertible");

  std::unordered_map<u64, mpz_class> memo;
  auto reduce = [&](mpz_class v) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return r;
  };
  auto at = [&](auto&& self, u64 k) -> mpz_class {
    if (k <= 4) return reduce(base[k]);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    const u64 m = k / 2;
    mpz_class r;
    if (k & 1) {
      mpz_class vm = self(self, m), vm1 = self(self, m + 1);
      r = reduce(self(self, m + 2) * vm * vm * vm - self(self, m - 1) * vm1 * vm1 * vm1);
    } else {
      mpz_class vmm1 = self(self, m - 1), vm1 = self(self, m + 1);
      mpz_class num = reduce((self(self, m + 2) * vmm1 * vmm1 - self(self, m - 2) * vm1 * vm1) * self(self, m));
      if (!mpz_divisible_p(num.get_mpz_t(), ps.get_mpz_t()))
        throw Error(ErrorKind::Integrity, "lost p-adic precision at index " + std::to_string(k));
      r = reduce((num / ps) * unit_inv);
    }
    memo.emplace(k, r);
    return r;
  };
  const mpz_class vn = at(at, n);
  return mpz_divisible_p(vn.get_mpz_t(), pow_ui(pz, need).get_mpz_t()) != 0;
}

double EdsSequence::height_estimate(u64 n) const {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "height estimate needs n >= 2");
  const mpz_class t = term(n);
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, t.get_mpz_t());
  const double log_t = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  return log_t / (static_cast<double>(n) * static_cast<double>(n));
}

mpz_class EdsSequence::denominator_root(u64 n) const {
  check_index(n);
  const PointQ q = scalar_mul(curve_, base_, n);
  if (q.infinity) throw Error(ErrorKind::TorsionPoint, "[" + std::to_string(n) + "]P is the identity");
  const mpz_class& den = q.x.get_den();
  if (!mpz_perfect_square_p(den.get_mpz_t()))
    throw Error(ErrorKind::Integrity, "denominator of x([" + std::to_string(n) + "]P) is not a square");
  return sqrt(den);
}

std::vector<std::pair<u64, mpz_class>> EdsSequence::computed_terms() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<u64, mpz_class>> out;
  const u64 top = std::min<u64>(v_.size() - 1, index_cap_);
  for (u64 n = 1; n <= top; ++n) out.emplace_back(n, abs(d_ * v_[n]));
  return out;
}

void EdsSequence::import_term(u64 n, mpz_class value) {
  check_index(n);
  std::unique_lock lock(mutex_);
  if (n < v_.size()) {
    if (abs(d_ * v_[n]) != value)
      throw Error(ErrorKind::Integrity, "cached D_" + std::to_string(n) + " disagrees with the recurrence");
    return;
  }
  imported_[n] = std::move(value);
}

}  // namespace eds
