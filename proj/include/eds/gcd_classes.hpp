// SPDX-License-Identifier: Apache-2.0
//
// The classes A_k = {n : gcd(n, W_n) = k} and
// B_k = {n : k | g(n), every prime of g(n) divides k}.
//
// When A_k is nonempty it is l(k) times the set of integers divisible by no
// element of
//     L_k = {p : p | k} u {l(kp) / l(k) : p prime, p does not divide k}.
#pragma once

#include <cstdint>
#include <vector>

#include "eds/apparition.hpp"
#include "eds/arith.hpp"

namespace eds {

struct GcdClassSpec {
  u64 k = 1;
  u64 l_of_k = 1;
  bool nonempty = false;
  /// Elements of L_k that are <= bound, sorted and deduplicated.
  std::vector<u64> exclusion_elements;
  u64 bound = 0;
};

/// k == g(l(k)).
bool is_class_nonempty(ApparitionCache& cache, u64 k);

/// Elements of L_k up to `bound`. Throws ClassEmpty if A_k is empty.
std::vector<u64> exclusion_set(ApparitionCache& cache, u64 k, u64 bound);

GcdClassSpec describe_class(ApparitionCache& cache, u64 k, u64 bound);

/// {l(k) m <= x : m divisible by no element of L_k}. Throws ClassEmpty if the
/// class is empty.
std::vector<u64> class_members_structural(ApparitionCache& cache, u64 k, u64 x);

/// {n <= x : g(n) = k} by evaluating g directly. x is capped by the index cap.
std::vector<u64> class_members_direct(const EdsSequence& seq, u64 k, u64 x);

/// {n <= x : k | g(n) and rad(g(n)) | k}, directly.
std::vector<u64> b_set_members_direct(const EdsSequence& seq, u64 k, u64 x);

/// #B_k(x) = sum over squarefree d <= x coprime to k of mu(d) floor(x / l(dk)).
std::int64_t b_set_count_formula(ApparitionCache& cache, u64 k, u64 x);

}  // namespace eds
