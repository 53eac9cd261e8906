// Copyright 2026 The ivs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IVS_PAM_HPP
#define IVS_PAM_HPP

#include <concepts>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ivs/rational.hpp"

namespace ivs {

struct NotSummableError : Error {
  using Error::Error;
};
struct AmbiguousSumError : Error {
  using Error::Error;
};

// A partial abelian monoid instance: a basepoint, a decidable summability
// predicate and a partial commutative sum. Instances are small value types;
// operations on labelled structures take the instance as a parameter.
template <class P>
concept PamLike = requires(const P p, const typename P::value_type a,
                           const typename P::value_type b) {
  { p.basepoint() } -> std::convertible_to<typename P::value_type>;
  { p.is_base(a) } -> std::convertible_to<bool>;
  { p.equal(a, b) } -> std::convertible_to<bool>;
  { p.summable(a, b) } -> std::convertible_to<bool>;
  { p.sum(a, b) } -> std::convertible_to<typename P::value_type>;
};

// ---------------------------------------------------------------------------
// Shipped label spaces. All are finite pointed sets with decidable equality.
// ---------------------------------------------------------------------------

// Symbol from a finite alphabet, with "*" reserved for the basepoint.
struct PointedSym {
  std::string name = "*";

  bool is_base() const { return name == "*"; }
  friend bool operator==(const PointedSym&, const PointedSym&) = default;
  friend auto operator<=>(const PointedSym&, const PointedSym&) = default;
};

inline PointedSym sym(std::string s) { return PointedSym{std::move(s)}; }
inline PointedSym sym_base() { return PointedSym{}; }

// X regarded as a PAM via X_2 = X v X: a pair is summable iff one member is
// the basepoint.
struct PointedPam {
  using value_type = PointedSym;
  PointedSym basepoint() const { return sym_base(); }
  bool is_base(const PointedSym& a) const { return a.is_base(); }
  bool equal(const PointedSym& a, const PointedSym& b) const { return a == b; }
  bool summable(const PointedSym& a, const PointedSym& b) const {
    return a.is_base() || b.is_base();
  }
  PointedSym sum(const PointedSym& a, const PointedSym& b) const {
    if (a.is_base()) return b;
    if (b.is_base()) return a;
    throw NotSummableError("PointedPam: " + a.name + " + " + b.name);
  }
};

// {-1, 0, +1} with 1 + (-1) = 0 as the only nontrivial partial sum.
struct SignLabel {
  int8_t value = 0;  // -1, 0, +1

  friend bool operator==(const SignLabel&, const SignLabel&) = default;
  friend auto operator<=>(const SignLabel&, const SignLabel&) = default;
};

struct SignPam {
  using value_type = SignLabel;
  SignLabel basepoint() const { return SignLabel{0}; }
  bool is_base(const SignLabel& a) const { return a.value == 0; }
  bool equal(const SignLabel& a, const SignLabel& b) const { return a == b; }
  bool summable(const SignLabel& a, const SignLabel& b) const {
    return a.value == 0 || b.value == 0 || a.value == -b.value;
  }
  SignLabel sum(const SignLabel& a, const SignLabel& b) const {
    if (!summable(a, b))
      throw NotSummableError("SignPam: " + std::to_string(a.value) + " + " +
                             std::to_string(b.value));
    return SignLabel{static_cast<int8_t>(a.value + b.value == 2    ? 1
                                         : a.value + b.value == -2 ? -1
                                         : a.value + b.value)};
  }
};

// X ^ M for X a pointed set and M the sign PAM. Collapses to the basepoint
// when either component is basic.
struct SmashLabel {
  PointedSym point;
  SignLabel charge;

  bool is_base() const { return point.is_base() || charge.value == 0; }
  friend bool operator==(const SmashLabel& a, const SmashLabel& b) {
    if (a.is_base() && b.is_base()) return true;
    return a.point == b.point && a.charge == b.charge;
  }
};

struct SmashPam {
  using value_type = SmashLabel;
  SmashLabel basepoint() const { return SmashLabel{sym_base(), SignLabel{0}}; }
  bool is_base(const SmashLabel& a) const { return a.is_base(); }
  bool equal(const SmashLabel& a, const SmashLabel& b) const { return a == b; }
  bool summable(const SmashLabel& a, const SmashLabel& b) const {
    if (a.is_base() || b.is_base()) return true;
    return a.point == b.point && SignPam{}.summable(a.charge, b.charge);
  }
  SmashLabel sum(const SmashLabel& a, const SmashLabel& b) const {
    if (a.is_base()) return b.is_base() ? basepoint() : b;
    if (b.is_base()) return a;
    if (a.point != b.point || !SignPam{}.summable(a.charge, b.charge))
      throw NotSummableError("SmashPam: incompatible labels");
    SignLabel c = SignPam{}.sum(a.charge, b.charge);
    if (c.value == 0) return basepoint();
    return SmashLabel{a.point, c};
  }
};

// ---------------------------------------------------------------------------
// Generic operations
// ---------------------------------------------------------------------------

template <PamLike P>
bool is_summable_pair(const P& pam, const typename P::value_type& a,
                      const typename P::value_type& b) {
  return pam.summable(a, b);
}

template <PamLike P>
typename P::value_type pam_sum(const P& pam, const typename P::value_type& a,
                               const typename P::value_type& b) {
  if (!pam.summable(a, b)) throw NotSummableError("pam_sum: pair not summable");
  return pam.sum(a, b);
}

namespace detail {

// Collects every value reachable as a fully-defined left fold over some
// ordering of `items`. States are (partial sum, used mask); memoisation keeps
// the walk polynomial in 2^k rather than k!.
template <PamLike P>
void fold_values(const P& pam, const std::vector<typename P::value_type>& items,
                 std::vector<typename P::value_type>& out) {
  using V = typename P::value_type;
  const std::size_t k = items.size();
  std::vector<std::pair<V, uint32_t>> frontier;
  std::vector<std::pair<V, uint32_t>> next;
  for (std::size_t i = 0; i < k; ++i)
    frontier.push_back({items[i], uint32_t(1) << i});
  auto seen_push = [&pam](std::vector<std::pair<V, uint32_t>>& vec,
                          const V& v, uint32_t mask) {
    for (const auto& [w, m] : vec)
      if (m == mask && pam.equal(w, v)) return;
    vec.push_back({v, mask});
  };
  for (std::size_t step = 1; step < k; ++step) {
    next.clear();
    for (const auto& [v, mask] : frontier) {
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (uint32_t(1) << j)) continue;
        if (!pam.summable(v, items[j])) continue;
        seen_push(next, pam.sum(v, items[j]), mask | (uint32_t(1) << j));
      }
    }
    frontier.swap(next);
  }
  for (const auto& [v, mask] : frontier) {
    bool dup = false;
    for (const auto& w : out)
      if (pam.equal(w, v)) dup = true;
    if (!dup) out.push_back(v);
  }
}

}  // namespace detail

// Sum of a tuple, defined iff some ordering admits a fully-defined left fold.
// On tuples of length <= 6 every successful ordering is checked to agree;
// disagreement raises AmbiguousSumError (it must never fire on the shipped
// instances, which the test suite verifies exhaustively).
template <PamLike P>
typename P::value_type pam_sum_many(
    const P& pam, const std::vector<typename P::value_type>& items) {
  if (items.empty()) return pam.basepoint();
  if (items.size() == 1) return items[0];
  if (items.size() > 20)
    throw Error("pam_sum_many: tuple too long");
  std::vector<typename P::value_type> values;
  detail::fold_values(pam, items, values);
  if (values.empty())
    throw NotSummableError("pam_sum_many: no ordering folds");
  if (items.size() <= 6 && values.size() > 1)
    throw AmbiguousSumError("pam_sum_many: orderings disagree");
  return values[0];
}

template <PamLike P>
bool pam_sum_many_defined(const P& pam,
                          const std::vector<typename P::value_type>& items) {
  if (items.size() <= 1) return true;
  std::vector<typename P::value_type> values;
  detail::fold_values(pam, items, values);
  return !values.empty();
}

}  // namespace ivs

#endif  // IVS_PAM_HPP
