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

#ifndef IVS_CONFIG_HPP
#define IVS_CONFIG_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ivs/pam.hpp"
#include "ivs/rational.hpp"

namespace ivs {

struct InvalidRawError : Error {
  using Error::Error;
};

using QPoint = std::vector<Q>;

inline bool point_less(const QPoint& a, const QPoint& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// A finite labelled tuple in Q^d x M, prior to taking the quotient. Coincident
// points must carry a summable label tuple.
template <class M>
struct RawConfig {
  int dim = 1;
  std::vector<std::pair<QPoint, M>> items;
};

// Normal form of a labelled configuration: basepoint labels deleted,
// coincident points merged by the partial sum, items sorted lexicographically
// by coordinates. Equality of classes is equality of normal forms.
template <class M>
struct PointConfig {
  int dim = 1;
  std::vector<std::pair<QPoint, M>> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
};

template <PamLike P>
bool validate_raw(const P& pam, const RawConfig<typename P::value_type>& raw) {
  for (const auto& [pt, lab] : raw.items)
    if (static_cast<int>(pt.size()) != raw.dim) return false;
  auto sorted = raw.items;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    std::vector<typename P::value_type> group;
    while (j < sorted.size() && sorted[j].first == sorted[i].first)
      group.push_back(sorted[j++].second);
    if (!pam_sum_many_defined(pam, group)) return false;
    i = j;
  }
  return true;
}

// Quotient map: applies R1 (delete basepoints), R3 (merge coincident points by
// the PAM sum) and R2 (canonical order).
template <PamLike P>
PointConfig<typename P::value_type> normalize_config(
    const P& pam, const RawConfig<typename P::value_type>& raw) {
  using M = typename P::value_type;
  for (const auto& [pt, lab] : raw.items)
    if (static_cast<int>(pt.size()) != raw.dim)
      throw InvalidRawError("normalize_config: point dimension mismatch");
  auto sorted = raw.items;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  PointConfig<M> out;
  out.dim = raw.dim;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    std::vector<M> group;
    while (j < sorted.size() && sorted[j].first == sorted[i].first)
      group.push_back(sorted[j++].second);
    if (!pam_sum_many_defined(pam, group))
      throw InvalidRawError("normalize_config: coincident labels not summable");
    M merged = group.size() == 1 ? group[0] : pam_sum_many(pam, group);
    if (!pam.is_base(merged)) out.items.push_back({sorted[i].first, merged});
    i = j;
  }
  return out;
}

template <PamLike P>
PointConfig<typename P::value_type> make_config(
    const P& pam, int dim,
    std::vector<std::pair<QPoint, typename P::value_type>> items) {
  RawConfig<typename P::value_type> raw{dim, std::move(items)};
  return normalize_config(pam, raw);
}

template <PamLike P>
bool config_equals(const P& pam, const PointConfig<typename P::value_type>& a,
                   const PointConfig<typename P::value_type>& b) {
  if (a.dim != b.dim || a.items.size() != b.items.size()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (a.items[i].first != b.items[i].first) return false;
    if (!pam.equal(a.items[i].second, b.items[i].second)) return false;
  }
  return true;
}

// The configuration-space PAM: two classes are summable iff at every shared
// point the labels form a summable pair. (The definition via padded
// representatives is equivalent; see the config tests.)
template <PamLike P>
std::optional<PointConfig<typename P::value_type>> try_config_sum(
    const P& pam, const PointConfig<typename P::value_type>& a,
    const PointConfig<typename P::value_type>& b) {
  using M = typename P::value_type;
  if (a.dim != b.dim) return std::nullopt;
  std::vector<std::pair<QPoint, M>> merged;
  std::size_t i = 0, j = 0;
  while (i < a.items.size() && j < b.items.size()) {
    if (a.items[i].first == b.items[j].first) {
      const M& x = a.items[i].second;
      const M& y = b.items[j].second;
      if (!pam.summable(x, y)) return std::nullopt;
      M s = pam.sum(x, y);
      if (!pam.is_base(s)) merged.push_back({a.items[i].first, s});
      ++i, ++j;
    } else if (point_less(a.items[i].first, b.items[j].first)) {
      merged.push_back(a.items[i++]);
    } else {
      merged.push_back(b.items[j++]);
    }
  }
  while (i < a.items.size()) merged.push_back(a.items[i++]);
  while (j < b.items.size()) merged.push_back(b.items[j++]);
  PointConfig<M> out;
  out.dim = a.dim;
  out.items = std::move(merged);
  return out;
}

template <PamLike P>
PointConfig<typename P::value_type> config_sum(
    const P& pam, const PointConfig<typename P::value_type>& a,
    const PointConfig<typename P::value_type>& b) {
  auto r = try_config_sum(pam, a, b);
  if (!r) throw NotSummableError("config_sum: not a summable pair");
  return *r;
}

// Functorial action on labels. `f` must send summable pairs to summable
// pairs; the result is renormalized (labels may land on the basepoint).
template <PamLike PN, class M, class F>
PointConfig<typename PN::value_type> map_labels(
    const PN& pam_out, const F& f, const PointConfig<M>& cfg) {
  RawConfig<typename PN::value_type> raw;
  raw.dim = cfg.dim;
  for (const auto& [pt, lab] : cfg.items) raw.items.push_back({pt, f(lab)});
  return normalize_config(pam_out, raw);
}

// Least j with the configuration in F_j^A: the number of labels outside A.
// `in_a` must contain the basepoint and cut out a sub-PAM.
template <class M>
int filtration_index(const PointConfig<M>& cfg,
                     const std::function<bool(const M&)>& in_a) {
  int n = 0;
  for (const auto& [pt, lab] : cfg.items)
    if (!in_a(lab)) ++n;
  return n;
}

}  // namespace ivs

#endif  // IVS_CONFIG_HPP
