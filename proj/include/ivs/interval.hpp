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

#ifndef IVS_INTERVAL_HPP
#define IVS_INTERVAL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "ivs/config.hpp"
#include "ivs/pam.hpp"
#include "ivs/rational.hpp"

namespace ivs {

struct InvalidSequenceError : Error {
  using Error::Error;
};
struct WindowMismatchError : Error {
  using Error::Error;
};
struct OutOfWindowError : Error {
  using Error::Error;
};
struct NotSeparatedError : Error {
  using Error::Error;
};
struct CollapseConflictError : Error {
  using Error::Error;
};
struct ValidationFailedError : Error {
  using Error::Error;
};

// End parity: +1 means the endpoint belongs to the interval (closed end),
// -1 means it does not (open end).
using Parity = int;

// A quadruple (left, right, leftParity, rightParity). Requires left < right
// when the parities agree; the degenerate (u, u, p, -p) is the empty
// interval whose birth and death drive the rewriting.
struct Interval {
  Q left, right;
  Parity left_parity = 1, right_parity = 1;

  bool degenerate() const { return left == right; }
  Q length() const { return right - left; }

  bool valid() const {
    if (left_parity != 1 && left_parity != -1) return false;
    if (right_parity != 1 && right_parity != -1) return false;
    if (left_parity == right_parity) return left < right;
    return left <= right;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval make_interval(Q l, Q r, Parity pl, Parity pr) {
  return Interval{std::move(l), std::move(r), pl, pr};
}

// J -> -J = (-v, -u, -q, -p).
inline Interval negate(const Interval& j) {
  return Interval{-j.right, -j.left, -j.right_parity, -j.left_parity};
}

inline Interval shift(const Interval& j, const Q& t) {
  return Interval{j.left + t, j.right + t, j.left_parity, j.right_parity};
}

// An open connected window; absent bounds stand for -inf / +inf.
struct Window {
  std::optional<Q> lo, hi;

  bool contains(const Q& u) const {
    if (lo && !(*lo < u)) return false;
    if (hi && !(u < *hi)) return false;
    return true;
  }
  bool finite() const { return lo.has_value() && hi.has_value(); }
  friend bool operator==(const Window&, const Window&) = default;
};

inline Window window(Q lo, Q hi) { return Window{std::move(lo), std::move(hi)}; }
inline Window window_all() { return Window{}; }
inline Window window_right(Q s) { return Window{Q(0), std::move(s)}; }      // (0, s)
inline Window window_symmetric(Q s) { return Window{-s, s}; }                // (-s, s)

struct IntervalItem {
  Interval iv;
  PointedSym label;

  friend bool operator==(const IntervalItem&, const IntervalItem&) = default;
};

inline bool item_order_less(const IntervalItem& a, const IntervalItem& b) {
  if (a.iv.left != b.iv.left) return a.iv.left < b.iv.left;
  if (a.iv.right != b.iv.right) return a.iv.right < b.iv.right;
  if (a.iv.left_parity != b.iv.left_parity) return a.iv.left_parity < b.iv.left_parity;
  if (a.iv.right_parity != b.iv.right_parity) return a.iv.right_parity < b.iv.right_parity;
  return a.label < b.label;
}

// A representative: ordered labelled intervals in a window, possibly with
// basepoint labels and degenerate members.
struct IntervalSeq {
  Window win;
  std::vector<IntervalItem> items;
};

// Conditions (1)-(3): weakly ordered, and a common endpoint forces equal
// labels and opposite parities at the junction. Also checks membership of all
// endpoints in the open window.
inline bool validate_sequence(const IntervalSeq& seq) {
  for (const auto& it : seq.items) {
    if (!it.iv.valid()) return false;
    if (!seq.win.contains(it.iv.left) || !seq.win.contains(it.iv.right)) return false;
  }
  for (std::size_t i = 1; i < seq.items.size(); ++i) {
    const auto& a = seq.items[i - 1];
    const auto& b = seq.items[i];
    if (b.iv.left < a.iv.right) return false;
    if (a.iv.right == b.iv.left) {
      if (a.label != b.label) return false;
      if (a.iv.right_parity == b.iv.left_parity) return false;
    }
  }
  return true;
}

namespace detail {

// One pass of cutting-and-pasting: merges every touching pair. Touching pairs
// in a valid sequence have equal labels and opposite junction parities, so
// pasting is always applicable; collapsed items coming out of pushforwards are
// absorbed by the same rule.
inline bool paste_pass(std::vector<IntervalItem>& items) {
  bool changed = false;
  std::vector<IntervalItem> out;
  for (auto& it : items) {
    while (true) {
      if (out.empty()) break;
      IntervalItem& top = out.back();
      if (top.iv.right == it.iv.left && top.label == it.label &&
          top.iv.right_parity != it.iv.left_parity) {
        it = IntervalItem{Interval{top.iv.left, it.iv.right, top.iv.left_parity,
                                   it.iv.right_parity},
                          it.label};
        out.pop_back();
        changed = true;
        continue;
      }
      break;
    }
    out.push_back(it);
  }
  items.swap(out);
  return changed;
}

inline bool removal_pass(std::vector<IntervalItem>& items) {
  std::size_t before = items.size();
  std::erase_if(items, [](const IntervalItem& it) {
    return it.label.is_base() || it.iv.degenerate();
  });
  return items.size() != before;
}

}  // namespace detail

// An element of I_1(X)_U stored as its reduced representative: no basepoint
// labels, no degenerate intervals, strictly increasing.
struct IntervalClass {
  Window win;
  std::vector<IntervalItem> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
  friend bool operator==(const IntervalClass&, const IntervalClass&) = default;
};

inline bool is_reduced(const IntervalClass& c) {
  IntervalSeq seq{c.win, c.items};
  if (!validate_sequence(seq)) return false;
  for (const auto& it : c.items)
    if (it.label.is_base() || it.iv.degenerate()) return false;
  for (std::size_t i = 1; i < c.items.size(); ++i)
    if (!(c.items[i - 1].iv.right < c.items[i].iv.left)) return false;
  return true;
}

// Rewrites a valid sequence to its normal form. Pasting strictly reduces the
// item count and removal of a basepoint-labelled or degenerate item of a valid
// sequence always leaves a valid sequence, so the loop terminates; uniqueness
// of the result is what the BFS oracle audits.
inline IntervalClass reduce(const IntervalSeq& seq) {
  if (!validate_sequence(seq))
    throw InvalidSequenceError("reduce: input violates the adjacency conditions");
  std::vector<IntervalItem> items = seq.items;
  bool changed = true;
  while (changed) {
    changed = detail::paste_pass(items);
    changed = detail::removal_pass(items) || changed;
  }
  IntervalClass out{seq.win, std::move(items)};
  if (!is_reduced(out)) throw InvalidSequenceError("reduce: normal form invalid");
  return out;
}

inline IntervalClass empty_class(Window w) { return IntervalClass{std::move(w), {}}; }

inline IntervalClass make_class(Window w, std::vector<IntervalItem> items) {
  return reduce(IntervalSeq{std::move(w), std::move(items)});
}

inline bool class_equals(const IntervalClass& a, const IntervalClass& b) {
  if (a.win != b.win)
    throw WindowMismatchError("class_equals: classes live in different windows");
  return a.items == b.items;
}

// Partial sum: the sorted union of the reduced representatives, when it is a
// valid sequence, reduced. Empty class is the unit.
inline std::optional<IntervalClass> try_class_sum(const IntervalClass& a,
                                                  const IntervalClass& b) {
  if (a.win != b.win) return std::nullopt;
  std::vector<IntervalItem> merged;
  merged.reserve(a.items.size() + b.items.size());
  std::merge(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
             std::back_inserter(merged), item_order_less);
  IntervalSeq seq{a.win, std::move(merged)};
  if (!validate_sequence(seq)) return std::nullopt;
  return reduce(seq);
}

inline IntervalClass class_sum(const IntervalClass& a, const IntervalClass& b) {
  if (a.win != b.win)
    throw WindowMismatchError("class_sum: classes live in different windows");
  auto r = try_class_sum(a, b);
  if (!r) throw NotSummableError("class_sum: union violates the adjacency conditions");
  return *r;
}

namespace detail {

struct EndRef {
  Q pos;
  Parity parity;
  std::size_t item;
};

inline std::vector<EndRef> endpoint_list(const std::vector<IntervalItem>& items) {
  std::vector<EndRef> ends;
  ends.reserve(items.size() * 2);
  for (std::size_t i = 0; i < items.size(); ++i) {
    ends.push_back({items[i].iv.left, items[i].iv.left_parity, i});
    ends.push_back({items[i].iv.right, items[i].iv.right_parity, i});
  }
  return ends;
}

inline bool eps_separated_items(const std::vector<IntervalItem>& items,
                                const Window& win, const Q& eps) {
  Q half = eps / 2;
  for (const auto& it : items) {
    if (win.lo && !(*win.lo + half < it.iv.left)) return false;
    if (win.hi && !(it.iv.right < *win.hi - half)) return false;
  }
  auto ends = endpoint_list(items);
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j)
      if (ends[i].parity == ends[j].parity &&
          q_abs(ends[i].pos - ends[j].pos) < eps)
        return false;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i].label == items[j].label) continue;
      Q gap = q_max(items[i].iv.left - items[j].iv.right,
                    items[j].iv.left - items[i].iv.right);
      if (gap < eps) return false;
    }
  return true;
}

}  // namespace detail

// Separation of a representative: (1) endpoints strictly inside the
// window shrunk by eps/2, (2) same-parity ends at distance >= eps, (3)
// distinct-label intervals at distance >= eps.
inline bool eps_separated(const IntervalSeq& seq, const Q& eps) {
  if (!(Q(0) < eps)) throw Error("eps_separated: eps must be positive");
  return detail::eps_separated_items(seq.items, seq.win, eps);
}

inline bool eps_separated(const IntervalClass& c, const Q& eps) {
  if (!(Q(0) < eps)) throw Error("eps_separated: eps must be positive");
  return detail::eps_separated_items(c.items, c.win, eps);
}

inline IntervalClass translate(const IntervalClass& c, const Q& t,
                               Window new_window) {
  IntervalClass out{std::move(new_window), {}};
  out.items.reserve(c.items.size());
  for (const auto& it : c.items) {
    Interval j = shift(it.iv, t);
    if (!out.win.contains(j.left) || !out.win.contains(j.right))
      throw OutOfWindowError("translate: endpoint leaves the window");
    out.items.push_back({j, it.label});
  }
  return out;
}

// The involution (-1) . ((J_1,x_1),...,(J_k,x_k)) on a symmetric window.
inline IntervalClass involute(const IntervalClass& c) {
  bool symmetric = (!c.win.lo && !c.win.hi) ||
                   (c.win.lo && c.win.hi && *c.win.lo == -*c.win.hi);
  if (!symmetric)
    throw WindowMismatchError("involute: window is not symmetric about 0");
  IntervalClass out{c.win, {}};
  out.items.reserve(c.items.size());
  for (auto it = c.items.rbegin(); it != c.items.rend(); ++it)
    out.items.push_back({negate(it->iv), it->label});
  return out;
}

// ---------------------------------------------------------------------------
// Mirror classes: elements of E_1(X)_s
// ---------------------------------------------------------------------------

// An involution-fixed class over (-s, s), stored as the right half of an
// m(...) representative. A central interval (-r, r, -q, q) is stored split at
// the origin with left parity -1; equality and sums go through the expansion,
// which is canonical.
struct MirrorClass {
  Q half_width;
  std::vector<IntervalItem> right_items;

  bool empty() const { return right_items.empty(); }
  friend bool operator==(const MirrorClass&, const MirrorClass&) = default;
};

// m(...) written out: mirrored items, the right items, and the central paste
// when l(J_1) = 0.
inline IntervalClass mirror_expand(const MirrorClass& m) {
  std::vector<IntervalItem> items;
  items.reserve(m.right_items.size() * 2);
  for (auto it = m.right_items.rbegin(); it != m.right_items.rend(); ++it)
    items.push_back({negate(it->iv), it->label});
  for (const auto& it : m.right_items) items.push_back(it);
  IntervalSeq seq{window_symmetric(m.half_width), std::move(items)};
  if (!validate_sequence(seq))
    throw InvalidSequenceError("mirror_expand: expansion not a valid sequence");
  return reduce(seq);
}

// Rebuilds the canonical right-half representation from an involution-fixed
// class over (-s, s).
inline MirrorClass mirror_from_expansion(const IntervalClass& c) {
  if (!c.win.finite() || !(*c.win.lo == -*c.win.hi))
    throw WindowMismatchError("mirror_from_expansion: window not (-s, s)");
  if (!(involute(c) == c))
    throw ValidationFailedError("mirror_from_expansion: class not involution-fixed");
  MirrorClass out{*c.win.hi, {}};
  for (const auto& it : c.items) {
    if (it.iv.right <= Q(0)) continue;
    if (it.iv.left < Q(0)) {
      // central (-r, r, -q, q): keep the right half, split parity -1
      out.right_items.push_back(
          {Interval{Q(0), it.iv.right, -1, it.iv.right_parity}, it.label});
    } else {
      out.right_items.push_back(it);
    }
  }
  return out;
}

inline MirrorClass make_mirror(Q half_width, std::vector<IntervalItem> right_items) {
  MirrorClass raw{std::move(half_width), std::move(right_items)};
  return mirror_from_expansion(mirror_expand(raw));
}

inline bool mirror_equals(const MirrorClass& a, const MirrorClass& b) {
  if (a.half_width != b.half_width)
    throw WindowMismatchError("mirror_equals: half widths differ");
  return a.right_items == b.right_items;
}

// The embedding I_1(X)_s -> E_1(X)_s.
inline MirrorClass mirror_embed(const IntervalClass& c) {
  if (!c.win.finite() || !(*c.win.lo == Q(0)))
    throw WindowMismatchError("mirror_embed: window must be (0, s)");
  return MirrorClass{*c.win.hi, c.items};
}

inline std::optional<MirrorClass> try_mirror_sum(const MirrorClass& a,
                                                 const MirrorClass& b) {
  if (a.half_width != b.half_width) return std::nullopt;
  auto s = try_class_sum(mirror_expand(a), mirror_expand(b));
  if (!s) return std::nullopt;
  return mirror_from_expansion(*s);
}

inline MirrorClass mirror_sum(const MirrorClass& a, const MirrorClass& b) {
  auto r = try_mirror_sum(a, b);
  if (!r) throw NotSummableError("mirror_sum: not a summable pair");
  return *r;
}

inline bool mirror_eps_separated(const MirrorClass& m, const Q& eps) {
  return eps_separated(mirror_expand(m), eps);
}

// Widens the ambient window. Containment of (0,s) in (0,s') and of (-s,s) in
// (-s',s') for s <= s'; separation margins are the caller's business.
inline IntervalClass widen(const IntervalClass& c, Window w) {
  IntervalClass out{std::move(w), c.items};
  for (const auto& it : out.items)
    if (!out.win.contains(it.iv.left) || !out.win.contains(it.iv.right))
      throw OutOfWindowError("widen: item outside the new window");
  return out;
}

inline MirrorClass mirror_widen(const MirrorClass& m, Q half_width) {
  if (half_width < m.half_width)
    throw OutOfWindowError("mirror_widen: cannot shrink");
  return MirrorClass{std::move(half_width), m.right_items};
}

// ---------------------------------------------------------------------------
// PAM instances with class labels, and the thickened elements
// ---------------------------------------------------------------------------

struct IntervalClassPam {
  using value_type = IntervalClass;
  Window win;

  IntervalClass basepoint() const { return empty_class(win); }
  bool is_base(const IntervalClass& c) const { return c.empty(); }
  bool equal(const IntervalClass& a, const IntervalClass& b) const {
    return a.win == b.win && a.items == b.items;
  }
  bool summable(const IntervalClass& a, const IntervalClass& b) const {
    return try_class_sum(a, b).has_value();
  }
  IntervalClass sum(const IntervalClass& a, const IntervalClass& b) const {
    return class_sum(a, b);
  }
};

struct MirrorClassPam {
  using value_type = MirrorClass;
  Q half_width;

  MirrorClass basepoint() const { return MirrorClass{half_width, {}}; }
  bool is_base(const MirrorClass& m) const { return m.empty(); }
  bool equal(const MirrorClass& a, const MirrorClass& b) const {
    return a.half_width == b.half_width && a.right_items == b.right_items;
  }
  bool summable(const MirrorClass& a, const MirrorClass& b) const {
    return try_mirror_sum(a, b).has_value();
  }
  MirrorClass sum(const MirrorClass& a, const MirrorClass& b) const {
    return mirror_sum(a, b);
  }
};

// An element of the thickened space over (0, s): a configuration of
// eps-separated interval classes together with the thickening data.
struct TildeI {
  PointConfig<IntervalClass> config;
  Q eps;
  Q span;  // window (0, span) for every label
};

// Same over (-s, s) with mirror-class labels.
struct TildeE {
  PointConfig<MirrorClass> config;
  Q eps;
  Q span;  // half width
};

inline void validate_tilde(const TildeI& e) {
  if (!(Q(0) < e.eps) || Q(1) < e.eps)
    throw ValidationFailedError("tilde: eps outside (0, 1]");
  if (e.span < Q(0)) throw ValidationFailedError("tilde: negative span");
  for (const auto& [pt, lab] : e.config.items) {
    if (!(lab.win == window_right(e.span)))
      throw ValidationFailedError("tilde: label window mismatch");
    if (!eps_separated(lab, e.eps))
      throw ValidationFailedError("tilde: label not eps-separated");
  }
}

inline void validate_tilde(const TildeE& e) {
  if (!(Q(0) < e.eps) || Q(1) < e.eps)
    throw ValidationFailedError("tilde: eps outside (0, 1]");
  if (e.span < Q(0)) throw ValidationFailedError("tilde: negative span");
  for (const auto& [pt, lab] : e.config.items) {
    if (!(lab.half_width == e.span))
      throw ValidationFailedError("tilde: label half width mismatch");
    if (!mirror_eps_separated(lab, e.eps))
      throw ValidationFailedError("tilde: label not eps-separated");
  }
}

// The embedding i : tilde-I_n -> tilde-E_n, mirror-embedding every label.
inline TildeE tilde_embed(const TildeI& e) {
  TildeE out;
  out.eps = e.eps;
  out.span = e.span;
  out.config.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items)
    out.config.items.push_back({pt, mirror_embed(lab)});
  return out;
}

}  // namespace ivs

#endif  // IVS_INTERVAL_HPP
