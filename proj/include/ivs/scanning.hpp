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

#ifndef IVS_SCANNING_HPP
#define IVS_SCANNING_HPP

#include <functional>
#include <vector>

#include "ivs/interval.hpp"
#include "ivs/loop.hpp"
#include "ivs/suspension.hpp"

namespace ivs {

// The closed windows N_1 <= ... <= N_2k around the endpoints of a reduced
// representative, inside which the scan ramps through the suspension
// coordinate.
struct ScanWindow {
  Q lo, hi;
  Q endpoint;        // u_i
  Parity parity;     // p_i
  int index;         // i, 1-based
  PointedSym label;  // x_ceil(i/2)
};

struct WindowSystem {
  std::vector<ScanWindow> windows;
};

namespace detail {

struct ScanEnd {
  Q u;
  Parity p;
  PointedSym label;
};

inline std::vector<ScanEnd> scan_ends(const std::vector<IntervalItem>& items) {
  std::vector<ScanEnd> ends;
  ends.reserve(items.size() * 2);
  for (const auto& it : items) {
    ends.push_back({it.iv.left, it.iv.left_parity, it.label});
    ends.push_back({it.iv.right, it.iv.right_parity, it.label});
  }
  return ends;
}

// The ramp value at parameter t for window index i (1-based):
//   [ p_i ( (t - u_i)/eps + (-1)^i / 2 ) ] ^ x
inline SuspensionPoint ramp_value(const ScanEnd& e, int index, const Q& eps,
                                  const Q& t) {
  Q sgn = (index % 2 == 0) ? Q(1, 2) : Q(-1, 2);
  Q coord = Q(e.p) * ((t - e.u) / eps + sgn);
  return susp(coord, e.label);
}

}  // namespace detail

// The three-case min/max formulas applied to the 2k endpoints of the reduced
// representative. Requires eps-separation; every window comes out nonempty
// and ordered.
inline WindowSystem windows(const IntervalClass& c, const Q& eps) {
  if (!eps_separated(c, eps))
    throw NotSeparatedError("windows: class is not eps-separated");
  auto ends = detail::scan_ends(c.items);
  Q half = eps / 2;
  WindowSystem ws;
  const std::size_t n = ends.size();
  for (std::size_t i = 0; i < n; ++i) {
    Q lo = ends[i].u - half;
    Q hi = ends[i].u + half;
    if (i > 0) lo = q_max(lo, ends[i - 1].u + half);
    if (i + 1 < n) hi = q_min(hi, ends[i + 1].u - half);
    if (hi < lo) throw Error("windows: empty window (separation violated)");
    ws.windows.push_back({lo, hi, ends[i].u, ends[i].p,
                          static_cast<int>(i) + 1, ends[i].label});
  }
  for (std::size_t i = 1; i < ws.windows.size(); ++i)
    if (ws.windows[i].lo < ws.windows[i - 1].hi)
      throw Error("windows: windows out of order");
  return ws;
}

// The scan f : [lo, hi] -> Sigma X of an eps-separated class over a finite
// window: ramps on the N_i, constant on the gaps, basepoint outside N_1..N_2k.
// The welding equalities are asserted exactly during assembly.
inline PiecewiseLoop alpha1(const IntervalClass& c, const Q& eps) {
  if (!c.win.finite())
    throw Error("alpha1: window must be bounded");
  const Q dom_lo = *c.win.lo;
  const Q dom_hi = *c.win.hi;
  if (c.items.empty()) return constant_base_loop(dom_lo, dom_hi);
  if (!eps_separated(c, eps))
    throw NotSeparatedError("alpha1: class is not eps-separated");
  auto ends = detail::scan_ends(c.items);
  WindowSystem ws = windows(c, eps);
  std::vector<Q> breaks{dom_lo};
  std::vector<LoopSegment> segs;
  auto push_piece = [&](const Q& to, LoopSegment s) {
    segs.push_back(std::move(s));
    breaks.push_back(to);
  };
  // leading basepoint gap: f equals * at l(N_1)
  const auto& first = ws.windows.front();
  if (!(detail::ramp_value(ends[0], 1, eps, first.lo).is_base()))
    throw Error("alpha1: scan does not start at the basepoint");
  push_piece(first.lo, seg_base());
  for (std::size_t i = 0; i < ws.windows.size(); ++i) {
    const ScanWindow& w = ws.windows[i];
    const detail::ScanEnd& e = ends[i];
    // ramp on N_i
    Q sgn = (w.index % 2 == 0) ? Q(1, 2) : Q(-1, 2);
    Q slope = Q(e.p) / eps;
    Q intercept = Q(e.p) * (sgn - e.u / eps);
    push_piece(w.hi, seg_ramp(slope, intercept, e.label));
    if (i + 1 < ws.windows.size()) {
      // gap constant; the welding equality makes both window values agree
      const ScanWindow& nxt = ws.windows[i + 1];
      SuspensionPoint here = detail::ramp_value(ends[i], w.index, eps, w.hi);
      SuspensionPoint there =
          detail::ramp_value(ends[i + 1], nxt.index, eps, nxt.lo);
      if (!(here == there))
        throw Error("alpha1: welding equality fails at a junction");
      push_piece(nxt.lo, seg_const(here));
    }
  }
  const auto& last = ws.windows.back();
  if (!(detail::ramp_value(ends.back(), last.index, eps, last.hi).is_base()))
    throw Error("alpha1: scan does not end at the basepoint");
  push_piece(dom_hi, seg_base());
  return make_loop(dom_lo, dom_hi, std::move(breaks), std::move(segs));
}

// alpha over (-s, s): the same window formulas on the doubled endpoint list
// of the mirror expansion.
inline PiecewiseLoop alpha_symmetric(const MirrorClass& m, const Q& eps) {
  return alpha1(mirror_expand(m), eps);
}

// p = e_0 after the symmetric scan, one label at a time.
inline SuspensionPoint scan_p_label(const MirrorClass& m, const Q& eps) {
  if (m.empty()) return susp_base();
  return eval_loop(alpha_symmetric(m, eps), Q(0));
}

// A^eps_s membership: the sub-PAM of mirror classes scanning to the basepoint.
inline bool in_A(const MirrorClass& m, const Q& eps) {
  if (m.empty()) return true;
  return !(m.right_items.front().iv.left < eps / 2);
}

// The projection p : tilde-E_n -> C(R^{n-1}, Sigma X).
inline PointConfig<SuspensionPoint> scan_p(const TildeE& e) {
  RawConfig<SuspensionPoint> raw;
  raw.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items)
    raw.items.push_back({pt, scan_p_label(lab, e.eps)});
  return normalize_config(SuspensionPam{}, raw);
}

// The scanning map on tilde-I_n: per-label alpha over (0, s), assembled into
// a loop of configurations.
inline ConfigLoop alpha_n(const TildeI& e) {
  validate_tilde(e);
  ConfigLoop out;
  out.dim = e.config.dim;
  out.lo = Q(0);
  out.hi = e.span;
  for (const auto& [pt, lab] : e.config.items)
    out.items.push_back({pt, alpha1(lab, e.eps)});
  return out;
}

// beta(xi, eps, s) = alpha^eps_(-s,s)(xi) restricted to [0, s]: a Moore path
// from scan_p(e) to the empty configuration.
inline ConfigLoop beta(const TildeE& e) {
  validate_tilde(e);
  ConfigLoop out;
  out.dim = e.config.dim;
  out.lo = Q(0);
  out.hi = e.span;
  for (const auto& [pt, lab] : e.config.items)
    out.items.push_back({pt, restrict_loop(alpha_symmetric(lab, e.eps), Q(0), e.span)});
  return out;
}

// Filtration index of a thickened element with respect to A^eps_s.
inline int tilde_filtration_index(const TildeE& e) {
  int n = 0;
  for (const auto& [pt, lab] : e.config.items)
    if (!in_A(lab, e.eps)) ++n;
  return n;
}

}  // namespace ivs

#endif  // IVS_SCANNING_HPP
