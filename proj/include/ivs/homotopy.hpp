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

#ifndef IVS_HOMOTOPY_HPP
#define IVS_HOMOTOPY_HPP

#include <functional>
#include <vector>

#include "ivs/interval.hpp"
#include "ivs/scanning.hpp"
#include "ivs/suspension.hpp"

namespace ivs {

// ---------------------------------------------------------------------------
// Piecewise-affine nondecreasing collapses with slopes in {0, 1}
// ---------------------------------------------------------------------------

// Stored as nodes (u_i, v_i); slope-1 extension below the first node and
// above the last, linear interpolation in between. Only slopes 0 and 1 are
// admitted, so pushing intervals forward can merge endpoints but never
// reorder or stretch them.
struct MonotoneCollapse {
  std::vector<std::pair<Q, Q>> nodes;

  Q operator()(const Q& u) const {
    if (nodes.empty()) return u;
    if (u <= nodes.front().first)
      return nodes.front().second + (u - nodes.front().first);
    if (u >= nodes.back().first)
      return nodes.back().second + (u - nodes.back().first);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      if (u <= nodes[i].first) {
        const auto& [a, fa] = nodes[i - 1];
        const auto& [b, fb] = nodes[i];
        if (fa == fb) return fa;          // plateau
        return fa + (u - a);              // slope 1
      }
    }
    return u;
  }
};

inline MonotoneCollapse collapse_identity() { return MonotoneCollapse{}; }

inline bool validate_collapse(const MonotoneCollapse& m) {
  for (std::size_t i = 1; i < m.nodes.size(); ++i) {
    const auto& [a, fa] = m.nodes[i - 1];
    const auto& [b, fb] = m.nodes[i];
    if (!(a < b) || fb < fa) return false;
    if (!(fb == fa || fb - fa == b - a)) return false;  // slope 0 or 1 only
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pushforward
// ---------------------------------------------------------------------------

namespace detail {

// Maps endpoints and cleans up: touching same-label pairs with opposite
// junction parities are pasted first (this absorbs intervals that a plateau
// collapsed to a point), then degenerate items are dropped. A collapsed item
// whose quadruple is not absorbable is a CollapseConflict, which the shipped
// homotopies never produce (the audits check this).
inline std::vector<IntervalItem> push_items(const MonotoneCollapse& h,
                                            const std::vector<IntervalItem>& items) {
  std::vector<IntervalItem> out;
  out.reserve(items.size());
  for (const auto& it : items)
    out.push_back({Interval{h(it.iv.left), h(it.iv.right), it.iv.left_parity,
                            it.iv.right_parity},
                   it.label});
  bool changed = true;
  while (changed) {
    changed = paste_pass(out);
    std::size_t before = out.size();
    std::erase_if(out, [](const IntervalItem& it) {
      return it.iv.degenerate() && it.iv.left_parity != it.iv.right_parity;
    });
    changed = (out.size() != before) || changed;
  }
  for (const auto& it : out)
    if (!it.iv.valid())
      throw CollapseConflictError("pushforward: interval collapsed onto itself");
  return out;
}

}  // namespace detail

// h_t* on a one-sided class. The window is the caller's; endpoints must land
// strictly inside it.
inline IntervalClass pushforward(const MonotoneCollapse& h, const IntervalClass& c,
                                 Window new_window) {
  auto items = detail::push_items(h, c.items);
  IntervalSeq seq{std::move(new_window), std::move(items)};
  if (!validate_sequence(seq))
    throw CollapseConflictError("pushforward: image is not a valid sequence");
  return reduce(seq);
}

// Mirror-symmetric pushforward: h is applied to the right items (h(0) must be
// 0 for this to respect the involution), and the canonical representation is
// rebuilt through the expansion.
inline MirrorClass pushforward(const MonotoneCollapse& h, const MirrorClass& m,
                               Q new_half_width) {
  if (!(h(Q(0)) == Q(0)))
    throw Error("pushforward: collapse must fix the origin");
  auto items = detail::push_items(h, m.right_items);
  MirrorClass raw{std::move(new_half_width), std::move(items)};
  return mirror_from_expansion(mirror_expand(raw));
}

// ---------------------------------------------------------------------------
// The contraction of E_1(X)_1
// ---------------------------------------------------------------------------

// h_t with plateau [-t, t] (right half), preceded by the drop of every item
// with r(J_i) <= t. H_0 = id and H_1 = empty.
inline MirrorClass contract_H(const MirrorClass& m, const Q& t) {
  if (t < Q(0) || Q(1) < t) throw Error("contract_H: t outside [0, 1]");
  if (!(m.half_width == Q(1)))
    throw WindowMismatchError("contract_H: defined on E_1(X)_1");
  std::vector<IntervalItem> kept;
  for (const auto& it : m.right_items)
    if (t < it.iv.right) kept.push_back(it);
  MonotoneCollapse h{{{Q(0), Q(0)}, {t, Q(0)}}};
  if (t == Q(0)) h = collapse_identity();
  auto items = detail::push_items(h, kept);
  MirrorClass raw{Q(1), std::move(items)};
  return mirror_from_expansion(mirror_expand(raw));
}

// ---------------------------------------------------------------------------
// phi, the section sigma, psi and Phi
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<IntervalItem> shift_items(const std::vector<IntervalItem>& items,
                                             const Q& t) {
  std::vector<IntervalItem> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back({shift(it.iv, t), it.label});
  return out;
}

}  // namespace detail

// phi^eps_s : E^eps_1(X)_s -> I^eps_1(X)_{s+2eps}, label level. Branch on
// l(J_1) >= eps/2; otherwise K = (eps - l, 2eps - l, -1, -p_L(J_1)) is
// prepended before the translation.
inline IntervalClass phi_label(const MirrorClass& m, const Q& eps, const Q& span) {
  Window w = window_right(span + 2 * eps);
  if (m.empty()) return empty_class(w);
  const IntervalItem& j1 = m.right_items.front();
  std::vector<IntervalItem> items;
  if (!(j1.iv.left < eps / 2)) {
    items = detail::shift_items(m.right_items, 2 * eps);
  } else {
    Q l = j1.iv.left;
    Interval k{eps - l, 2 * eps - l, -1, -j1.iv.left_parity};
    items.push_back({k, j1.label});
    auto rest = detail::shift_items(m.right_items, 2 * eps);
    items.insert(items.end(), rest.begin(), rest.end());
  }
  IntervalSeq seq{w, std::move(items)};
  if (!validate_sequence(seq))
    throw ValidationFailedError("phi: image is not a valid sequence");
  return reduce(seq);
}

// phi : tilde-E -> tilde-I, labelwise, output (., eps, s + 2eps).
inline TildeI phi(const TildeE& e) {
  validate_tilde(e);
  TildeI out;
  out.eps = e.eps;
  out.span = e.span + 2 * e.eps;
  out.config.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items) {
    IntervalClass c = phi_label(lab, e.eps, e.span);
    if (!eps_separated(c, e.eps))
      throw ValidationFailedError("phi: image label not eps-separated");
    out.config.items.push_back({pt, c});
  }
  return out;
}

// s^eps(y) = [m(L, x)] with L = (|c| eps/2, (|c|/2 + 1) eps, p, 1) and
// p = -sign(c); the tie at c = 0 is resolved to p = +1 (either choice gives
// the same class).
inline MirrorClass section_label(const SuspensionPoint& y, const Q& eps) {
  if (y.is_base()) return MirrorClass{2 * eps, {}};
  Q a = q_abs(y.coord);
  Parity p = y.coord == Q(0) ? 1 : -q_sign(y.coord);
  Interval L{a * eps / 2, (a / 2 + 1) * eps, p, 1};
  return make_mirror(2 * eps, {{L, y.label}});
}

// sigma^eps on a configuration of suspension points.
inline PointConfig<MirrorClass> section_sigma(const PointConfig<SuspensionPoint>& z,
                                              const Q& eps) {
  PointConfig<MirrorClass> out;
  out.dim = z.dim;
  for (const auto& [pt, y] : z.items) {
    MirrorClass m = section_label(y, eps);
    if (!m.empty()) out.items.push_back({pt, m});
  }
  return out;
}

// psi(z, (xi, eps, s)) = (sigma^eps(z) + m(T_{2eps}(xi)), eps, s + 2eps).
inline TildeE psi(const PointConfig<SuspensionPoint>& z, const TildeI& e) {
  validate_tilde(e);
  Q s2 = e.span + 2 * e.eps;
  MirrorClassPam pam{s2};
  PointConfig<MirrorClass> translated;
  translated.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items) {
    IntervalClass moved = translate(lab, 2 * e.eps, window_right(s2));
    translated.items.push_back({pt, mirror_embed(moved)});
  }
  PointConfig<MirrorClass> sect = section_sigma(z, e.eps);
  for (auto& [pt, lab] : sect.items) lab = mirror_widen(lab, s2);
  auto sum = try_config_sum(pam, sect, translated);
  if (!sum) throw NotSummableError("psi: section collides with the translate");
  TildeE out{std::move(*sum), e.eps, s2};
  validate_tilde(out);
  return out;
}

// Psi^eps_s at the label level: the label part of psi(p(xi), phi(xi)), which
// is its defining property. The inner interval is the section interval of
// the scanned value; whenever l(J_1) > 0 this is exactly the displayed
// (l(J_1), l(J_1) + eps, p_L(J_1), 1). For a central first interval with
// r(J_1) < eps/2 the scanned value is [q(1 - 2 r(J_1)/eps)] ^ x rather than
// the generic [-2 p_L l(J_1)/eps] ^ x, and the displayed interval would land
// in the wrong fiber.
inline MirrorClass Phi_label(const MirrorClass& m, const Q& eps, const Q& span) {
  Q s4 = span + 4 * eps;
  if (m.empty()) return MirrorClass{s4, {}};
  const IntervalItem& j1 = m.right_items.front();
  std::vector<IntervalItem> items;
  SuspensionPoint y = scan_p_label(m, eps);
  if (y.is_base()) {
    items = detail::shift_items(m.right_items, 4 * eps);
  } else {
    Q a = q_abs(y.coord);
    Parity p = y.coord == Q(0) ? 1 : -q_sign(y.coord);
    Interval L{a * eps / 2, (a / 2 + 1) * eps, p, 1};
    Q l = j1.iv.left;
    Interval K{3 * eps - l, 4 * eps - l, -1, -j1.iv.left_parity};
    items.push_back({L, j1.label});
    items.push_back({K, j1.label});
    auto rest = detail::shift_items(m.right_items, 4 * eps);
    items.insert(items.end(), rest.begin(), rest.end());
  }
  return make_mirror(s4, std::move(items));
}

// The label family on which the four-phase flow returns to the identity
// inside the separated space: everything except central first intervals with
// r(J_1) < eps/2 (the scan of those sits near the basepoint, which the
// generic formulas do not see). The audits log these labels as witnesses.
inline bool small_central_label(const MirrorClass& m, const Q& eps) {
  if (m.empty()) return false;
  const Interval& j1 = m.right_items.front().iv;
  return j1.left == Q(0) && j1.right < eps / 2;
}

inline bool has_small_central(const TildeE& e) {
  for (const auto& [pt, lab] : e.config.items)
    if (small_central_label(lab, e.eps)) return true;
  return false;
}

// Psi^eps_s = psi after (p x phi): tilde-E -> tilde-E with span s + 4eps.
inline TildeE Phi(const TildeE& e) {
  validate_tilde(e);
  TildeE out;
  out.eps = e.eps;
  out.span = e.span + 4 * e.eps;
  out.config.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items) {
    MirrorClass m = Phi_label(lab, e.eps, e.span);
    if (!mirror_eps_separated(m, e.eps))
      throw ValidationFailedError("Phi: image label not eps-separated");
    out.config.items.push_back({pt, m});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The four-phase deformation of Psi to the identity
// ---------------------------------------------------------------------------

// h^eps_t on [0, infinity), exactly as displayed; h^eps_0 = id and h^eps_1
// shifts by 4eps above the plateau.
inline MonotoneCollapse fourphase_collapse(const Q& eps, const Q& t) {
  if (t < Q(0) || Q(1) < t) throw Error("fourphase_collapse: t outside [0, 1]");
  if (t == Q(0)) return collapse_identity();
  MonotoneCollapse h;
  if (t <= Q(1, 4)) {
    Q a = (Q(2) - 4 * t) * eps;
    Q b = (Q(2) + 4 * t) * eps;
    h.nodes = {{a, a}, {b, a}};
  } else if (t <= Q(1, 2)) {
    Q p2lo = (Q(9, 2) - 2 * t) * eps;
    Q p2hi = (Q(7, 2) + 2 * t) * eps;
    Q p2val = (Q(5, 2) - 2 * t) * eps;
    h.nodes = {{eps, eps}, {3 * eps, eps}, {p2lo, p2val}, {p2hi, p2val}};
  } else if (t <= Q(3, 4)) {
    Q p2lo = (Q(9, 2) - 2 * t) * eps;
    Q p2hi = (Q(11, 2) - 2 * t) * eps;
    Q p2val = (Q(5, 2) - 2 * t) * eps;
    if (p2lo <= 3 * eps) {
      // t = 3/4: the two plateaus meet
      h.nodes = {{eps, eps}, {p2hi, p2val}};
    } else {
      h.nodes = {{eps, eps}, {3 * eps, eps}, {p2lo, p2val}, {p2hi, p2val}};
    }
  } else {
    Q a = (Q(5, 2) - 2 * t) * eps;
    Q b = (Q(5, 2) + 2 * t) * eps;
    h.nodes = {{a, a}, {b, a}};
  }
  if (!validate_collapse(h)) throw Error("fourphase_collapse: bad node table");
  return h;
}

// Downward shift of the top of the window under h^eps_t.
inline Q fourphase_shift(const Q& eps, const Q& t) {
  if (t <= Q(1, 4)) return 8 * t * eps;
  if (t <= Q(1, 2)) return (4 * t + 1) * eps;
  if (t <= Q(3, 4)) return 3 * eps;
  return 4 * t * eps;
}

// H(xi, eps, s; t): pushforward of the Psi image under the four-phase
// collapse. The span interpolates with the top shift (a constant span cannot
// hold at t = 0, where h_0 is the identity on the Psi image); H(., 1) = id
// and scan_p is preserved at every t where the value is separated.
inline TildeE bigH(const TildeE& e, const Q& t) {
  validate_tilde(e);
  MonotoneCollapse h = fourphase_collapse(e.eps, t);
  Q span = e.span + 4 * e.eps - fourphase_shift(e.eps, t);
  TildeE out;
  out.eps = e.eps;
  out.span = span;
  out.config.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items) {
    MirrorClass image = pushforward(h, Phi_label(lab, e.eps, e.span), span);
    if (!mirror_eps_separated(image, e.eps))
      throw ValidationFailedError("bigH: image label not eps-separated");
    out.config.items.push_back({pt, image});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The push-to-the-left homotopy K on V x tilde-I
// ---------------------------------------------------------------------------

// tau^eps(y) = [(K, x), (L, x)], the label Psi produces over a particle of z.
inline IntervalClass tau_label(const SuspensionPoint& y, const Q& eps, const Q& span) {
  Window w = window_right(span);
  if (y.is_base()) return empty_class(w);
  Q a = q_abs(y.coord);
  int sgn = y.coord == Q(0) ? 1 : q_sign(y.coord);
  Interval K{(Q(1) - a / 2) * eps, (Q(2) - a / 2) * eps, -1, sgn};
  Interval L{(Q(2) + a / 2) * eps, (Q(3) + a / 2) * eps, -sgn, 1};
  return make_class(w, {{K, y.label}, {L, y.label}});
}

// k^eps_t with plateau [2eps(1-t), 2eps(1+t)].
inline MonotoneCollapse k_collapse(const Q& eps, const Q& t) {
  if (t == Q(0)) return collapse_identity();
  Q lo = 2 * eps * (Q(1) - t);
  Q hi = 2 * eps * (Q(1) + t);
  return MonotoneCollapse{{{lo, lo}, {hi, lo}}};
}

// K(v, xi, eps, s; t) = (k^eps_t* (tau^eps(z) + T_{4eps}(xi)), eps, s'(t)),
// s'(t) = s + 4eps(1 - t). At t = 0 this is the (p x phi) psi composite
// image; at t = 1 the K, L pair pastes into a degenerate that dies and xi
// arrives home, giving the identity.
inline TildeI k_homotopy(const PointConfig<SuspensionPoint>& z, const TildeI& e,
                         const Q& t) {
  if (t < Q(0) || Q(1) < t) throw Error("k_homotopy: t outside [0, 1]");
  validate_tilde(e);
  if (z.dim != e.config.dim) throw Error("k_homotopy: dimension mismatch");
  Q span0 = e.span + 4 * e.eps;
  Q span = e.span + 4 * e.eps * (Q(1) - t);
  Window w0 = window_right(span0);
  IntervalClassPam pam{w0};

  PointConfig<IntervalClass> composite;
  composite.dim = e.config.dim;
  {
    PointConfig<IntervalClass> tau_cfg;
    tau_cfg.dim = z.dim;
    for (const auto& [pt, y] : z.items) {
      IntervalClass c = tau_label(y, e.eps, span0);
      if (!c.empty()) tau_cfg.items.push_back({pt, c});
    }
    PointConfig<IntervalClass> moved;
    moved.dim = e.config.dim;
    for (const auto& [pt, lab] : e.config.items)
      moved.items.push_back({pt, translate(lab, 4 * e.eps, w0)});
    auto sum = try_config_sum(pam, tau_cfg, moved);
    if (!sum) throw NotSummableError("k_homotopy: tau collides with the translate");
    composite = std::move(*sum);
  }

  MonotoneCollapse k = k_collapse(e.eps, t);
  TildeI out;
  out.eps = e.eps;
  out.span = span;
  out.config.dim = composite.dim;
  for (const auto& [pt, lab] : composite.items) {
    IntervalClass image = pushforward(k, lab, window_right(span));
    if (!eps_separated(image, e.eps))
      throw ValidationFailedError("k_homotopy: image label not eps-separated");
    if (!image.empty()) out.config.items.push_back({pt, image});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The filtration deformation: h'_t, H'_t, K_t, and the fiber inverse G
// ---------------------------------------------------------------------------

// NDR presentation of (X, *): u^{-1}(0) = {*}, k(., 0) = id, k(*, t) = *,
// k(W, 1) = * with W = u^{-1}[0, 1). For a finite pointed set the canonical
// data is u = indicator, k = identity at all times.
struct NdrData {
  std::function<Q(const PointedSym&)> u;
  std::function<PointedSym(const PointedSym&, const Q&)> k;

  static NdrData canonical() {
    NdrData d;
    d.u = [](const PointedSym& x) { return x.is_base() ? Q(0) : Q(1); };
    d.k = [](const PointedSym& x, const Q&) { return x; };
    return d;
  }
};

// h'_t(u) = 2u/(2 - t) clamped to [-1, 1].
inline Q hprime(const Q& t, const Q& u) {
  Q v = 2 * u / (Q(2) - t);
  return q_min(q_max(v, Q(-1)), Q(1));
}

// Particles [c] ^ x map to [h'_t(c)] ^ k_t(x); at t = 1 everything with
// |c| >= 1/2 or label in W reaches the basepoint.
inline PointConfig<SuspensionPoint> deform_base(const PointConfig<SuspensionPoint>& z,
                                                const Q& t, const NdrData& ndr) {
  if (t < Q(0) || Q(1) < t) throw Error("deform_base: t outside [0, 1]");
  RawConfig<SuspensionPoint> raw;
  raw.dim = z.dim;
  for (const auto& [pt, y] : z.items)
    raw.items.push_back({pt, susp(hprime(t, y.coord), ndr.k(y.label, t))});
  return normalize_config(SuspensionPam{}, raw);
}

// (xi, eps, s) -> (K_t(xi), (1 - t/2) eps, s): labels inside the intervals
// move through k_t, the separation parameter shrinks, the span stays.
inline TildeE deform_total(const TildeE& e, const Q& t, const NdrData& ndr) {
  if (t < Q(0) || Q(1) < t) throw Error("deform_total: t outside [0, 1]");
  validate_tilde(e);
  TildeE out;
  out.eps = (Q(1) - t / 2) * e.eps;
  out.span = e.span;
  out.config.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items) {
    std::vector<IntervalItem> items;
    for (const auto& it : mirror_expand(lab).items)
      items.push_back({it.iv, ndr.k(it.label, t)});
    IntervalSeq seq{window_symmetric(e.span), std::move(items)};
    if (!validate_sequence(seq))
      throw ValidationFailedError("deform_total: relabelled sequence invalid");
    MirrorClass m = mirror_from_expansion(reduce(seq));
    if (!mirror_eps_separated(m, out.eps))
      throw ValidationFailedError("deform_total: image label not separated");
    if (!m.empty()) out.config.items.push_back({pt, m});
  }
  return out;
}

// g^eps(y) = [m(K, x)], K = (|c| eps/2, (2 - |c|) eps, -sign(c), sign(c));
// ties at c = 0 resolved like the section. Built at the ambient half width:
// at c = 0 the right end r(K) = 2 eps sits on the boundary of (-2eps, 2eps)
// itself, so the class only exists in a wider window.
inline MirrorClass g_label(const SuspensionPoint& y, const Q& eps, const Q& half_width) {
  if (y.is_base()) return MirrorClass{half_width, {}};
  Q a = q_abs(y.coord);
  int sgn = y.coord == Q(0) ? 1 : q_sign(y.coord);
  Interval K{a * eps / 2, (Q(2) - a) * eps, -sgn, sgn};
  return make_mirror(half_width, {{K, y.label}});
}

// G : p^{-1}(h_1(z)) -> p^{-1}(z), (xi, eps, s) -> (gamma^eps(z) + T_2eps xi,
// eps, s + 2eps). The mirror translation splits central intervals at the
// origin; the gamma insertion is what pastes the cut back shut.
inline TildeE g_inverse(const PointConfig<SuspensionPoint>& z, const TildeE& e) {
  validate_tilde(e);
  if (z.dim != e.config.dim) throw Error("g_inverse: dimension mismatch");
  Q s2 = e.span + 2 * e.eps;
  MirrorClassPam pam{s2};

  PointConfig<MirrorClass> gamma;
  gamma.dim = z.dim;
  for (const auto& [pt, y] : z.items) {
    MirrorClass m = g_label(y, e.eps, s2);
    if (!m.empty()) gamma.items.push_back({pt, m});
  }

  PointConfig<MirrorClass> moved;
  moved.dim = e.config.dim;
  for (const auto& [pt, lab] : e.config.items) {
    // split-parity -1 at the origin; see MirrorClass storage convention
    std::vector<IntervalItem> items = detail::shift_items(lab.right_items, 2 * e.eps);
    moved.items.push_back({pt, MirrorClass{s2, std::move(items)}});
  }
  auto sum = try_config_sum(pam, gamma, moved);
  if (!sum) throw NotSummableError("g_inverse: gamma collides with the translate");
  for (const auto& [pt, lab] : sum->items)
    if (!mirror_eps_separated(lab, e.eps))
      throw NotSummableError(
          "g_inverse: sum leaves the eps-separated space (e not in the fiber)");
  TildeE out{std::move(*sum), e.eps, s2};
  validate_tilde(out);
  return out;
}

}  // namespace ivs

#endif  // IVS_HOMOTOPY_HPP
