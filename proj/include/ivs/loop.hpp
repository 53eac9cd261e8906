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

#ifndef IVS_LOOP_HPP
#define IVS_LOOP_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "ivs/config.hpp"
#include "ivs/rational.hpp"
#include "ivs/suspension.hpp"

namespace ivs {

struct LengthMismatchError : Error {
  using Error::Error;
};
struct OutOfDomainError : Error {
  using Error::Error;
};

// One piece of a piecewise map into Sigma X. A ramp takes the value
// [slope*t + intercept] ^ label and must stay within [-1, 1] on its piece;
// ramps with slope 0 are stored as constants, constants with basic value as
// basepoint pieces.
struct LoopSegment {
  enum Kind { kBasepoint, kConstant, kRamp };
  Kind kind = kBasepoint;
  SuspensionPoint value;     // kConstant
  Q slope, intercept;        // kRamp
  PointedSym label;          // kRamp

  friend bool operator==(const LoopSegment&, const LoopSegment&) = default;
};

inline LoopSegment seg_base() { return LoopSegment{}; }
inline LoopSegment seg_const(SuspensionPoint v) {
  if (v.is_base()) return seg_base();
  LoopSegment s;
  s.kind = LoopSegment::kConstant;
  s.value = std::move(v);
  return s;
}
inline LoopSegment seg_ramp(Q slope, Q intercept, PointedSym label) {
  if (slope == Q(0) || label.is_base())
    return seg_const(susp(q_min(q_max(intercept, Q(-1)), Q(1)), label));
  LoopSegment s;
  s.kind = LoopSegment::kRamp;
  s.slope = std::move(slope);
  s.intercept = std::move(intercept);
  s.label = std::move(label);
  return s;
}

inline SuspensionPoint segment_value(const LoopSegment& s, const Q& t) {
  switch (s.kind) {
    case LoopSegment::kBasepoint:
      return susp_base();
    case LoopSegment::kConstant:
      return s.value;
    case LoopSegment::kRamp:
      return susp(s.slope * t + s.intercept, s.label);
  }
  return susp_base();
}

// A Moore path/loop with rational length: strictly increasing breakpoints
// lo = b_0 < ... < b_m = hi and one segment per piece, continuous at shared
// breakpoints. Loops additionally take the basepoint at both ends; paths
// relax the condition at lo.
struct PiecewiseLoop {
  Q lo, hi;
  std::vector<Q> breaks;          // size m+1, breaks.front() = lo, breaks.back() = hi
  std::vector<LoopSegment> segs;  // size m; empty only for the zero-length map

  Q length() const { return hi - lo; }
  friend bool operator==(const PiecewiseLoop&, const PiecewiseLoop&) = default;
};

namespace detail {

// Merges adjacent identical pieces and drops zero-length ones; asserts the
// continuity invariant. The canonical form is unique per function, so
// structural equality below is pointwise equality.
inline PiecewiseLoop canonicalize_loop(Q lo, Q hi, std::vector<Q> breaks,
                                       std::vector<LoopSegment> segs) {
  if (hi < lo) throw Error("loop: hi < lo");
  PiecewiseLoop out;
  out.lo = lo;
  out.hi = hi;
  if (lo == hi) {
    out.breaks = {lo, hi};
    out.segs = {segs.empty() ? seg_base() : segs.front()};
    return out;
  }
  std::vector<Q> nb;
  std::vector<LoopSegment> ns;
  nb.push_back(lo);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (breaks[i + 1] == breaks[i]) continue;  // zero-length piece
    LoopSegment s = segs[i];
    // a ramp whose value is basic on the whole piece degenerates
    if (s.kind == LoopSegment::kRamp) {
      Q va = s.slope * breaks[i] + s.intercept;
      Q vb = s.slope * breaks[i + 1] + s.intercept;
      if (q_abs(va) > Q(1) || q_abs(vb) > Q(1))
        throw Error("loop: ramp leaves [-1, 1]");
      if (va == vb) s = seg_const(susp(va, s.label));
    }
    if (!ns.empty() && ns.back() == s) {
      nb.back() = breaks[i + 1];
      continue;
    }
    ns.push_back(s);
    nb.push_back(breaks[i + 1]);
  }
  if (ns.empty()) {
    ns.push_back(seg_base());
    nb.push_back(hi);
  }
  if (nb.back() != hi) throw Error("loop: breakpoints do not cover the domain");
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (!(segment_value(ns[i - 1], nb[i]) == segment_value(ns[i], nb[i])))
      throw Error("loop: discontinuity at an interior breakpoint");
  }
  out.breaks = std::move(nb);
  out.segs = std::move(ns);
  return out;
}

}  // namespace detail

inline PiecewiseLoop make_loop(Q lo, Q hi, std::vector<Q> breaks,
                               std::vector<LoopSegment> segs) {
  return detail::canonicalize_loop(std::move(lo), std::move(hi),
                                   std::move(breaks), std::move(segs));
}

inline PiecewiseLoop constant_base_loop(Q lo, Q hi) {
  return make_loop(lo, hi, {lo, hi}, {seg_base()});
}

inline SuspensionPoint eval_loop(const PiecewiseLoop& f, const Q& t) {
  if (t < f.lo || f.hi < t)
    throw OutOfDomainError("eval_loop: argument outside [lo, hi]");
  if (f.lo == f.hi) return segment_value(f.segs.front(), t);
  // pieces are closed; either side of a shared breakpoint agrees
  std::size_t idx =
      std::upper_bound(f.breaks.begin(), f.breaks.end(), t) - f.breaks.begin();
  if (idx == 0) idx = 1;
  if (idx > f.segs.size()) idx = f.segs.size();
  return segment_value(f.segs[idx - 1], t);
}

inline bool is_loop(const PiecewiseLoop& f) {
  return eval_loop(f, f.lo).is_base() && eval_loop(f, f.hi).is_base();
}

inline bool loop_equals(const PiecewiseLoop& f, const PiecewiseLoop& g) {
  return f == g;  // canonical forms
}

namespace detail {

inline bool segment_nontrivial(const LoopSegment& s, const Q& a, const Q& b) {
  switch (s.kind) {
    case LoopSegment::kBasepoint:
      return false;
    case LoopSegment::kConstant:
      return !s.value.is_base();
    case LoopSegment::kRamp: {
      // values stay in [-1,1]; affine, so nontrivial iff the midpoint is
      Q mid = (a + b) / 2;
      return !susp(s.slope * mid + s.intercept, s.label).is_base();
    }
  }
  return false;
}

}  // namespace detail

// Pointwise sum in Omega_s(Sigma X): defined iff at every parameter at most
// one summand is away from the basepoint. Checked exactly on the common
// refinement via piece midpoints and breakpoints.
inline std::optional<PiecewiseLoop> try_loop_sum(const PiecewiseLoop& f,
                                                 const PiecewiseLoop& g) {
  if (f.lo != g.lo || f.hi != g.hi) return std::nullopt;
  std::vector<Q> grid;
  std::merge(f.breaks.begin(), f.breaks.end(), g.breaks.begin(), g.breaks.end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<LoopSegment> segs;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Q& a = grid[i];
    const Q& b = grid[i + 1];
    // resolve pieces by midpoint to dodge breakpoint ties
    Q mid = (a + b) / 2;
    auto piece_at = [&](const PiecewiseLoop& h) -> const LoopSegment& {
      std::size_t idx = std::upper_bound(h.breaks.begin(), h.breaks.end(), mid) -
                        h.breaks.begin();
      if (idx == 0) idx = 1;
      if (idx > h.segs.size()) idx = h.segs.size();
      return h.segs[idx - 1];
    };
    const LoopSegment& pf = piece_at(f);
    const LoopSegment& pg = piece_at(g);
    bool nf = detail::segment_nontrivial(pf, a, b);
    bool ng = detail::segment_nontrivial(pg, a, b);
    if (nf && ng) return std::nullopt;
    // endpoint values must also be pairwise summable (at most one nontrivial)
    for (const Q& t : {a, b})
      if (!eval_loop(f, t).is_base() && !eval_loop(g, t).is_base())
        return std::nullopt;
    segs.push_back(nf ? pf : ng ? pg : seg_base());
  }
  if (grid.size() < 2) return constant_base_loop(f.lo, f.hi);
  return make_loop(f.lo, f.hi, grid, segs);
}

inline PiecewiseLoop loop_sum(const PiecewiseLoop& f, const PiecewiseLoop& g) {
  if (f.lo != g.lo || f.hi != g.hi)
    throw LengthMismatchError("loop_sum: domains differ");
  auto r = try_loop_sum(f, g);
  if (!r) throw NotSummableError("loop_sum: loops collide pointwise");
  return *r;
}

// Restriction to a subdomain (used for beta and for the evaluation at 0).
inline PiecewiseLoop restrict_loop(const PiecewiseLoop& f, const Q& lo, const Q& hi) {
  if (lo < f.lo || f.hi < hi || hi < lo)
    throw OutOfDomainError("restrict_loop: bad subdomain");
  if (lo == hi) {
    return make_loop(lo, hi, {lo, hi}, {seg_const(eval_loop(f, lo))});
  }
  std::vector<Q> nb{lo};
  std::vector<LoopSegment> ns;
  for (std::size_t i = 0; i < f.segs.size(); ++i) {
    Q a = q_max(f.breaks[i], lo);
    Q b = q_min(f.breaks[i + 1], hi);
    if (b <= a) continue;
    ns.push_back(f.segs[i]);
    nb.push_back(b);
  }
  return make_loop(lo, hi, nb, ns);
}

// A loop of configurations, stored per particle; evaluation reassembles the
// configuration through the interchange map.
struct ConfigLoop {
  int dim = 1;
  Q lo, hi;
  std::vector<std::pair<QPoint, PiecewiseLoop>> items;
};

inline PointConfig<SuspensionPoint> eval_config_loop(const ConfigLoop& f, const Q& t) {
  RawConfig<SuspensionPoint> raw;
  raw.dim = f.dim;
  for (const auto& [pt, loop] : f.items) raw.items.push_back({pt, eval_loop(loop, t)});
  return normalize_config(SuspensionPam{}, raw);
}

// [(v_1, l_1), ...] evaluated at t: the interchange of C(R^d, Omega) into
// Omega C(R^d, -) applied pointwise.
inline PointConfig<SuspensionPoint> interchange_eval(
    const PointConfig<PiecewiseLoop>& cfg, const Q& t) {
  RawConfig<SuspensionPoint> raw;
  raw.dim = cfg.dim;
  for (const auto& [pt, loop] : cfg.items) {
    const PiecewiseLoop& first = cfg.items.front().second;
    if (loop.lo != first.lo || loop.hi != first.hi)
      throw LengthMismatchError("interchange_eval: loop lengths differ");
    raw.items.push_back({pt, eval_loop(loop, t)});
  }
  return normalize_config(SuspensionPam{}, raw);
}

}  // namespace ivs

#endif  // IVS_LOOP_HPP
