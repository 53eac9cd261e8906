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

#ifndef IVS_GENERATOR_HPP
#define IVS_GENERATOR_HPP

#include <random>
#include <string>
#include <vector>

#include "ivs/interval.hpp"
#include "ivs/suspension.hpp"

namespace ivs {

struct InfeasibleSpecError : Error {
  using Error::Error;
};

// Knobs for the random generators. Endpoints live on the grid Z/denominator;
// spacing is constructive, so every draw passes the validators without
// rejection sampling.
struct GenSpec {
  uint64_t seed = 1;
  int max_intervals = 3;
  int alphabet_size = 2;
  int dim = 1;
  int max_points = 2;
  long long denominator = 8;
  Q eps_min = Q(1, 4);
  Q eps_max = Q(1, 2);
  Q span_min = Q(0);
  Q span_max = Q(12);
};

class Gen {
 public:
  explicit Gen(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {}

  std::mt19937_64& rng() { return rng_; }

  long long rand_int(long long lo, long long hi) {  // inclusive
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }

  bool coin(double p = 0.5) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }

  Q grid() const { return Q(1, spec_.denominator); }

  Q ceil_to_grid(const Q& x) const {
    long long d = spec_.denominator;
    long long num = x.numerator() * d;
    long long den = x.denominator();
    long long q = num / den;
    if (q * den < num) ++q;  // ceil for positive direction
    return Q(q, d);
  }

  PointedSym label() {
    return PointedSym{std::string(1, static_cast<char>('a' + rand_int(0, spec_.alphabet_size - 1)))};
  }

  // A random eps on the grid within the requested range.
  Q pick_eps() {
    Q g = grid();
    Q lo = ceil_to_grid(q_max(spec_.eps_min, g));
    Q hi = spec_.eps_max;
    if (hi < lo) return lo;
    long long steps = ((hi - lo) / g).numerator() / ((hi - lo) / g).denominator();
    return lo + g * Q(rand_int(0, steps));
  }

  // Geometric-ish small slack in grid steps, biased towards 0 so that
  // clipped-window cases (consecutive ends closer than eps) stay frequent.
  Q slack() {
    long long s = 0;
    while (s < 6 && coin(0.4)) ++s;
    return grid() * Q(s);
  }

  // Places k intervals over (0, span) left to right, eps-separated by
  // construction. With `mirrored` the cross-reflection constraints of a right
  // half are enforced as well, and the first interval may touch the origin.
  std::vector<IntervalItem> place_items(int k, const Q& eps, bool mirrored,
                                        bool allow_central, Q& last_end) {
    std::vector<IntervalItem> items;
    const Q g = grid();
    Q last_pos[2] = {Q(-1000000), Q(-1000000)};  // last end per parity (-1, +1)
    Q first_pos[2] = {Q(1000000), Q(1000000)};   // earliest end per parity
    auto idx = [](Parity p) { return p > 0 ? 1 : 0; };
    // (0, s) windows have an eps/2 margin at the floor; for a mirrored right
    // half the origin is interior and only the reflection constraints apply.
    Q prev_end = mirrored ? Q(0) : eps / 2;
    PointedSym prev_label;
    for (int i = 0; i < k; ++i) {
      Parity pl = coin() ? 1 : -1;
      Parity pr = coin() ? 1 : -1;
      PointedSym x = label();
      bool central = mirrored && allow_central && i == 0 && coin(0.3);
      Q l;
      if (central) {
        pl = -1;  // storage convention for the split at the origin
        l = Q(0);
      } else {
        Q bound = prev_end + g;
        if (i > 0 && !(x == prev_label)) bound = q_max(bound, prev_end + eps);
        bound = q_max(bound, last_pos[idx(pl)] + eps);
        if (mirrored) bound = q_max(bound, eps - first_pos[idx(-pl)]);
        l = ceil_to_grid(bound) + slack();
      }
      if (!central) {
        last_pos[idx(pl)] = q_max(last_pos[idx(pl)], l);
        first_pos[idx(pl)] = q_min(first_pos[idx(pl)], l);
      }
      Q rbound = l + g;
      if (pl == pr && !central) rbound = q_max(rbound, l + eps);
      rbound = q_max(rbound, last_pos[idx(pr)] + eps);
      if (mirrored) rbound = q_max(rbound, eps - first_pos[idx(-pr)]);
      if (central) rbound = q_max(rbound, g);
      Q r = ceil_to_grid(rbound) + slack();
      last_pos[idx(pr)] = q_max(last_pos[idx(pr)], r);
      first_pos[idx(pr)] = q_min(first_pos[idx(pr)], r);
      items.push_back({Interval{l, r, pl, pr}, x});
      prev_end = r;
      prev_label = x;
    }
    last_end = items.empty() ? Q(0) : items.back().iv.right;
    return items;
  }

  // Chooses a span that leaves the eps/2 margin; InfeasibleSpec if the
  // requested range cannot hold the placed intervals.
  Q pick_span(const Q& eps, const Q& last_end) {
    Q g = grid();
    Q needed = ceil_to_grid(last_end + eps / 2) + g;
    needed = q_max(needed, spec_.span_min);
    if (spec_.span_max < needed)
      throw InfeasibleSpecError("generator: span range cannot fit the element");
    Q extra = slack();
    Q span = needed + extra;
    if (spec_.span_max < span) span = needed;
    return span;
  }

  IntervalClass iclass(const Q& eps, Q& span_out) {
    int k = static_cast<int>(rand_int(0, spec_.max_intervals));
    Q last_end;
    auto items = place_items(k, eps, /*mirrored=*/false, /*central=*/false, last_end);
    span_out = pick_span(eps, last_end);
    IntervalClass c = make_class(window_right(span_out), std::move(items));
    if (!eps_separated(c, eps))
      throw Error("generator: iclass failed its own separation audit");
    return c;
  }

  MirrorClass mirror(const Q& eps, Q& span_out) {
    int k = static_cast<int>(rand_int(0, spec_.max_intervals));
    Q last_end;
    auto items = place_items(k, eps, /*mirrored=*/true, /*central=*/true, last_end);
    span_out = pick_span(eps, last_end);
    MirrorClass m = make_mirror(span_out, std::move(items));
    if (!mirror_eps_separated(m, eps))
      throw Error("generator: mirror failed its own separation audit");
    return m;
  }

  QPoint point() {
    QPoint p;
    for (int i = 0; i < spec_.dim; ++i)
      p.push_back(Q(rand_int(-8, 8), 4));
    return p;
  }

  std::vector<QPoint> distinct_points(int n) {
    std::vector<QPoint> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n && guard < 1000) {
      QPoint p = point();
      bool dup = false;
      for (const auto& q : pts) dup = dup || q == p;
      if (!dup) pts.push_back(p);
      ++guard;
    }
    if (spec_.dim == 0 && n > 0) pts = {QPoint{}};  // a single point in R^0
    return pts;
  }

  TildeI tilde_i() {
    Q eps = pick_eps();
    // share one span across the labels: place the widest first
    int n = static_cast<int>(rand_int(0, spec_.max_points));
    std::vector<IntervalClass> labels;
    Q span = q_max(spec_.span_min, Q(1));
    std::vector<Q> spans;
    for (int i = 0; i < n; ++i) {
      Q s;
      IntervalClass c = iclass(eps, s);
      labels.push_back(std::move(c));
      span = q_max(span, s);
    }
    if (spec_.span_max < span)
      throw InfeasibleSpecError("generator: tilde span range too small");
    TildeI out;
    out.eps = eps;
    out.span = span;
    out.config.dim = spec_.dim;
    auto pts = distinct_points(n);
    for (std::size_t i = 0; i < labels.size() && i < pts.size(); ++i) {
      if (labels[i].empty()) continue;
      out.config.items.push_back({pts[i], widen(labels[i], window_right(span))});
    }
    std::sort(out.config.items.begin(), out.config.items.end(),
              [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
    validate_tilde(out);
    return out;
  }

  TildeE tilde_e() {
    Q eps = pick_eps();
    int n = static_cast<int>(rand_int(0, spec_.max_points));
    std::vector<MirrorClass> labels;
    Q span = q_max(spec_.span_min, Q(1));
    for (int i = 0; i < n; ++i) {
      Q s;
      MirrorClass m = mirror(eps, s);
      labels.push_back(std::move(m));
      span = q_max(span, s);
    }
    if (spec_.span_max < span)
      throw InfeasibleSpecError("generator: tilde span range too small");
    TildeE out;
    out.eps = eps;
    out.span = span;
    out.config.dim = spec_.dim;
    auto pts = distinct_points(n);
    for (std::size_t i = 0; i < labels.size() && i < pts.size(); ++i) {
      if (labels[i].empty()) continue;
      out.config.items.push_back({pts[i], mirror_widen(labels[i], span)});
    }
    std::sort(out.config.items.begin(), out.config.items.end(),
              [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
    validate_tilde(out);
    return out;
  }

  SuspensionPoint susp_point() {
    long long d = spec_.denominator;
    Q c = Q(rand_int(-(d - 1), d - 1), d);
    return susp(c, label());
  }

  PointConfig<SuspensionPoint> susp_config() {
    int n = static_cast<int>(rand_int(0, spec_.max_points));
    RawConfig<SuspensionPoint> raw;
    raw.dim = spec_.dim;
    auto pts = distinct_points(n);
    for (const auto& p : pts) raw.items.push_back({p, susp_point()});
    return normalize_config(SuspensionPam{}, raw);
  }

  // A raw sequence for the rewriting oracle: a reduced family plus optional
  // removable noise (basepoint-labelled intervals and degenerates).
  IntervalSeq oracle_seq(const Q& eps) {
    Q span_out;
    IntervalClass c = iclass(eps, span_out);
    IntervalSeq seq{c.win, c.items};
    // sprinkle removable degenerates at touching positions and in gaps
    std::vector<IntervalItem> items;
    Q g = grid();
    for (const auto& it : seq.items) {
      if (coin(0.3)) {
        // degenerate touching the left end: its right parity must oppose the
        // item's left parity, and the labels must match
        items.push_back({Interval{it.iv.left, it.iv.left, it.iv.left_parity,
                                  -it.iv.left_parity},
                         it.label});
      }
      items.push_back(it);
      if (coin(0.2)) {
        items.push_back({Interval{it.iv.right, it.iv.right, -it.iv.right_parity,
                                  it.iv.right_parity},
                         it.label});
      }
    }
    // a free-standing basepoint-labelled interval in the top gap
    if (coin(0.3) && seq.win.hi) {
      Q base = (seq.items.empty() ? Q(0) : seq.items.back().iv.right) + g;
      Q top = *seq.win.hi;
      if (base + 2 * g < top) {
        items.push_back({Interval{base + g, base + 2 * g, 1, -1}, sym_base()});
      }
    }
    IntervalSeq out{seq.win, std::move(items)};
    if (!validate_sequence(out))
      throw Error("generator: oracle sequence failed validity");
    return out;
  }

  // Splits one random interval of a class into two touching halves; used for
  // representative-robustness probes.
  IntervalSeq cut_once(const IntervalSeq& seq) {
    if (seq.items.empty()) return seq;
    std::size_t j = static_cast<std::size_t>(rand_int(0, seq.items.size() - 1));
    const IntervalItem& it = seq.items[j];
    Q g = grid();
    if (it.iv.right - it.iv.left < 2 * g) return seq;
    long long steps = ((it.iv.right - it.iv.left) / g).numerator();
    Q w = it.iv.left + g * Q(rand_int(1, steps - 1));
    Parity s = coin() ? 1 : -1;
    std::vector<IntervalItem> items = seq.items;
    items[j] = {Interval{it.iv.left, w, it.iv.left_parity, s}, it.label};
    items.insert(items.begin() + j + 1,
                 {Interval{w, it.iv.right, -s, it.iv.right_parity}, it.label});
    IntervalSeq out{seq.win, std::move(items)};
    if (!validate_sequence(out)) return seq;
    return out;
  }

  const GenSpec& spec() const { return spec_; }

 private:
  GenSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace ivs

#endif  // IVS_GENERATOR_HPP
