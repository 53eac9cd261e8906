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

#include <gtest/gtest.h>

#include "ivs/generator.hpp"
#include "ivs/scanning.hpp"
#include "ivs/text.hpp"

namespace ivs {
namespace {

IntervalItem it(Q l, Q r, Parity pl, Parity pr, const char* lab = "a") {
  return IntervalItem{Interval{l, r, pl, pr}, sym(lab)};
}

TEST(Windows, SingleClosedInterval) {
  auto c = make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)});
  WindowSystem ws = windows(c, Q(1, 2));
  ASSERT_EQ(ws.windows.size(), 2u);
  EXPECT_EQ(ws.windows[0].lo, Q(3, 4));
  EXPECT_EQ(ws.windows[0].hi, Q(5, 4));
  EXPECT_EQ(ws.windows[1].lo, Q(7, 4));
  EXPECT_EQ(ws.windows[1].hi, Q(9, 4));
}

TEST(Windows, ClippedPair) {
  auto c = make_class(window_right(Q(4)),
                      {it(Q(1), Q(2), 1, 1), it(Q(23, 10), Q(17, 5), -1, -1)});
  WindowSystem ws = windows(c, Q(1, 2));
  ASSERT_EQ(ws.windows.size(), 4u);
  EXPECT_EQ(ws.windows[1].lo, Q(7, 4));
  EXPECT_EQ(ws.windows[1].hi, Q(41, 20));
  EXPECT_EQ(ws.windows[2].lo, Q(9, 4));
  EXPECT_EQ(ws.windows[2].hi, Q(51, 20));
}

TEST(Windows, ShortHalfOpen) {
  auto c = make_class(window_right(Q(3)), {it(Q(1), Q(6, 5), 1, -1)});
  WindowSystem ws = windows(c, Q(1, 2));
  ASSERT_EQ(ws.windows.size(), 2u);
  EXPECT_EQ(ws.windows[0].lo, Q(3, 4));
  EXPECT_EQ(ws.windows[0].hi, Q(19, 20));
  EXPECT_EQ(ws.windows[1].lo, Q(5, 4));
  EXPECT_EQ(ws.windows[1].hi, Q(29, 20));
}

TEST(Windows, RequiresSeparation) {
  auto c = make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)});
  EXPECT_THROW(windows(c, Q(3, 2)), NotSeparatedError);
}

TEST(Alpha1, PointValues) {
  auto c = make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)});
  PiecewiseLoop f = alpha1(c, Q(1, 2));
  EXPECT_EQ(eval_loop(f, Q(3, 2)), susp(Q(0), sym("a")));
  EXPECT_EQ(eval_loop(f, Q(1)), susp(Q(-1, 2), sym("a")));
  EXPECT_TRUE(eval_loop(f, Q(3, 4)).is_base());
  EXPECT_TRUE(eval_loop(f, Q(0)).is_base());
  EXPECT_TRUE(eval_loop(f, Q(3)).is_base());
  EXPECT_TRUE(is_loop(f));
}

TEST(Alpha1, EmptyClass) {
  PiecewiseLoop f = alpha1(empty_class(window_right(Q(3))), Q(1, 2));
  EXPECT_TRUE(loop_equals(f, constant_base_loop(Q(0), Q(3))));
}

TEST(EvalLoop, PiecewiseAffineAndBounds) {
  auto c = make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)});
  PiecewiseLoop f = alpha1(c, Q(1, 2));
  EXPECT_THROW(eval_loop(f, Q(-1)), OutOfDomainError);
  EXPECT_THROW(eval_loop(f, Q(4)), OutOfDomainError);
  // three collinear samples per ramp piece
  for (std::size_t i = 0; i + 1 < f.breaks.size(); ++i) {
    if (f.segs[i].kind != LoopSegment::kRamp) continue;
    const Q& a = f.breaks[i];
    const Q& b = f.breaks[i + 1];
    Q mid = (a + b) / 2;
    Q va = f.segs[i].slope * a + f.segs[i].intercept;
    Q vb = f.segs[i].slope * b + f.segs[i].intercept;
    Q vm = f.segs[i].slope * mid + f.segs[i].intercept;
    EXPECT_EQ(vm * 2, va + vb);
  }
}

TEST(LoopSum, UnitAndDisjoint) {
  Window u = window_right(Q(4));
  auto a = make_class(u, {it(Q(1, 2), Q(1), 1, 1)});
  auto b = make_class(u, {it(Q(5, 2), Q(3), -1, -1, "b")});
  Q eps(1, 4);
  PiecewiseLoop fa = alpha1(a, eps);
  PiecewiseLoop fb = alpha1(b, eps);
  // unit law
  EXPECT_TRUE(loop_equals(loop_sum(fa, constant_base_loop(Q(0), Q(4))), fa));
  // disjoint supports add piecewise
  auto s = try_loop_sum(fa, fb);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(eval_loop(*s, Q(3, 4)), eval_loop(fa, Q(3, 4)));
  EXPECT_EQ(eval_loop(*s, Q(11, 4)), eval_loop(fb, Q(11, 4)));
  // length mismatch
  auto short_loop = constant_base_loop(Q(0), Q(2));
  EXPECT_THROW(loop_sum(fa, short_loop), LengthMismatchError);
}

TEST(LoopSum, DocumentedGapPair) {
  // summable eps-separated classes whose scans collide pointwise at t = 21/10
  Window u = window_right(Q(4));
  Q eps(1, 2);
  auto a = make_class(u, {it(Q(1), Q(2), 1, 1)});
  auto b = make_class(u, {it(Q(23, 10), Q(17, 5), -1, -1)});
  auto sum = try_class_sum(a, b);
  ASSERT_TRUE(sum.has_value());
  EXPECT_TRUE(eps_separated(*sum, eps));
  PiecewiseLoop fa = alpha1(a, eps);
  PiecewiseLoop fb = alpha1(b, eps);
  EXPECT_FALSE(eval_loop(fa, Q(21, 10)).is_base());
  EXPECT_FALSE(eval_loop(fb, Q(21, 10)).is_base());
  EXPECT_FALSE(try_loop_sum(fa, fb).has_value());
  EXPECT_THROW(loop_sum(fa, fb), NotSummableError);
}

TEST(ScanP, LabelExamples) {
  Q eps(1, 2);
  auto far = make_mirror(Q(3), {it(Q(1), Q(2), 1, 1)});
  EXPECT_TRUE(scan_p_label(far, eps).is_base());
  auto near = make_mirror(Q(3), {it(Q(1, 10), Q(1), 1, 1)});
  EXPECT_EQ(scan_p_label(near, eps), susp(Q(-2, 5), sym("a")));
  EXPECT_TRUE(scan_p_label(MirrorClass{Q(3), {}}, eps).is_base());
}

TEST(ScanP, ConfigLevel) {
  TildeE e;
  e.eps = Q(1, 2);
  e.span = Q(3);
  e.config.dim = 1;
  e.config.items.push_back({{Q(0)}, make_mirror(Q(3), {it(Q(1, 10), Q(1), 1, 1)})});
  e.config.items.push_back({{Q(1)}, make_mirror(Q(3), {it(Q(1), Q(2), 1, 1, "b")})});
  auto z = scan_p(e);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z.items[0].first[0], Q(0));
  EXPECT_EQ(z.items[0].second, susp(Q(-2, 5), sym("a")));
}

TEST(InA, Examples) {
  Q eps(1, 2);
  EXPECT_TRUE(in_A(MirrorClass{Q(3), {}}, eps));
  EXPECT_TRUE(in_A(make_mirror(Q(3), {it(Q(1), Q(2), 1, 1)}), eps));
  EXPECT_FALSE(in_A(make_mirror(Q(3), {it(Q(1, 10), Q(1), 1, 1)}), eps));
  // the filtration of a thickened element counts labels outside A
  TildeE e;
  e.eps = eps;
  e.span = Q(3);
  e.config.dim = 1;
  e.config.items.push_back({{Q(0)}, make_mirror(Q(3), {it(Q(1, 10), Q(1), 1, 1)})});
  e.config.items.push_back({{Q(1)}, make_mirror(Q(3), {it(Q(1), Q(2), 1, 1)})});
  EXPECT_EQ(tilde_filtration_index(e), 1);
  // p preserves the filtration: the index equals the particle count of the scan
  EXPECT_EQ(tilde_filtration_index(e), static_cast<int>(scan_p(e).size()));
}

TEST(AlphaN, InterchangeAndEnds) {
  TildeI e;
  e.eps = Q(1, 2);
  e.span = Q(3);
  e.config.dim = 1;
  e.config.items.push_back(
      {{Q(0)}, make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)})});
  ConfigLoop f = alpha_n(e);
  EXPECT_TRUE(eval_config_loop(f, Q(0)).empty());
  EXPECT_TRUE(eval_config_loop(f, Q(3)).empty());
  auto mid = eval_config_loop(f, Q(3, 2));
  ASSERT_EQ(mid.size(), 1u);
  EXPECT_EQ(mid.items[0].second, susp(Q(0), sym("a")));
  // empty element scans to the constant empty loop
  TildeI none{PointConfig<IntervalClass>{1, {}}, Q(1, 2), Q(3)};
  ConfigLoop g = alpha_n(none);
  EXPECT_TRUE(eval_config_loop(g, Q(1)).empty());
}

TEST(Beta, PathEndpoints) {
  TildeE e;
  e.eps = Q(1, 2);
  e.span = Q(3);
  e.config.dim = 1;
  e.config.items.push_back({{Q(0)}, make_mirror(Q(3), {it(Q(1, 10), Q(1), 1, 1)})});
  ConfigLoop path = beta(e);
  EXPECT_TRUE(config_equals(SuspensionPam{}, eval_config_loop(path, Q(0)), scan_p(e)));
  EXPECT_TRUE(eval_config_loop(path, e.span).empty());
  // beta of an embedded element is a loop: both ends empty
  TildeI ei;
  ei.eps = Q(1, 2);
  ei.span = Q(3);
  ei.config.dim = 1;
  ei.config.items.push_back(
      {{Q(0)}, make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)})});
  ConfigLoop lp = beta(tilde_embed(ei));
  EXPECT_TRUE(eval_config_loop(lp, Q(0)).empty());
  EXPECT_TRUE(eval_config_loop(lp, Q(3)).empty());
  // beta of the empty element is the constant empty path
  TildeE none{PointConfig<MirrorClass>{1, {}}, Q(1, 2), Q(3)};
  EXPECT_TRUE(eval_config_loop(beta(none), Q(2)).empty());
}

TEST(Scanning, EndpointParitySpacing) {
  // whenever consecutive endpoints are closer than eps their parities are
  // opposite, and endpoints two apart are at least eps apart
  GenSpec spec;
  spec.seed = 23;
  Gen gen(spec);
  for (int i = 0; i < 400; ++i) {
    Q eps = gen.pick_eps();
    Q span;
    IntervalClass c = gen.iclass(eps, span);
    auto ends = detail::scan_ends(c.items);
    for (std::size_t j = 1; j < ends.size(); ++j) {
      if (ends[j].u - ends[j - 1].u < eps) {
        EXPECT_EQ(ends[j].p, -ends[j - 1].p);
      }
      if (j >= 2) {
        EXPECT_GE(ends[j].u - ends[j - 2].u, eps);
      }
    }
  }
}

}  // namespace
}  // namespace ivs
