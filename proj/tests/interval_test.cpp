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
#include "ivs/interval.hpp"
#include "ivs/oracle.hpp"
#include "ivs/text.hpp"

namespace ivs {
namespace {

IntervalItem it(Q l, Q r, Parity pl, Parity pr, const char* lab = "a") {
  return IntervalItem{Interval{l, r, pl, pr}, sym(lab)};
}

TEST(IntervalSeq, Validate) {
  Window u = window(Q(-1), Q(2));
  // touching with distinct labels is forbidden
  EXPECT_FALSE(validate_sequence(
      {u, {it(Q(0), Q(1), 1, 1, "a"), it(Q(1), Q(2) - Q(1, 8), 1, -1, "b")}}));
  // touching with equal junction parities is forbidden
  EXPECT_FALSE(validate_sequence(
      {u, {it(Q(0), Q(1), 1, -1), it(Q(1), Q(3, 2), -1, 1)}}));
  // a single interval inside the window is fine
  EXPECT_TRUE(validate_sequence({u, {it(Q(0), Q(1), 1, 1)}}));
  // window bounds are open
  EXPECT_FALSE(validate_sequence({u, {it(Q(-1), Q(1), 1, 1)}}));
  // degenerate quadruples need opposite parities
  EXPECT_FALSE((Interval{Q(1), Q(1), 1, 1}).valid());
  EXPECT_TRUE((Interval{Q(1), Q(1), 1, -1}).valid());
}

TEST(Reduce, Examples) {
  Window u = window(Q(-1), Q(4));
  // paste across a junction
  auto c1 = reduce({u, {it(Q(0), Q(1), 1, -1), it(Q(1), Q(2), 1, 1)}});
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1.items[0].iv, (Interval{Q(0), Q(2), 1, 1}));
  // birth and death
  EXPECT_TRUE(reduce({u, {it(Q(3), Q(3), 1, -1)}}).empty());
  // degenerate absorbed by its neighbor
  auto c2 = reduce({u, {it(Q(1), Q(2), 1, -1), it(Q(2), Q(2), 1, -1)}});
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2.items[0].iv, (Interval{Q(1), Q(2), 1, -1}));
  // basepoint labels vanish
  EXPECT_TRUE(reduce({u, {it(Q(0), Q(1), 1, -1, "*")}}).empty());
  EXPECT_THROW(reduce({u, {it(Q(0), Q(1), 1, -1), it(Q(1), Q(2), -1, 1)}}),
               InvalidSequenceError);
}

TEST(ClassOps, EqualsAndSum) {
  Window u = window(Q(0), Q(5));
  auto empty1 = empty_class(u);
  auto empty2 = empty_class(u);
  EXPECT_TRUE(class_equals(empty1, empty2));
  EXPECT_THROW(class_equals(empty1, empty_class(window(Q(0), Q(6)))),
               WindowMismatchError);

  auto a = make_class(u, {it(Q(1), Q(3), 1, -1)});
  auto b = make_class(u, {it(Q(3), Q(4), 1, 1)});
  auto s = class_sum(a, b);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.items[0].iv, (Interval{Q(1), Q(4), 1, 1}));
  // overlapping interiors cannot be ordered
  auto c = make_class(u, {it(Q(2), Q(4), 1, 1)});
  EXPECT_FALSE(try_class_sum(a, c).has_value());
  EXPECT_THROW(class_sum(a, c), NotSummableError);
  // unit
  EXPECT_TRUE(class_equals(class_sum(a, empty1), a));
}

TEST(EpsSeparated, Examples) {
  Window u = window(Q(0), Q(3));
  auto c = make_class(u, {it(Q(1), Q(2), 1, 1)});
  EXPECT_TRUE(eps_separated(c, Q(1, 2)));
  EXPECT_FALSE(eps_separated(c, Q(3, 2)));  // two closed ends at distance 1
  auto d = make_class(u, {it(Q(1, 5), Q(1), 1, 1)});
  EXPECT_FALSE(eps_separated(d, Q(1, 2)));  // 1/5 within eps/2 of the boundary
}

TEST(EpsSeparated, AntitoneAndRepresentativeStable) {
  GenSpec spec;
  spec.seed = 11;
  Gen gen(spec);
  for (int i = 0; i < 300; ++i) {
    Q eps = gen.pick_eps();
    Q span;
    IntervalClass c = gen.iclass(eps, span);
    EXPECT_TRUE(eps_separated(c, eps));
    // antitone in eps
    EXPECT_TRUE(eps_separated(c, eps / 2));
    // separated for all sufficiently small eps
    EXPECT_TRUE(eps_separated(c, Q(1, 64)));
    // a representative with a removable degenerate keeps the reduced class
    // separated
    if (!c.items.empty()) {
      IntervalSeq seq{c.win, c.items};
      const auto& j = c.items.front();
      seq.items.insert(seq.items.begin(),
                       {Interval{j.iv.left, j.iv.left, j.iv.left_parity,
                                 -j.iv.left_parity},
                        j.label});
      ASSERT_TRUE(validate_sequence(seq));
      EXPECT_TRUE(eps_separated(reduce(seq), eps));
    }
  }
}

TEST(EpsSeparated, SameParityEndsForceLength) {
  GenSpec spec;
  spec.seed = 12;
  Gen gen(spec);
  for (int i = 0; i < 300; ++i) {
    Q eps = gen.pick_eps();
    Q span;
    IntervalClass c = gen.iclass(eps, span);
    for (const auto& item : c.items)
      if (item.iv.left_parity == item.iv.right_parity) {
        EXPECT_GE(item.iv.length(), eps);
      }
  }
  // half-open intervals may be arbitrarily short
  auto c = make_class(window(Q(0), Q(2)), {it(Q(1), Q(1) + Q(1, 64), 1, -1)});
  EXPECT_TRUE(eps_separated(c, Q(1, 2)));
}

TEST(Translate, Examples) {
  Window u = window(Q(0), Q(5));
  auto c = make_class(u, {it(Q(2), Q(3), 1, 1)});
  EXPECT_TRUE(class_equals(translate(c, Q(0), u), c));
  auto t = translate(c, Q(1), u);
  EXPECT_EQ(t.items[0].iv, (Interval{Q(3), Q(4), 1, 1}));
  auto c2 = make_class(u, {it(Q(1), Q(2), 1, 1)});
  auto t2 = translate(c2, Q(1), u);  // T_{2 eps} at eps = 1/2
  EXPECT_EQ(t2.items[0].iv, (Interval{Q(2), Q(3), 1, 1}));
  EXPECT_THROW(translate(c, Q(3), u), OutOfWindowError);
}

TEST(Involute, Examples) {
  Window u = window_symmetric(Q(4));
  auto c = make_class(u, {it(Q(1), Q(2), 1, -1)});
  auto i = involute(c);
  ASSERT_EQ(i.size(), 1u);
  EXPECT_EQ(i.items[0].iv, (Interval{Q(-2), Q(-1), 1, -1}));
  EXPECT_TRUE(class_equals(involute(i), c));
  EXPECT_THROW(involute(make_class(window(Q(0), Q(2)), {})), WindowMismatchError);
}

TEST(Mirror, EmbedAndExpand) {
  auto c = make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)});
  MirrorClass m = mirror_embed(c);
  auto e = mirror_expand(m);
  ASSERT_EQ(e.size(), 2u);
  // -J negates the parities: the mirror of a closed interval is open
  EXPECT_EQ(e.items[0].iv, (Interval{Q(-2), Q(-1), -1, -1}));
  EXPECT_EQ(e.items[1].iv, (Interval{Q(1), Q(2), 1, 1}));
  // the expansion is involution-fixed
  EXPECT_TRUE(class_equals(involute(e), e));
  // restricting the expansion to (0, s) recovers the class
  std::vector<IntervalItem> right;
  for (const auto& item : e.items)
    if (item.iv.left > Q(0)) right.push_back(item);
  EXPECT_EQ(right, c.items);
  // empty goes to empty
  EXPECT_TRUE(mirror_expand(mirror_embed(empty_class(window_right(Q(3))))).empty());
}

TEST(Mirror, CentralPaste) {
  // right items touching the origin paste with their mirror image
  MirrorClass m = make_mirror(Q(2), {it(Q(0), Q(1), -1, 1)});
  auto e = mirror_expand(m);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.items[0].iv, (Interval{Q(-1), Q(1), -1, 1}));
  // the canonical storage splits the central interval back at the origin
  ASSERT_EQ(m.right_items.size(), 1u);
  EXPECT_EQ(m.right_items[0].iv, (Interval{Q(0), Q(1), -1, 1}));
  // either split parity yields the same class
  MirrorClass m2 = make_mirror(Q(2), {it(Q(0), Q(1), 1, 1)});
  EXPECT_TRUE(mirror_equals(m, m2));
}

TEST(Mirror, SumThroughExpansions) {
  MirrorClass a = make_mirror(Q(3), {it(Q(0), Q(1, 2), -1, 1)});
  MirrorClass b = make_mirror(Q(3), {it(Q(1), Q(2), 1, 1, "b")});
  auto s = try_mirror_sum(a, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->right_items.size(), 2u);
  auto bad = make_mirror(Q(3), {it(Q(1, 4), Q(3, 4), 1, 1)});
  EXPECT_FALSE(try_mirror_sum(a, bad).has_value());
}

TEST(Tilde, EmbedAndValidate) {
  TildeI e;
  e.eps = Q(1, 2);
  e.span = Q(3);
  e.config.dim = 1;
  e.config.items.push_back(
      {{Q(0)}, make_class(window_right(Q(3)), {it(Q(1), Q(2), 1, 1)})});
  validate_tilde(e);
  TildeE m = tilde_embed(e);
  validate_tilde(m);
  EXPECT_EQ(m.config.items[0].second.right_items, e.config.items[0].second.items);
  // a label violating separation is rejected: closed ends at distance 1/4 < 1
  TildeI bad = e;
  bad.eps = Q(1);
  bad.config.items[0].second =
      make_class(window_right(Q(3)), {it(Q(1), Q(5, 4), 1, 1)});
  EXPECT_THROW(validate_tilde(bad), ValidationFailedError);
}

TEST(Oracle, ConfirmsReduceOnExamples) {
  Window u = window(Q(-1), Q(4));
  OracleLimits lim;
  lim.denominator = 2;
  for (const IntervalSeq& seq :
       {IntervalSeq{u, {it(Q(0), Q(1), 1, -1), it(Q(1), Q(2), 1, 1)}},
        IntervalSeq{u, {it(Q(1), Q(2), 1, -1), it(Q(2), Q(2), 1, -1)}},
        IntervalSeq{u, {it(Q(3), Q(3), 1, -1)}}}) {
    lim.max_items = static_cast<int>(seq.items.size()) + 3;
    auto r = oracle_reduce_bfs(seq, lim);
    ASSERT_EQ(r.irreducibles.size(), 1u) << print_seq(seq);
    EXPECT_EQ(r.irreducibles[0].items, reduce(seq).items);
  }
  // an already reduced element is its own closure
  IntervalSeq red{u, {it(Q(0), Q(1), 1, 1)}};
  lim.max_items = 4;
  auto r = oracle_reduce_bfs(red, lim);
  ASSERT_EQ(r.irreducibles.size(), 1u);
  EXPECT_EQ(r.irreducibles[0].items, red.items);
}

TEST(Oracle, SizeBound) {
  Window u = window(Q(0), Q(4));
  IntervalSeq seq{u, {it(Q(1), Q(2), 1, 1)}};
  OracleLimits lim;
  lim.max_items = 0;
  EXPECT_THROW(oracle_reduce_bfs(seq, lim), SizeBoundError);
}

}  // namespace
}  // namespace ivs
