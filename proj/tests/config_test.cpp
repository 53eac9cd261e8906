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

#include <random>

#include "ivs/config.hpp"
#include "ivs/loop.hpp"
#include "ivs/text.hpp"

namespace ivs {
namespace {

SignPam sp;

PointConfig<SignLabel> cfg1(std::vector<std::pair<Q, int8_t>> pts) {
  RawConfig<SignLabel> raw;
  raw.dim = 1;
  for (auto& [x, v] : pts) raw.items.push_back({{x}, SignLabel{v}});
  return normalize_config(sp, raw);
}

TEST(Config, Normalize) {
  // basepoint labels vanish
  EXPECT_TRUE(cfg1({{Q(2), 0}}).empty());
  // annihilation at a shared point
  EXPECT_TRUE(cfg1({{Q(1), 1}, {Q(1), -1}}).empty());
  // canonical sort
  auto c = cfg1({{Q(2), 1}, {Q(0), -1}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.items[0].first[0], Q(0));
  EXPECT_EQ(c.items[1].first[0], Q(2));
  // a non-summable coincident group is rejected
  RawConfig<SignLabel> bad{1, {{{Q(1)}, SignLabel{1}}, {{Q(1)}, SignLabel{1}}}};
  EXPECT_FALSE(validate_raw(sp, bad));
  EXPECT_THROW(normalize_config(sp, bad), InvalidRawError);
}

TEST(Config, NormalizeExhaustivelyIdempotentAndPermutationInvariant) {
  // all raw tuples with <= 4 items over points {0, 1} and sign labels
  std::vector<std::pair<QPoint, SignLabel>> atoms;
  for (int p = 0; p <= 1; ++p)
    for (int v : {-1, 0, 1}) atoms.push_back({{Q(p)}, SignLabel{static_cast<int8_t>(v)}});
  std::vector<std::vector<int>> tuples = {{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int a = 0; a < static_cast<int>(atoms.size()); ++a) {
        auto u = t;
        u.push_back(a);
        next.push_back(u);
      }
    for (const auto& t : next) {
      RawConfig<SignLabel> raw;
      raw.dim = 1;
      for (int a : t) raw.items.push_back(atoms[a]);
      if (!validate_raw(sp, raw)) continue;
      auto nf = normalize_config(sp, raw);
      // idempotent
      RawConfig<SignLabel> again{1, nf.items};
      EXPECT_TRUE(config_equals(sp, normalize_config(sp, again), nf));
      // permutation invariant (reversal suffices together with exhaustion)
      RawConfig<SignLabel> rev = raw;
      std::reverse(rev.items.begin(), rev.items.end());
      EXPECT_TRUE(config_equals(sp, normalize_config(sp, rev), nf));
    }
    tuples = next;
  }
}

TEST(Config, SumExamples) {
  EXPECT_TRUE(config_sum(sp, cfg1({{Q(1), 1}}), cfg1({{Q(1), -1}})).empty());
  auto c = config_sum(sp, cfg1({{Q(0), 1}}), cfg1({{Q(2), 1}}));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_THROW(config_sum(sp, cfg1({{Q(0), 1}}), cfg1({{Q(0), 1}})), NotSummableError);
}

TEST(Config, SumAlgebraRandomized) {
  std::mt19937_64 rng(7);
  auto rnd = [&]() {
    // one label per point keeps the raw tuple valid by construction
    std::vector<std::pair<Q, int8_t>> pts;
    uint64_t mask = rng() % 32;
    for (int p = 0; p < 5; ++p)
      if (mask & (uint64_t(1) << p))
        pts.push_back({Q(p), static_cast<int8_t>(static_cast<int>(rng() % 3) - 1)});
    return cfg1(pts);
  };
  PointConfig<SignLabel> unit{1, {}};
  long done = 0;
  for (long i = 0; i < 12000; ++i) {
    auto a = rnd();
    auto b = rnd();
    auto c = rnd();
    auto ab = try_config_sum(sp, a, b);
    auto ba = try_config_sum(sp, b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) {
      EXPECT_TRUE(config_equals(sp, *ab, *ba));
    }
    EXPECT_TRUE(config_equals(sp, *try_config_sum(sp, a, unit), a));
    if (!ab) continue;
    auto bc = try_config_sum(sp, b, c);
    if (!bc) continue;
    auto l = try_config_sum(sp, *ab, c);
    auto r = try_config_sum(sp, a, *bc);
    // associativity where both sides are defined
    if (l && r) {
      EXPECT_TRUE(config_equals(sp, *l, *r));
      ++done;
    }
  }
  EXPECT_GT(done, 1000);
}

TEST(Config, PaddedRepresentativeCriterionAgrees) {
  // the per-shared-point summability criterion coincides with the definition
  // through representatives padded by basepoint labels: exhaust configs on
  // points {0, 1, 2} with at most one particle each
  std::vector<PointConfig<SignLabel>> all;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        all.push_back(cfg1({{Q(0), static_cast<int8_t>(a)},
                            {Q(1), static_cast<int8_t>(b)},
                            {Q(2), static_cast<int8_t>(c)}}));
  auto padded_summable = [&](const PointConfig<SignLabel>& x,
                             const PointConfig<SignLabel>& y) {
    // common support, padding with zeros; every point must carry a summable
    // pair of labels
    for (const Q& p : {Q(0), Q(1), Q(2)}) {
      SignLabel lx{0}, ly{0};
      for (const auto& [pt, v] : x.items)
        if (pt[0] == p) lx = v;
      for (const auto& [pt, v] : y.items)
        if (pt[0] == p) ly = v;
      if (!sp.summable(lx, ly)) return false;
    }
    return true;
  };
  for (const auto& x : all)
    for (const auto& y : all)
      EXPECT_EQ(try_config_sum(sp, x, y).has_value(), padded_summable(x, y));
}

TEST(Config, MapLabels) {
  auto c = cfg1({{Q(0), 1}, {Q(3), -1}});
  auto ident = map_labels(sp, [](const SignLabel& v) { return v; }, c);
  EXPECT_TRUE(config_equals(sp, ident, c));
  auto collapse =
      map_labels(sp, [](const SignLabel&) { return SignLabel{0}; }, c);
  EXPECT_TRUE(collapse.empty());
  // negation is a PAM automorphism and commutes with sums
  auto neg = [](const SignLabel& v) { return SignLabel{static_cast<int8_t>(-v.value)}; };
  auto n = map_labels(sp, neg, cfg1({{Q(1), 1}}));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n.items[0].second, SignLabel{-1});
  auto a = cfg1({{Q(0), 1}});
  auto b = cfg1({{Q(1), -1}});
  EXPECT_TRUE(config_equals(sp, map_labels(sp, neg, config_sum(sp, a, b)),
                            config_sum(sp, map_labels(sp, neg, a),
                                       map_labels(sp, neg, b))));
}

TEST(Config, FiltrationIndex) {
  std::function<bool(const SignLabel&)> base_only = [](const SignLabel& v) {
    return v.value == 0;
  };
  EXPECT_EQ(filtration_index(cfg1({}), base_only), 0);
  EXPECT_EQ(filtration_index(cfg1({{Q(1), 1}}), base_only), 1);
  // with A = {basepoint} the index is the number of points
  auto c = cfg1({{Q(0), 1}, {Q(1), -1}, {Q(2), 1}});
  EXPECT_EQ(filtration_index(c, base_only), static_cast<int>(c.size()));
  // subadditive under sums
  auto a = cfg1({{Q(0), 1}, {Q(1), 1}});
  auto b = cfg1({{Q(1), -1}});
  auto s = config_sum(sp, a, b);
  EXPECT_LE(filtration_index(s, base_only),
            filtration_index(a, base_only) + filtration_index(b, base_only));
}

TEST(Config, InterchangeEval) {
  // single item: evaluation is the label's value, normalized
  PointConfig<PiecewiseLoop> cfg;
  cfg.dim = 1;
  cfg.items.push_back({{Q(0)}, constant_base_loop(Q(0), Q(2))});
  EXPECT_TRUE(interchange_eval(cfg, Q(1)).empty());
  PointConfig<PiecewiseLoop> empty{1, {}};
  EXPECT_TRUE(interchange_eval(empty, Q(0)).empty());
}

TEST(Config, DimZero) {
  // R^0 has a single point; coincident labels merge
  RawConfig<SignLabel> raw{0, {{{}, SignLabel{1}}, {{}, SignLabel{-1}}}};
  EXPECT_TRUE(normalize_config(sp, raw).empty());
}

}  // namespace
}  // namespace ivs
