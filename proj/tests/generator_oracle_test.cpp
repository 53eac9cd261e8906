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
#include "ivs/oracle.hpp"
#include "ivs/suite.hpp"
#include "ivs/text.hpp"

namespace ivs {
namespace {

TEST(Generator, DeterministicUnderSeed) {
  GenSpec spec;
  spec.seed = 99;
  Gen a(spec), b(spec);
  for (int i = 0; i < 50; ++i) {
    Q s1, s2;
    Q e1 = a.pick_eps(), e2 = b.pick_eps();
    ASSERT_EQ(e1, e2);
    EXPECT_EQ(print_class(a.iclass(e1, s1)), print_class(b.iclass(e2, s2)));
  }
}

TEST(Generator, OutputsPassValidators) {
  GenSpec spec;
  spec.seed = 17;
  spec.max_intervals = 4;
  Gen gen(spec);
  for (int i = 0; i < 200; ++i) {
    Q eps = gen.pick_eps();
    Q span;
    IntervalClass c = gen.iclass(eps, span);
    EXPECT_TRUE(is_reduced(c));
    EXPECT_TRUE(eps_separated(c, eps));
    MirrorClass m = gen.mirror(eps, span);
    EXPECT_TRUE(mirror_eps_separated(m, eps));
    validate_tilde(gen.tilde_i());
    validate_tilde(gen.tilde_e());
  }
}

TEST(Generator, MaxIntervalsZeroGivesEmpty) {
  GenSpec spec;
  spec.seed = 4;
  spec.max_intervals = 0;
  spec.max_points = 0;
  Gen gen(spec);
  Q span;
  EXPECT_TRUE(gen.iclass(gen.pick_eps(), span).empty());
  EXPECT_TRUE(gen.tilde_i().config.empty());
}

TEST(Generator, InfeasibleSpec) {
  GenSpec spec;
  spec.seed = 4;
  spec.span_max = Q(1, 4);  // cannot even hold the margins at eps = 1/2
  spec.eps_min = spec.eps_max = Q(1, 2);
  spec.max_intervals = 3;
  Gen gen(spec);
  bool threw = false;
  for (int i = 0; i < 50 && !threw; ++i) {
    try {
      Q span;
      gen.iclass(Q(1, 2), span);
    } catch (const InfeasibleSpecError&) {
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(Oracle, AgreesWithReduceOnGeneratedSequences) {
  GenSpec spec;
  spec.seed = 21;
  spec.max_intervals = 3;
  SuiteResult r = suite_confluence(spec, 300);
  EXPECT_TRUE(r.pass()) << r.first_counterexample;
}

TEST(Oracle, MutantReduceIsCaught) {
  // flipping the pasted right parity must produce a counterexample
  GenSpec spec;
  spec.seed = 21;
  spec.max_intervals = 3;
  ReduceFn mutant = [](const IntervalSeq& seq) {
    IntervalClass c = reduce(seq);
    bool pasted = c.items.size() < seq.items.size();
    if (pasted && !c.items.empty()) {
      IntervalClass broken = c;
      broken.items[0].iv.right_parity = -broken.items[0].iv.right_parity;
      if (broken.items[0].iv.valid() && is_reduced(broken)) return broken;
    }
    return c;
  };
  SuiteResult r = suite_confluence(spec, 300, 1, mutant);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.first_counterexample.empty());
}

TEST(Oracle, RepresentativeDependenceSearchTerminates) {
  GenSpec spec;
  spec.seed = 33;
  SuiteResult r = suite_representative_dependence(spec, 60);
  EXPECT_TRUE(r.pass());
  ASSERT_FALSE(r.notes.empty());
}

TEST(Suites, OtherDimensions) {
  // the configuration dimension is a runtime parameter; R^0 and R^2 both work
  for (int dim : {0, 2}) {
    GenSpec spec;
    spec.seed = 41 + dim;
    spec.dim = dim;
    SuiteReport rep =
        run_property_suite({"fiber", "quasifibration", "deformation"}, spec, 30);
    for (const auto& r : rep.results)
      EXPECT_TRUE(r.pass()) << "dim " << dim << ": " << r.name << ": "
                            << r.first_counterexample;
  }
}

TEST(Suites, RunnerDispatchAndReport) {
  GenSpec spec;
  spec.seed = 3;
  SuiteReport rep = run_property_suite({"welding", "fiber"}, spec, 40);
  ASSERT_EQ(rep.results.size(), 2u);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.results[0].name, "welding");
  EXPECT_THROW(run_property_suite({"nope"}, spec, 1), Error);
  // empty name list gives an empty report
  EXPECT_TRUE(run_property_suite({}, spec, 1).results.empty());
}

}  // namespace
}  // namespace ivs
