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

// Acceptance gate: runs every criterion at its stated size and prints one
// pass/fail line per criterion. Exit status is nonzero if any line fails.

#include <chrono>
#include <iostream>
#include <string>

#include "ivs/ivs.hpp"

namespace {

using namespace ivs;

int g_failures = 0;

void report(int number, const std::string& title, const SuiteResult& r,
            bool extra_ok = true, const std::string& extra = "") {
  bool ok = r.pass() && extra_ok;
  if (!ok) ++g_failures;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " ("
            << r.trials << " checks, " << r.failures << " failures, "
            << std::to_string(r.elapsed_s).substr(0, 6) << "s)\n";
  for (const auto& n : r.notes) std::cout << "       note: " << n << "\n";
  if (!extra.empty()) std::cout << "       " << extra << "\n";
  if (!r.pass()) std::cout << "       first: " << r.first_counterexample << "\n";
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();

  // 1. confluence against the BFS oracle: >= 10^4 sequences, <= 4 intervals,
  //    2 labels, grid denominator 8, under 5 minutes
  {
    GenSpec spec;
    spec.seed = 20260810;
    spec.max_intervals = 4;
    spec.alphabet_size = 2;
    spec.denominator = 8;
    SuiteResult r = suite_confluence(spec, 10000, /*expansion_budget=*/1);
    report(1, "confluence / normal form vs oracle", r, r.elapsed_s < 300.0,
           "runtime bound: " + std::to_string(r.elapsed_s).substr(0, 6) + "s < 300s");
  }

  // 2. PAM axioms exhaustively; order independence through length 5
  {
    SuiteResult r = suite_pam_axioms();
    report(2, "PAM axiom suite (exhaustive)", r);
  }

  // 3. welding equalities, including clipped windows
  {
    GenSpec spec;
    spec.seed = 3;
    spec.max_intervals = 4;
    SuiteResult r = suite_welding(spec, 1000);
    report(3, "welding at every window junction", r);
  }

  // 4. fiber of p at the empty configuration; eps/2 threshold vs evaluation
  {
    GenSpec spec;
    spec.seed = 4;
    SuiteResult r = suite_fiber(spec, 1000);
    report(4, "fiber at the empty configuration and the eps/2 threshold", r);
  }

  // 5. contraction endpoints and intermediate validity
  {
    GenSpec spec;
    spec.seed = 5;
    SuiteResult r = suite_contraction(spec, 1000);
    report(5, "contraction of the mirror space", r);
  }

  // 6. quasifibration homotopy identities
  {
    GenSpec spec;
    spec.seed = 6;
    SuiteResult r = suite_quasifibration(spec, 1000);
    report(6, "quasifibration homotopy identities", r);
  }

  // 7. filtration deformation: commutation and filtration descent
  {
    GenSpec spec;
    spec.seed = 7;
    SuiteResult r = suite_deformation(spec, 1000);
    report(7, "filtration deformation", r);
  }

  // 8. stratified Lipschitz bound
  {
    GenSpec spec;
    spec.seed = 8;
    SuiteResult r = suite_lipschitz(spec, 1000);
    report(8, "stratified Lipschitz bound", r, r.trials >= 1000,
           "probes: " + std::to_string(r.trials));
  }

  // 9. homomorphism: restricted identity and the gap search
  {
    GenSpec spec;
    spec.seed = 9;
    SuiteResult r = suite_homomorphism(spec, 1000);
    report(9, "alpha homomorphism: restricted identity and gap audit", r);
  }

  // 10. round trips, determinism, and the overall time budget
  {
    GenSpec spec;
    spec.seed = 10;
    SuiteResult r = suite_roundtrip(spec, 10000);
    double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(10, "serialization round trip and determinism", r, total < 600.0,
           "total acceptance runtime: " + std::to_string(total).substr(0, 6) +
               "s < 600s");
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(g_failures) +
                                      " criterion(s) failed\n");
  return g_failures == 0 ? 0 : 1;
}
