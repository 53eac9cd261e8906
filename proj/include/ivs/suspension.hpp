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

#ifndef IVS_SUSPENSION_HPP
#define IVS_SUSPENSION_HPP

#include "ivs/pam.hpp"
#include "ivs/rational.hpp"

namespace ivs {

// A point [c] ^ x of Sigma X = S^1 ^ X with S^1 = [-1,1]/(+-1). Collapses to
// the basepoint when |c| = 1 or x = *; the canonical basepoint is [1] ^ *.
struct SuspensionPoint {
  Q coord = Q(1);
  PointedSym label = sym_base();

  bool is_base() const { return q_abs(coord) == Q(1) || label.is_base(); }

  friend bool operator==(const SuspensionPoint& a, const SuspensionPoint& b) {
    if (a.is_base() && b.is_base()) return true;
    if (a.is_base() != b.is_base()) return false;
    return a.coord == b.coord && a.label == b.label;
  }
};

inline SuspensionPoint susp_base() { return SuspensionPoint{}; }

// Canonicalizes so that structural fields are comparable and printable.
inline SuspensionPoint susp(Q coord, PointedSym label) {
  if (q_abs(coord) > Q(1))
    throw Error("susp: coordinate outside [-1, 1]");
  SuspensionPoint p{std::move(coord), std::move(label)};
  if (p.is_base()) return susp_base();
  return p;
}

// Pointed-set PAM on Sigma X: a pair is summable iff one member is basic.
struct SuspensionPam {
  using value_type = SuspensionPoint;
  SuspensionPoint basepoint() const { return susp_base(); }
  bool is_base(const SuspensionPoint& a) const { return a.is_base(); }
  bool equal(const SuspensionPoint& a, const SuspensionPoint& b) const {
    return a == b;
  }
  bool summable(const SuspensionPoint& a, const SuspensionPoint& b) const {
    return a.is_base() || b.is_base();
  }
  SuspensionPoint sum(const SuspensionPoint& a, const SuspensionPoint& b) const {
    if (a.is_base()) return b;
    if (b.is_base()) return a;
    throw NotSummableError("SuspensionPam: two nontrivial points");
  }
};

}  // namespace ivs

#endif  // IVS_SUSPENSION_HPP
