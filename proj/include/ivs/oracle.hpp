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

#ifndef IVS_ORACLE_HPP
#define IVS_ORACLE_HPP

#include <deque>
#include <set>
#include <string>
#include <vector>

#include "ivs/interval.hpp"
#include "ivs/text.hpp"

namespace ivs {

struct SizeBoundError : Error {
  using Error::Error;
};

// Bounds for the breadth-first closure of the rewriting relation. Reducing
// moves (paste, removal) are always explored exhaustively; expanding moves
// (cut, degenerate insertion) consume budget, which keeps the closure finite
// -- an unbounded cut closure is infinite, since cutting a degenerate
// duplicates it.
struct OracleLimits {
  int max_items = 12;
  int expansion_budget = 1;
  long long denominator = 8;
  std::size_t max_states = 200000;
  std::vector<PointedSym> insert_labels = {sym_base()};
};

struct OracleResult {
  std::vector<IntervalSeq> irreducibles;  // deduplicated, sorted by text
  std::size_t states_visited = 0;
};

namespace detail {

inline bool is_irreducible(const IntervalSeq& seq) {
  for (const auto& it : seq.items)
    if (it.label.is_base() || it.iv.degenerate()) return false;
  for (std::size_t i = 1; i < seq.items.size(); ++i)
    if (seq.items[i - 1].iv.right == seq.items[i].iv.left) return false;
  return true;
}

inline std::vector<IntervalSeq> oracle_moves(const IntervalSeq& seq,
                                             const OracleLimits& lim,
                                             bool allow_expansion) {
  std::vector<IntervalSeq> out;
  const auto& items = seq.items;
  // paste
  for (std::size_t j = 0; j + 1 < items.size(); ++j) {
    if (items[j].iv.right == items[j + 1].iv.left &&
        items[j].label == items[j + 1].label) {
      std::vector<IntervalItem> next = items;
      next[j] = {Interval{items[j].iv.left, items[j + 1].iv.right,
                          items[j].iv.left_parity, items[j + 1].iv.right_parity},
                 items[j].label};
      next.erase(next.begin() + j + 1);
      IntervalSeq s{seq.win, std::move(next)};
      if (validate_sequence(s)) out.push_back(std::move(s));
    }
  }
  // birth/death removal
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (items[j].label.is_base() || items[j].iv.degenerate()) {
      std::vector<IntervalItem> next = items;
      next.erase(next.begin() + j);
      IntervalSeq s{seq.win, std::move(next)};
      if (validate_sequence(s)) out.push_back(std::move(s));
    }
  }
  if (!allow_expansion) return out;
  Q g(1, lim.denominator);
  // cut: split an interval at a grid point with either junction parity
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (static_cast<int>(items.size()) + 1 > lim.max_items) break;
    const Interval& iv = items[j].iv;
    for (Q w = iv.left; w <= iv.right; w += g) {
      for (Parity s : {+1, -1}) {
        Interval a{iv.left, w, iv.left_parity, s};
        Interval b{w, iv.right, -s, iv.right_parity};
        if (!a.valid() || !b.valid()) continue;
        std::vector<IntervalItem> next = items;
        next[j] = {a, items[j].label};
        next.insert(next.begin() + j + 1, {b, items[j].label});
        IntervalSeq sq{seq.win, std::move(next)};
        if (validate_sequence(sq)) out.push_back(std::move(sq));
      }
    }
  }
  // birth: insert a removable degenerate anywhere on the grid
  if (static_cast<int>(items.size()) + 1 <= lim.max_items && seq.win.finite()) {
    for (Q w = *seq.win.lo + g; w < *seq.win.hi; w += g) {
      for (Parity p : {+1, -1}) {
        for (const auto& lab : lim.insert_labels) {
          IntervalItem deg{Interval{w, w, p, -p}, lab};
          std::vector<IntervalItem> next = items;
          auto pos = std::upper_bound(next.begin(), next.end(), deg,
                                      item_order_less);
          next.insert(pos, deg);
          IntervalSeq sq{seq.win, std::move(next)};
          if (validate_sequence(sq)) out.push_back(std::move(sq));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

// Breadth-first closure of single rewrites from `seq`; returns every
// irreducible representative reached. Confluence of the reduction relation
// shows up as a singleton equal to reduce(seq).
inline OracleResult oracle_reduce_bfs(const IntervalSeq& seq,
                                      const OracleLimits& lim = {}) {
  if (!validate_sequence(seq))
    throw InvalidSequenceError("oracle: input violates the adjacency conditions");
  if (static_cast<int>(seq.items.size()) > lim.max_items)
    throw SizeBoundError("oracle: input exceeds the size bound");
  struct State {
    IntervalSeq seq;
    int budget;
  };
  std::deque<State> queue;
  std::set<std::string> visited;
  std::set<std::string> irreducible_texts;
  std::vector<IntervalSeq> irreducibles;
  auto key = [](const IntervalSeq& s, int budget) {
    return std::to_string(budget) + "|" + print_seq(s);
  };
  queue.push_back({seq, lim.expansion_budget});
  visited.insert(key(seq, lim.expansion_budget));
  OracleResult res;
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    ++res.states_visited;
    if (res.states_visited > lim.max_states)
      throw SizeBoundError("oracle: state bound exceeded");
    if (detail::is_irreducible(st.seq)) {
      std::string t = print_seq(st.seq);
      if (irreducible_texts.insert(t).second) irreducibles.push_back(st.seq);
    }
    auto reducts = detail::oracle_moves(st.seq, lim, /*allow_expansion=*/false);
    for (auto& nxt : reducts) {
      std::string k = key(nxt, st.budget);
      if (visited.insert(k).second) queue.push_back({std::move(nxt), st.budget});
    }
    if (st.budget > 0) {
      auto all = detail::oracle_moves(st.seq, lim, /*allow_expansion=*/true);
      for (std::size_t i = reducts.size(); i < all.size(); ++i) {
        std::string k = key(all[i], st.budget - 1);
        if (visited.insert(k).second)
          queue.push_back({std::move(all[i]), st.budget - 1});
      }
    }
  }
  std::sort(irreducibles.begin(), irreducibles.end(),
            [](const IntervalSeq& a, const IntervalSeq& b) {
              return print_seq(a) < print_seq(b);
            });
  res.irreducibles = std::move(irreducibles);
  return res;
}

}  // namespace ivs

#endif  // IVS_ORACLE_HPP
