// Copyright 2026 The Quarrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quarrel/game.hpp"

namespace quarrel {

/// A violating pair: smaller wins, larger loses.
struct ViolatingPair {
  PlayerSet smaller;  // T, in W
  PlayerSet larger;   // S, a strict superset of T, not in W
  friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct MonotonicityReport {
  bool is_monotonic = true;
  /// Least k for which the game is k-monotonic. Empty means no k <= n works,
  /// which happens only when the empty coalition wins and some set loses.
  std::optional<int> min_k = 0;
  /// The first violating pairs in (T, S) ascending-mask order, capped by the
  /// limit passed to min_k_monotonicity.
  std::vector<ViolatingPair> violating_pairs;
  bool violating_pairs_truncated = false;
};

namespace detail {

inline constexpr int kUnbounded = -1;

/// For every T that has a losing strict superset, the fewest members of T
/// whose removal makes T lose (0 if T already loses, kUnbounded if no subset
/// of T loses). Entries for T without a losing strict superset are 0.
inline std::vector<int> removal_costs(const VotingGame& g) {
  const std::size_t size = g.division_count();
  const int n = g.n();

  // Largest losing subset of each T, or -1.
  std::vector<int> largest_losing(size, -1);
  for (std::size_t m = 0; m < size; ++m) {
    const PlayerSet t(static_cast<PlayerSet::Mask>(m));
    if (!g.wins(t)) {
      largest_losing[m] = t.size();
      continue;
    }
    int best = -1;
    for (Player p : t.members()) best = std::max(best, largest_losing[t.without(p).mask()]);
    largest_losing[m] = best;
  }

  // Whether some superset (not necessarily strict) of T loses.
  std::vector<bool> losing_above(size, false);
  for (std::size_t m = size; m-- > 0;) {
    const PlayerSet t(static_cast<PlayerSet::Mask>(m));
    bool any = !g.wins(t);
    for (Player p = 0; p < n && !any; ++p) {
      if (!t.contains(p)) any = losing_above[t.with(p).mask()];
    }
    losing_above[m] = any;
  }

  std::vector<int> cost(size, 0);
  for (std::size_t m = 0; m < size; ++m) {
    const PlayerSet t(static_cast<PlayerSet::Mask>(m));
    if (!g.wins(t)) continue;
    bool strict_losing_above = false;
    for (Player p = 0; p < n && !strict_losing_above; ++p) {
      if (!t.contains(p)) strict_losing_above = losing_above[t.with(p).mask()];
    }
    if (!strict_losing_above) continue;
    cost[m] = largest_losing[m] < 0 ? kUnbounded : t.size() - largest_losing[m];
  }
  return cost;
}

}  // namespace detail

/// Smallest k such that every losing S and every strict subset T of S either
/// loses or loses after discarding some K within T, |K| <= k.
inline std::optional<int> min_k(const VotingGame& g) {
  int worst = 0;
  for (int c : detail::removal_costs(g)) {
    if (c == detail::kUnbounded) return std::nullopt;
    worst = std::max(worst, c);
  }
  return worst;
}

inline bool is_k_monotonic(const VotingGame& g, int k) {
  const std::optional<int> m = min_k(g);
  return m.has_value() && *m <= k;
}

/// Lists violating pairs in ascending (T, S) mask order, stopping after `limit`.
inline std::vector<ViolatingPair> violating_pairs(const VotingGame& g, std::size_t limit,
                                                  bool* truncated = nullptr) {
  std::vector<ViolatingPair> out;
  if (truncated) *truncated = false;
  const PlayerSet all = g.players();
  for (std::size_t m = 0; m < g.division_count(); ++m) {
    const PlayerSet t(static_cast<PlayerSet::Mask>(m));
    if (!g.wins(t)) continue;
    const PlayerSet::Mask rest = (all - t).mask();
    // Ascending walk over the nonempty subsets of `rest`.
    for (PlayerSet::Mask sub = (0 - rest) & rest; sub != 0; sub = (sub - rest) & rest) {
      const PlayerSet s = t | PlayerSet(sub);
      if (g.wins(s)) continue;
      if (out.size() == limit) {
        if (truncated) *truncated = true;
        return out;
      }
      out.push_back({t, s});
    }
  }
  return out;
}

inline constexpr std::size_t kDefaultPairLimit = 1000;

inline MonotonicityReport min_k_monotonicity(const VotingGame& g,
                                             std::size_t pair_limit = kDefaultPairLimit) {
  MonotonicityReport report;
  report.min_k = min_k(g);
  report.is_monotonic = report.min_k == 0;
  if (!report.is_monotonic) {
    report.violating_pairs =
        violating_pairs(g, std::max<std::size_t>(pair_limit, 1), &report.violating_pairs_truncated);
  }
  return report;
}

}  // namespace quarrel
