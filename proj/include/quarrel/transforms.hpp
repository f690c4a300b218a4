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

#include "quarrel/game.hpp"
#include "quarrel/rule.hpp"

namespace quarrel {

struct ApplyOptions {
  /// Force [n] into the derived W and the empty set out of it, restoring
  /// unanimity for rules (notably cataclysmic ones) that break it.
  bool unanimity_patch = false;
};

namespace detail {

inline void check_quarrel_input(const QuarrelRule& rule, const VotingGame& g) {
  if (g.n() < 2) throw InputError("quarrels need at least two players");
  g.require_player(rule.i);
  g.require_player(rule.j);
  if (!is_monotonic(g)) {
    throw InputError("quarrels are defined only over initially monotonic games");
  }
}

/// Outcome of S + {i, j} in the derived game.
inline bool yes_side(const RuleKind& k, const VotingGame& g, PlayerSet s, Player i, Player j) {
  const bool recip = k.direction == Direction::kReciprocal;
  switch (k.degree) {
    case Degree::kWeak:
      return g.wins(s.with(i)) || g.wins(s.with(j));
    case Degree::kStrong:
      return recip ? g.wins(s) : g.wins(s.with(j));
    case Degree::kCataclysmic:
      return recip ? g.wins(PlayerSet{}) : g.wins(PlayerSet{}.with(j));
  }
  return false;
}

/// Outcome of S (i and j both voting no) in the derived game.
inline bool no_side(const RuleKind& k, const VotingGame& g, PlayerSet s, Player i, Player j) {
  const bool recip = k.direction == Direction::kReciprocal;
  switch (k.degree) {
    case Degree::kWeak:
      return g.wins(s.with(i)) && g.wins(s.with(j));
    case Degree::kStrong:
      return recip ? g.wins(s.with(i).with(j)) : g.wins(s.with(i));
    case Degree::kCataclysmic:
      return recip ? g.wins(g.players()) : g.wins(g.players().without(j));
  }
  return false;
}

/// Yes-only or symmetric transform. Divisions where the pair disagrees are
/// always copied; the no side is copied unless the scope is symmetric.
inline VotingGame apply_direct(const QuarrelRule& rule, const VotingGame& g) {
  const Player i = rule.i;
  const Player j = rule.j;
  const PlayerSet pair = PlayerSet{}.with(i).with(j);
  VotingGame out = g;
  for_each_subset(g.players() - pair, [&](PlayerSet s) {
    out.set(s | pair, yes_side(rule.kind, g, s, i, j));
    if (rule.kind.scope == Scope::kSymmetric) out.set(s, no_side(rule.kind, g, s, i, j));
  });
  return out;
}

}  // namespace detail

/// Derives the quarrel game from a monotonic game.
///
/// No-only rules are the complement conjugate of the matching yes-only rule:
/// apply the yes-only rule to g^C and complement the result.
inline VotingGame apply(const QuarrelRule& rule, const VotingGame& g, ApplyOptions options = {}) {
  detail::check_quarrel_input(rule, g);
  VotingGame out = [&] {
    if (rule.kind.scope != Scope::kNoOnly) return detail::apply_direct(rule, g);
    QuarrelRule yes_rule = rule;
    yes_rule.kind.scope = Scope::kYesOnly;
    return complement(detail::apply_direct(yes_rule, complement(g)));
  }();
  if (options.unanimity_patch) {
    out.set(g.players(), true);
    out.set(PlayerSet{}, false);
  }
  return out;
}

/// i quarrels with j by the original two-case definition: for S containing j
/// the outcome is that of S - {i}, otherwise that of S + {i}. Kept separate
/// from the taxonomy path so the two can be compared.
inline VotingGame apply_lv_definition(const VotingGame& g, Player i, Player j) {
  detail::check_quarrel_input(QuarrelRule(kLaruelleValenciano, i, j), g);
  return VotingGame::from_predicate(g.n(), [&](PlayerSet s) {
    return s.contains(j) ? g.wins(s.without(i)) : g.wins(s.with(i));
  });
}

/// Any coalition holding both i and j loses; everything else is unchanged.
inline VotingGame apply_fm_definition(const VotingGame& g, Player i, Player j) {
  detail::check_quarrel_input(QuarrelRule(kFelsenthalMachover, i, j), g);
  return VotingGame::from_predicate(g.n(), [&](PlayerSet s) {
    return !(s.contains(i) && s.contains(j)) && g.wins(s);
  });
}

}  // namespace quarrel
