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
#include <string>
#include <utility>
#include <vector>

#include "quarrel/enumerate.hpp"
#include "quarrel/game.hpp"
#include "quarrel/rule.hpp"
#include "quarrel/transforms.hpp"

namespace quarrel {

/// One condition of the cooperative-success-reduction test.
///
/// For the universal conditions (YQ-1, NQ-1) `witness` is the first
/// counterexample S. For the existential ones (YQ-2, NQ-2) it is the S that
/// shows the reduction when the condition holds substantively, or the
/// division in which the pair effectively cooperated when it fails.
struct CsrCondition {
  bool holds = true;
  /// Satisfied only because the game is outside CY (or CN).
  bool vacuous = false;
  std::optional<PlayerSet> witness;
};

struct CSRReport {
  CsrCondition yq1, yq2, nq1, nq2;

  bool yes_side_holds() const { return yq1.holds && yq2.holds; }
  bool no_side_holds() const { return nq1.holds && nq2.holds; }
};

/// Elimination variants: whenever both were decisive together, the derived
/// game makes them both unsuccessful.
struct StrongCSRReport {
  bool yq_holds = true;
  bool nq_holds = true;
  std::optional<PlayerSet> yq_witness;
  std::optional<PlayerSet> nq_witness;
  /// Whether any S satisfied the YQ' (NQ') antecedent at all.
  bool yq_antecedent_met = false;
  bool nq_antecedent_met = false;
};

struct AmbushWitness {
  PlayerSet rest;  // S, disjoint from the pair
  Player voter;    // the pair member voting yes alone in S + {voter}
  friend bool operator==(const AmbushWitness&, const AmbushWitness&) = default;
};

struct NoAmbushReport {
  bool holds = true;
  std::vector<AmbushWitness> witnesses;
};

/// A division over which the derived game is non-monotonic across the pair.
/// `non_decisive` names the pair member playing the role whose vote did not
/// matter in the original game.
struct NmqWitness {
  PlayerSet division;
  Player non_decisive;
  friend bool operator==(const NmqWitness&, const NmqWitness&) = default;
};

namespace detail {

inline PlayerSet check_pair(const VotingGame& g, const VotingGame& g_hat, Player i, Player j) {
  if (g.n() != g_hat.n()) throw InputError("games have different player counts");
  g.require_player(i);
  g.require_player(j);
  if (i == j) throw InputError("the quarrelling pair must be two distinct players");
  return PlayerSet{}.with(i).with(j);
}

}  // namespace detail

inline CSRReport verify_csr(const VotingGame& g, const VotingGame& g_hat, Player i, Player j) {
  const PlayerSet pair = detail::check_pair(g, g_hat, i, j);
  const PlayerSet others = g.players() - pair;
  CSRReport r;

  std::optional<PlayerSet> yes_reduced, no_reduced;
  for_each_subset(others, [&](PlayerSet s) {
    const PlayerSet x = s | pair;
    if (g_hat.wins(x) && !g.wins(x) && r.yq1.holds) {
      r.yq1 = {false, false, s};
    }
    if (g.wins(s) && !g_hat.wins(s) && r.nq1.holds) {
      r.nq1 = {false, false, s};
    }
    if (g.wins(x) && !g_hat.wins(x) && (!yes_reduced || s < *yes_reduced)) yes_reduced = s;
    if (!g.wins(s) && g_hat.wins(s) && (!no_reduced || s < *no_reduced)) no_reduced = s;
  });

  auto existential = [&](Side side, const std::optional<PlayerSet>& reduced) {
    if (!has_effective_cooperation(g, i, j, side)) return CsrCondition{true, true, std::nullopt};
    if (reduced) return CsrCondition{true, false, reduced};
    // Report where the pair did cooperate effectively.
    std::optional<PlayerSet> where;
    for_each_subset(others, [&](PlayerSet s) {
      if (where) return;
      const PlayerSet x = side == Side::kYes ? (s | pair) : s;
      if (is_decisive(g, x, i) && is_decisive(g, x, j)) where = x;
    });
    return CsrCondition{false, false, where};
  };
  r.yq2 = existential(Side::kYes, yes_reduced);
  r.nq2 = existential(Side::kNo, no_reduced);
  return r;
}

inline StrongCSRReport verify_strong_csr(const VotingGame& g, const VotingGame& g_hat, Player i,
                                         Player j) {
  const PlayerSet pair = detail::check_pair(g, g_hat, i, j);
  StrongCSRReport r;
  for_each_subset(g.players() - pair, [&](PlayerSet s) {
    const bool wi = g.wins(s.with(i));
    const bool wj = g.wins(s.with(j));
    if (g.wins(s | pair) && !wi && !wj) {
      r.yq_antecedent_met = true;
      if (g_hat.wins(s | pair) && r.yq_holds) {
        r.yq_holds = false;
        r.yq_witness = s;
      }
    }
    if (!g.wins(s) && wi && wj) {
      r.nq_antecedent_met = true;
      if (!g_hat.wins(s) && r.nq_holds) {
        r.nq_holds = false;
        r.nq_witness = s;
      }
    }
  });
  return r;
}

/// Divisions where exactly one of the pair votes yes must keep their outcome.
inline NoAmbushReport verify_no_ambush_betrayal(const VotingGame& g, const VotingGame& g_hat,
                                                Player i, Player j) {
  const PlayerSet pair = detail::check_pair(g, g_hat, i, j);
  NoAmbushReport r;
  for_each_subset(g.players() - pair, [&](PlayerSet s) {
    for (Player p : {i, j}) {
      if (g.wins(s.with(p)) != g_hat.wins(s.with(p))) r.witnesses.push_back({s, p});
    }
  });
  std::sort(r.witnesses.begin(), r.witnesses.end(), [&](const auto& a, const auto& b) {
    if (a.rest != b.rest) return a.rest < b.rest;
    return (a.voter == i) > (b.voter == i);
  });
  r.holds = r.witnesses.empty();
  return r;
}

/// Whether quarrelling commutes with complementation on this game.
inline bool verify_symmetry(const QuarrelRule& rule, const VotingGame& g) {
  return complement(apply(rule, g)) == apply(rule, complement(g));
}

/// Whether i's quarrel with j equals j's quarrel with i on this game.
inline bool verify_reciprocality(const QuarrelRule& rule, const VotingGame& g) {
  return apply(rule, g) == apply(rule.reversed(), g);
}

/// Every division over which g_hat is non-monotonic across the pair, trying
/// each pair member in the non-decisive role. Ordered by division, then role
/// (i before j).
inline std::vector<NmqWitness> detect_nmq(const VotingGame& g, const VotingGame& g_hat, Player i,
                                          Player j) {
  const PlayerSet pair = detail::check_pair(g, g_hat, i, j);
  std::vector<NmqWitness> out;
  for (std::size_t m = 0; m < g.division_count(); ++m) {
    const PlayerSet s(static_cast<PlayerSet::Mask>(m));
    for (Player p : {i, j}) {
      bool hit = false;
      if (s.contains(pair)) {
        const PlayerSet less = s.without(p);
        hit = g.wins(s) && g.wins(less) && !g_hat.wins(s) && g_hat.wins(less);
      } else if (s.disjoint(pair)) {
        const PlayerSet more = s.with(p);
        hit = !g.wins(s) && !g.wins(more) && g_hat.wins(s) && !g_hat.wins(more);
      }
      if (hit) out.push_back({s, p});
    }
  }
  return out;
}

struct DnqResult {
  bool disposed = true;
  /// Games on which the disposition was tested.
  std::size_t applicable_games = 0;
  /// First applicable game (enumeration order) without an NMQ witness.
  std::optional<VotingGame> counterexample;
};

/// Whether g has a division where the pair votes together and wins (or loses
/// together on the no side), one member is not decisive there and the other is.
inline bool has_lopsided_joint_success(const VotingGame& g, Player i, Player j) {
  const PlayerSet pair = PlayerSet{}.with(i).with(j);
  bool found = false;
  for_each_subset(g.players() - pair, [&](PlayerSet s) {
    if (found) return;
    const PlayerSet x = s | pair;
    for (auto [idle, active] : {std::pair{i, j}, std::pair{j, i}}) {
      if (g.wins(x) && g.wins(x.without(idle)) && !g.wins(x.without(active))) found = true;
      if (!g.wins(s) && !g.wins(s.with(idle)) && g.wins(s.with(active))) found = true;
    }
  });
  return found;
}

/// Exhaustive disposition test: every monotonic game on n players with a
/// lopsided joint success for the rule's pair must yield an NMQ witness.
inline DnqResult check_dnq(const QuarrelRule& rule, int n) {
  if (n < 2) throw InputError("quarrels need at least two players");
  if (n > 4) throw CapabilityError("disposition checks are exhaustive and limited to n <= 4");
  if (rule.i >= n || rule.j >= n) throw InputError("quarrel pair out of range for n");
  DnqResult r;
  for_each_monotonic_game(n, false, [&](const VotingGame& g) {
    if (!has_lopsided_joint_success(g, rule.i, rule.j)) return;
    ++r.applicable_games;
    if (!detect_nmq(g, apply(rule, g), rule.i, rule.j).empty()) return;
    if (r.disposed) {
      r.disposed = false;
      r.counterexample = g;
    }
  });
  return r;
}

}  // namespace quarrel
