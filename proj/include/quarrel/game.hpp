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
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quarrel/player_set.hpp"
#include "quarrel/rational.hpp"

namespace quarrel {

enum class Outcome { kNo, kYes };

/// Which side of a division a pair of players votes on.
enum class Side { kYes, kNo };

/// A binary voting game on n players, stored extensionally as the set W of
/// yes-successful coalitions (one bit per division).
///
/// No monotonicity is assumed: quarrel transforms routinely produce
/// non-monotonic games and every query here is defined for them.
class VotingGame {
 public:
  /// The all-no game on n players.
  explicit VotingGame(int n) : n_(check_n(n)), table_(std::size_t{1} << n) {}

  static VotingGame from_winning_sets(int n, std::span<const PlayerSet> winning) {
    VotingGame g(n);
    for (PlayerSet s : winning) {
      if (!s.within(n)) {
        throw InputError("coalition " + to_string(s) + " is not a subset of [" +
                         std::to_string(n) + "]");
      }
      g.table_[s.mask()] = true;
    }
    return g;
  }

  static VotingGame from_winning_sets(int n, std::initializer_list<PlayerSet> winning) {
    return from_winning_sets(n, std::span<const PlayerSet>(winning.begin(), winning.size()));
  }

  /// Weighted majority: S wins iff its total weight reaches the quota.
  static VotingGame weighted(std::span<const Rational> weights, const Rational& quota) {
    if (weights.empty()) throw InputError("weighted game needs at least one weight");
    if (quota <= 0) throw InputError("quota must be positive");
    for (const Rational& w : weights) {
      if (w < 0) throw InputError("weights must be nonnegative");
    }
    if (weights.size() > static_cast<std::size_t>(kMaxPlayers)) {
      throw CapabilityError("at most " + std::to_string(kMaxPlayers) + " players supported");
    }
    const int n = static_cast<int>(weights.size());
    return from_predicate(n, [&](PlayerSet s) {
      Rational total = 0;
      for (Player p : s.members()) total += weights[p];
      return total >= quota;
    });
  }

  template <typename Pred>
  static VotingGame from_predicate(int n, Pred&& wins) {
    VotingGame g(n);
    for (std::size_t m = 0; m < g.table_.size(); ++m) {
      g.table_[m] = static_cast<bool>(wins(PlayerSet(static_cast<PlayerSet::Mask>(m))));
    }
    return g;
  }

  int n() const { return n_; }
  PlayerSet players() const { return PlayerSet::full(n_); }
  std::size_t division_count() const { return table_.size(); }

  /// Membership test S in W. Caller guarantees S is within [n].
  bool wins(PlayerSet s) const { return table_[s.mask()]; }

  Outcome outcome(PlayerSet yes_set) const {
    require_within(yes_set);
    return wins(yes_set) ? Outcome::kYes : Outcome::kNo;
  }

  void set(PlayerSet s, bool winning) { table_[s.mask()] = winning; }

  /// W, ordered by ascending bitmask.
  std::vector<PlayerSet> winning_sets() const {
    std::vector<PlayerSet> out;
    for (std::size_t m = 0; m < table_.size(); ++m) {
      if (table_[m]) out.emplace_back(static_cast<PlayerSet::Mask>(m));
    }
    return out;
  }

  std::size_t winning_count() const {
    return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), true));
  }

  void require_within(PlayerSet s) const {
    if (!s.within(n_)) {
      throw InputError("set " + to_string(s) + " is not a subset of [" + std::to_string(n_) + "]");
    }
  }
  void require_player(Player p) const {
    if (p < 0 || p >= n_) {
      throw InputError("player " + std::to_string(p + 1) + " out of range 1.." +
                       std::to_string(n_));
    }
  }

  friend bool operator==(const VotingGame&, const VotingGame&) = default;

 private:
  static int check_n(int n) {
    if (n < 1) throw InputError("a game needs at least one player");
    if (n > kMaxPlayers) {
      throw CapabilityError("at most " + std::to_string(kMaxPlayers) + " players supported");
    }
    return n;
  }

  int n_;
  std::vector<bool> table_;
};

/// g^C: T is in W^C iff the complement of T is not in W.
inline VotingGame complement(const VotingGame& g) {
  const int n = g.n();
  return VotingGame::from_predicate(n, [&](PlayerSet t) { return !g.wins(t.complement(n)); });
}

inline bool is_monotonic(const VotingGame& g) {
  for (std::size_t m = 0; m < g.division_count(); ++m) {
    const PlayerSet s(static_cast<PlayerSet::Mask>(m));
    if (!g.wins(s)) continue;
    for (Player p = 0; p < g.n(); ++p) {
      if (!s.contains(p) && !g.wins(s.with(p))) return false;
    }
  }
  return true;
}

/// W is neither empty nor the whole power set.
inline bool is_non_trivial(const VotingGame& g) {
  const std::size_t w = g.winning_count();
  return w != 0 && w != g.division_count();
}

inline bool satisfies_unanimity(const VotingGame& g) {
  return g.wins(g.players()) && !g.wins(PlayerSet{});
}

// Decisiveness is a membership difference, so the monotonic clause and the
// against-the-outcome clause for non-monotonic games are the same formula.

inline bool is_yes_decisive(const VotingGame& g, PlayerSet yes_set, Player i) {
  g.require_player(i);
  g.require_within(yes_set);
  if (!yes_set.contains(i)) throw InputError("yes-decisiveness needs the player in the yes-set");
  return g.wins(yes_set) != g.wins(yes_set.without(i));
}

inline bool is_no_decisive(const VotingGame& g, PlayerSet yes_set, Player i) {
  g.require_player(i);
  g.require_within(yes_set);
  if (yes_set.contains(i)) throw InputError("no-decisiveness needs the player outside the yes-set");
  return g.wins(yes_set) != g.wins(yes_set.with(i));
}

/// Decisive on whichever side i votes in this division.
inline bool is_decisive(const VotingGame& g, PlayerSet yes_set, Player i) {
  return g.wins(yes_set) != g.wins(yes_set.contains(i) ? yes_set.without(i) : yes_set.with(i));
}

inline bool is_dummy(const VotingGame& g, Player i) {
  g.require_player(i);
  const PlayerSet rest = g.players().without(i);
  bool dummy = true;
  for_each_subset(rest, [&](PlayerSet s) {
    if (g.wins(s) != g.wins(s.with(i))) dummy = false;
  });
  return dummy;
}

/// {i} wins and nothing without i wins.
inline bool is_dictator(const VotingGame& g, Player i) {
  g.require_player(i);
  if (!g.wins(PlayerSet{}.with(i))) return false;
  bool dictator = true;
  for_each_subset(g.players().without(i), [&](PlayerSet s) {
    if (g.wins(s)) dictator = false;
  });
  return dictator;
}

/// Membership of g in CY (side = yes) or CN (side = no) for the pair {i, j}:
/// some division has both on `side` and both decisive there.
inline bool has_effective_cooperation(const VotingGame& g, Player i, Player j, Side side) {
  g.require_player(i);
  g.require_player(j);
  if (i == j) throw InputError("effective cooperation needs two distinct players");
  const PlayerSet pair = PlayerSet{}.with(i).with(j);
  const PlayerSet others = g.players() - pair;
  bool found = false;
  for_each_subset(others, [&](PlayerSet s) {
    if (found) return;
    if (side == Side::kYes) {
      const PlayerSet x = s | pair;
      found = g.wins(x) != g.wins(x.without(i)) && g.wins(x) != g.wins(x.without(j));
    } else {
      found = g.wins(s) != g.wins(s.with(i)) && g.wins(s) != g.wins(s.with(j));
    }
  });
  return found;
}

/// Relabels players: W' = {perm(S) : S in W}. perm[p] is the new label of p.
inline VotingGame permute_players(const VotingGame& g, std::span<const Player> perm) {
  const int n = g.n();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw InputError("permutation length must equal the player count");
  }
  std::vector<bool> seen(n, false);
  for (Player q : perm) {
    if (q < 0 || q >= n || seen[q]) throw InputError("player map is not a bijection on [n]");
    seen[q] = true;
  }
  VotingGame out(n);
  for (PlayerSet s : g.winning_sets()) {
    PlayerSet image;
    for (Player p : s.members()) image = image.with(perm[p]);
    out.set(image, true);
  }
  return out;
}

/// Extends g with a never-decisive player n: W' = {S, S + {n} : S in W}.
inline VotingGame add_dummy_player(const VotingGame& g) {
  const int n = g.n();
  return VotingGame::from_predicate(n + 1, [&](PlayerSet s) { return g.wins(s.without(n)); });
}

}  // namespace quarrel
