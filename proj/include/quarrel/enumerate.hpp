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
#include <cstdint>
#include <string>
#include <vector>

#include "quarrel/game.hpp"

namespace quarrel {

/// Largest n for exhaustive enumeration of monotonic games (7581 at n = 5).
inline constexpr int kMaxEnumerationPlayers = 5;

namespace detail {

/// Upward-closed families on n players as 2^n-bit truth tables, ascending.
///
/// A family on n players splits into A (sets without the last player) and
/// B (sets S with S + {last} winning); it is upward closed iff A and B are
/// upward closed on n - 1 players and A is contained in B.
inline std::vector<std::uint64_t> upsets(int n) {
  std::vector<std::uint64_t> current = {0b0, 0b1};  // n = 0: {} and {{}}
  for (int k = 1; k <= n; ++k) {
    const int half = 1 << (k - 1);
    std::vector<std::uint64_t> next;
    for (std::uint64_t b : current) {
      for (std::uint64_t a : current) {
        if ((a & ~b) == 0) next.push_back(a | (b << half));
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return current;
}

inline VotingGame game_from_table(int n, std::uint64_t table) {
  return VotingGame::from_predicate(n, [&](PlayerSet s) { return (table >> s.mask()) & 1u; });
}

}  // namespace detail

/// Calls f(game) once for every monotonic game on n players, in ascending
/// truth-table order. With require_non_trivial the empty and full families
/// are skipped.
template <typename F>
void for_each_monotonic_game(int n, bool require_non_trivial, F&& f) {
  if (n < 1) throw InputError("enumeration needs at least one player");
  if (n > kMaxEnumerationPlayers) {
    throw CapabilityError("exhaustive enumeration supports at most " +
                          std::to_string(kMaxEnumerationPlayers) + " players");
  }
  const std::uint64_t full_table = (std::uint64_t{1} << (1 << n)) - 1;
  for (std::uint64_t table : detail::upsets(n)) {
    if (require_non_trivial && (table == 0 || table == full_table)) continue;
    f(detail::game_from_table(n, table));
  }
}

inline std::vector<VotingGame> enumerate_monotonic_games(int n, bool require_non_trivial) {
  std::vector<VotingGame> out;
  for_each_monotonic_game(n, require_non_trivial, [&](VotingGame g) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace quarrel
