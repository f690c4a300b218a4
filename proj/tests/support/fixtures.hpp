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


// Small named games shared by the test suites. Helpers take 1-based players
// to match the notation used in test names and expectations.

#pragma once

#include <initializer_list>
#include <vector>

#include "quarrel/game.hpp"

namespace fixtures {

using quarrel::Player;
using quarrel::PlayerSet;
using quarrel::VotingGame;

/// PlayerSet from 1-based members.
inline PlayerSet S(std::initializer_list<int> members) {
  PlayerSet s;
  for (int p : members) s = s.with(p - 1);
  return s;
}

inline VotingGame game(int n, std::initializer_list<std::initializer_list<int>> winning) {
  std::vector<PlayerSet> sets;
  for (auto members : winning) sets.push_back(S(members));
  return VotingGame::from_winning_sets(n, sets);
}

/// Player 1 dictates among three.
inline VotingGame dictator3() { return game(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}}); }

inline VotingGame majority3() { return game(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}); }

/// W = {{1,2,3},{1,2},{1,3}}: player 1 needs one partner.
inline VotingGame veto3() { return game(3, {{1, 2, 3}, {1, 2}, {1, 3}}); }

/// Two players, player 1 dictates.
inline VotingGame dictator2() { return game(2, {{1}, {1, 2}}); }

inline VotingGame all_nonempty(int n) {
  return VotingGame::from_predicate(n, [](PlayerSet s) { return !s.empty(); });
}

}  // namespace fixtures
