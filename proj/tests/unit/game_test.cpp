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


#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "quarrel/enumerate.hpp"
#include "quarrel/game.hpp"
#include "quarrel/transforms.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace quarrel {
namespace {

using fixtures::game;
using fixtures::S;

TEST(NewFromWinningSets, DictatorGame) {
  const VotingGame g = fixtures::dictator3();
  EXPECT_EQ(g.winning_count(), 4u);
  EXPECT_TRUE(is_dictator(g, 0));
  EXPECT_TRUE(is_dummy(g, 1));
  EXPECT_TRUE(is_dummy(g, 2));
}

TEST(NewFromWinningSets, EmptyListGivesAllNoGame) {
  const VotingGame g = game(2, {});
  EXPECT_EQ(g.winning_count(), 0u);
  EXPECT_FALSE(is_non_trivial(g));
}

TEST(NewFromWinningSets, MajorityMatchesWeightedForm) {
  const std::array<Rational, 3> w{1, 1, 1};
  EXPECT_EQ(fixtures::majority3(), VotingGame::weighted(w, 2));
}

TEST(NewFromWinningSets, DuplicatesCollapse) {
  EXPECT_EQ(game(2, {{1}, {1}, {1, 2}}), fixtures::dictator2());
}

TEST(NewFromWinningSets, OutOfRangeIsInputError) {
  EXPECT_THROW(game(2, {{3}}), InputError);
}

TEST(NewFromWinningSets, PlayerCountLimits) {
  EXPECT_THROW((void)VotingGame(0), InputError);
  EXPECT_THROW((void)VotingGame(kMaxPlayers + 1), CapabilityError);
  EXPECT_NO_THROW((void)VotingGame(kMaxPlayers));
}

TEST(NewWeighted, ZeroWeightDummies) {
  const std::array<Rational, 3> w{1, 0, 0};
  const VotingGame g = VotingGame::weighted(w, 1);
  EXPECT_EQ(g, VotingGame::from_predicate(3, [](PlayerSet s) { return s.contains(0); }));
}

TEST(NewWeighted, MajorityAgainstQuotaOverAllSubsets) {
  const std::array<Rational, 3> w{1, 1, 1};
  const VotingGame g = VotingGame::weighted(w, 2);
  for (std::uint32_t m = 0; m < 8; ++m) {
    EXPECT_EQ(g.wins(PlayerSet(m)), std::popcount(m) >= 2) << m;
  }
}

TEST(NewWeighted, QuotaAboveTotalGivesAllNo) {
  const std::array<Rational, 3> w{1, 1, 1};
  const VotingGame g = VotingGame::weighted(w, 4);
  EXPECT_EQ(g.winning_count(), 0u);
  EXPECT_FALSE(is_non_trivial(g));
}

TEST(NewWeighted, RationalWeights) {
  const std::array<Rational, 2> w{Rational(1, 3), Rational(2, 3)};
  const VotingGame g = VotingGame::weighted(w, Rational(2, 3));
  EXPECT_EQ(g, game(2, {{2}, {1, 2}}));
}

TEST(NewWeighted, Errors) {
  EXPECT_THROW(VotingGame::weighted(std::span<const Rational>{}, 1), InputError);
  const std::array<Rational, 2> w{1, 1};
  EXPECT_THROW(VotingGame::weighted(w, 0), InputError);
  const std::array<Rational, 2> neg{1, -1};
  EXPECT_THROW(VotingGame::weighted(neg, 1), InputError);
}

TEST(NewWeighted, AlwaysMonotonic) {
  const std::array<Rational, 4> w{3, 2, 2, 1};
  for (int q = 1; q <= 9; ++q) EXPECT_TRUE(is_monotonic(VotingGame::weighted(w, q))) << q;
}

TEST(Outcome, Examples) {
  EXPECT_EQ(fixtures::dictator3().outcome(S({2, 3})), Outcome::kNo);
  EXPECT_EQ(fixtures::dictator3().outcome(S({1})), Outcome::kYes);
  EXPECT_EQ(fixtures::majority3().outcome(S({1, 3})), Outcome::kYes);
  EXPECT_THROW(fixtures::majority3().outcome(S({4})), InputError);
}

TEST(Complement, DictatorIsSelfComplementary) {
  EXPECT_EQ(complement(fixtures::dictator2()), fixtures::dictator2());
}

TEST(Complement, SinglePlayerDictatorship) {
  EXPECT_EQ(complement(game(1, {{1}})), game(1, {{1}}));
}

TEST(Complement, MajorityIsSelfComplementary) {
  EXPECT_EQ(complement(fixtures::majority3()), fixtures::majority3());
}

TEST(Complement, InvolutionAndMonotonicityExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    for (const VotingGame& g : oracle::all_games(n)) {
      const VotingGame c = complement(g);
      ASSERT_EQ(complement(c), g);
      ASSERT_EQ(is_monotonic(g), is_monotonic(c));
    }
  }
}

TEST(Complement, MatchesDefinition) {
  const VotingGame g = fixtures::veto3();
  const VotingGame c = complement(g);
  for (std::uint32_t t = 0; t < 8; ++t) {
    EXPECT_EQ(c.wins(PlayerSet(t)), !g.wins(PlayerSet(t).complement(3)));
  }
}

TEST(IsMonotonic, Examples) {
  EXPECT_TRUE(is_monotonic(fixtures::dictator3()));
  EXPECT_FALSE(is_monotonic(game(2, {{}, {1}})));
  EXPECT_FALSE(is_monotonic(game(2, {{1}, {2}})));
}

TEST(IsMonotonic, AgreesWithPairwiseOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const VotingGame& g : oracle::all_games(n)) {
      ASSERT_EQ(is_monotonic(g), oracle::is_monotonic(g));
    }
  }
}

TEST(NonTrivialAndUnanimity, Examples) {
  EXPECT_FALSE(is_non_trivial(game(3, {})));
  EXPECT_TRUE(is_non_trivial(fixtures::dictator3()));
  EXPECT_TRUE(satisfies_unanimity(fixtures::dictator3()));
  const VotingGame fm = apply(QuarrelRule(kFelsenthalMachover, 0, 1), fixtures::dictator3());
  EXPECT_EQ(fm, game(3, {{1}, {1, 3}}));
  EXPECT_FALSE(satisfies_unanimity(fm));
}

TEST(NonTrivialAndUnanimity, AllYesGameIsTrivial) {
  const VotingGame g = VotingGame::from_predicate(2, [](PlayerSet) { return true; });
  EXPECT_FALSE(is_non_trivial(g));
  EXPECT_FALSE(satisfies_unanimity(g));
}

TEST(Decisiveness, DictatorExamples) {
  const VotingGame g = fixtures::dictator3();
  EXPECT_TRUE(is_yes_decisive(g, S({1, 2}), 0));
  EXPECT_FALSE(is_yes_decisive(g, S({1, 2}), 1));
}

TEST(Decisiveness, AgainstTheOutcomeInDerivedGame) {
  // LV 1->2 on the dictator game: W^ = {{}, {1}, {3}, {1,3}}.
  const VotingGame g_hat = game(3, {{}, {1}, {3}, {1, 3}});
  EXPECT_TRUE(is_yes_decisive(g_hat, S({1, 2, 3}), 1));
}

TEST(Decisiveness, PreconditionBreachesThrow) {
  const VotingGame g = fixtures::dictator3();
  EXPECT_THROW(is_yes_decisive(g, S({2}), 0), InputError);
  EXPECT_THROW(is_no_decisive(g, S({1}), 0), InputError);
  EXPECT_THROW(is_yes_decisive(g, S({1}), 5), InputError);
}

TEST(Decisiveness, MirrorOnAllGames) {
  for (int n = 1; n <= 3; ++n) {
    for (const VotingGame& g : oracle::all_games(n)) {
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        const PlayerSet s(m);
        for (Player i = 0; i < n; ++i) {
          if (!s.contains(i)) continue;
          ASSERT_EQ(is_yes_decisive(g, s, i), is_no_decisive(g, s.without(i), i));
        }
      }
    }
  }
}

TEST(DummyAndDictator, Examples) {
  EXPECT_TRUE(is_dummy(fixtures::dictator3(), 1));
  EXPECT_TRUE(is_dictator(fixtures::dictator3(), 0));
  EXPECT_FALSE(is_dummy(fixtures::majority3(), 0));
  EXPECT_FALSE(is_dictator(fixtures::majority3(), 0));
}

TEST(DummyAndDictator, DummyMeansNeverDecisive) {
  for (int n = 1; n <= 3; ++n) {
    for (const VotingGame& g : oracle::all_games(n)) {
      for (Player i = 0; i < n; ++i) {
        bool ever = false;
        for (std::uint32_t m = 0; m < (1u << n); ++m) ever = ever || is_decisive(g, PlayerSet(m), i);
        ASSERT_EQ(is_dummy(g, i), !ever);
      }
    }
  }
}

TEST(EffectiveCooperation, Examples) {
  EXPECT_FALSE(has_effective_cooperation(fixtures::dictator3(), 0, 1, Side::kYes));
  EXPECT_TRUE(has_effective_cooperation(fixtures::majority3(), 0, 1, Side::kYes));
  EXPECT_FALSE(has_effective_cooperation(game(2, {{1, 2}}), 0, 1, Side::kNo));
  EXPECT_TRUE(has_effective_cooperation(game(2, {{1, 2}}), 0, 1, Side::kYes));
  EXPECT_THROW(has_effective_cooperation(fixtures::majority3(), 1, 1, Side::kYes), InputError);
}

TEST(EffectiveCooperation, SidesSwapUnderComplement) {
  for (const VotingGame& g : enumerate_monotonic_games(4, false)) {
    for (Player i = 0; i < 4; ++i) {
      for (Player j = i + 1; j < 4; ++j) {
        ASSERT_EQ(has_effective_cooperation(g, i, j, Side::kYes),
                  has_effective_cooperation(complement(g), i, j, Side::kNo));
      }
    }
  }
}

TEST(PermutePlayers, Identity) {
  const std::vector<Player> id{0, 1, 2};
  EXPECT_EQ(permute_players(fixtures::veto3(), id), fixtures::veto3());
}

TEST(PermutePlayers, SwapMovesDictator) {
  const std::vector<Player> swap{1, 0, 2};
  const VotingGame g = permute_players(fixtures::dictator3(), swap);
  EXPECT_TRUE(is_dictator(g, 1));
  EXPECT_TRUE(is_dummy(g, 0));
}

TEST(PermutePlayers, MajorityFixedUnderAllPermutations) {
  std::vector<Player> perm{0, 1, 2};
  do {
    EXPECT_EQ(permute_players(fixtures::majority3(), perm), fixtures::majority3());
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(PermutePlayers, RejectsNonBijection) {
  const std::vector<Player> bad{0, 0, 2};
  EXPECT_THROW(permute_players(fixtures::majority3(), bad), InputError);
  const std::vector<Player> short_map{0, 1};
  EXPECT_THROW(permute_players(fixtures::majority3(), short_map), InputError);
}

TEST(AddDummyPlayer, NewPlayerIsDummy) {
  const VotingGame g = add_dummy_player(fixtures::veto3());
  EXPECT_EQ(g.n(), 4);
  EXPECT_TRUE(is_dummy(g, 3));
  EXPECT_TRUE(is_monotonic(g));
}

}  // namespace
}  // namespace quarrel
