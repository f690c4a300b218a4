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
#include <vector>

#include "quarrel/enumerate.hpp"
#include "quarrel/transforms.hpp"
#include "quarrel/verifiers.hpp"
#include "support/fixtures.hpp"

namespace quarrel {
namespace {

using fixtures::game;
using fixtures::S;

const RuleKind kWeakSym{Degree::kWeak, Scope::kSymmetric, Direction::kReciprocal};
const RuleKind kStrongYesRecip{Degree::kStrong, Scope::kYesOnly, Direction::kReciprocal};

template <typename F>
void for_all_quarrels(const RuleKind& kind, int n_max, F&& f) {
  for (int n = 2; n <= n_max; ++n) {
    for (const VotingGame& g : enumerate_monotonic_games(n, false)) {
      for (Player i = 0; i < n; ++i) {
        for (Player j = 0; j < n; ++j) {
          if (i != j) f(QuarrelRule(kind, i, j), g);
        }
      }
    }
  }
}

TEST(VerifyCsr, FmOnDictatorIsVacuousOnYesSide) {
  const VotingGame g = fixtures::dictator3();
  const CSRReport r = verify_csr(g, apply(QuarrelRule(kFelsenthalMachover, 0, 1), g), 0, 1);
  EXPECT_TRUE(r.yq1.holds);
  EXPECT_TRUE(r.yq2.holds);
  EXPECT_TRUE(r.yq2.vacuous);
  EXPECT_FALSE(r.yq2.witness.has_value());
}

TEST(VerifyCsr, SymmetricWeakOnMajorityHoldsSubstantively) {
  const VotingGame g = fixtures::majority3();
  const CSRReport r = verify_csr(g, apply(QuarrelRule(kWeakSym, 0, 1), g), 0, 1);
  EXPECT_TRUE(r.yq1.holds);
  EXPECT_TRUE(r.nq1.holds);
  EXPECT_TRUE(r.yq2.holds);
  EXPECT_TRUE(r.nq2.holds);
  EXPECT_FALSE(r.yq2.vacuous);
  EXPECT_FALSE(r.nq2.vacuous);
  ASSERT_TRUE(r.yq2.witness.has_value());
  EXPECT_EQ(*r.yq2.witness, S({}));
}

TEST(VerifyCsr, IdentityCannotReduceSuccess) {
  const VotingGame g = fixtures::majority3();
  const CSRReport r = verify_csr(g, g, 0, 1);
  EXPECT_TRUE(r.yq1.holds);
  EXPECT_TRUE(r.nq1.holds);
  EXPECT_FALSE(r.yq2.holds);
  EXPECT_FALSE(r.nq2.holds);
  EXPECT_FALSE(r.yq2.vacuous);
  // Failure witness: the division where the pair cooperated effectively.
  ASSERT_TRUE(r.yq2.witness.has_value());
  EXPECT_EQ(*r.yq2.witness, S({1, 2}));
}

TEST(VerifyCsr, GainingSuccessBreaksYq1) {
  const VotingGame g = game(3, {{1, 2, 3}});
  const VotingGame boosted = game(3, {{1, 2}, {1, 2, 3}});
  const CSRReport r = verify_csr(g, boosted, 0, 1);
  EXPECT_FALSE(r.yq1.holds);
  EXPECT_EQ(*r.yq1.witness, S({}));
}

TEST(VerifyCsr, EveryRuleEveryGame) {
  for (const RuleKind& kind : all_rule_kinds()) {
    for_all_quarrels(kind, 4, [&](const QuarrelRule& rule, const VotingGame& g) {
      const CSRReport r = verify_csr(g, apply(rule, g), rule.i, rule.j);
      ASSERT_TRUE(r.yq1.holds && r.nq1.holds) << to_string(rule);
      const bool cy = has_effective_cooperation(g, rule.i, rule.j, Side::kYes);
      const bool cn = has_effective_cooperation(g, rule.i, rule.j, Side::kNo);
      ASSERT_EQ(r.yq2.vacuous, !cy);
      ASSERT_EQ(r.nq2.vacuous, !cn);
      if (cy && kind.quarrels_on_yes()) {
        ASSERT_TRUE(r.yq2.holds && !r.yq2.vacuous);
      }
      if (cn && kind.quarrels_on_no()) {
        ASSERT_TRUE(r.nq2.holds && !r.nq2.vacuous);
      }
      // A side left untouched cannot reduce anything.
      if (cy && !kind.quarrels_on_yes()) {
        ASSERT_FALSE(r.yq2.holds);
      }
      if (cn && !kind.quarrels_on_no()) {
        ASSERT_FALSE(r.nq2.holds);
      }
    });
  }
}

TEST(VerifyStrongCsr, EveryRuleEliminatesCooperation) {
  for (const RuleKind& kind : typology_rule_kinds()) {
    for_all_quarrels(kind, 4, [&](const QuarrelRule& rule, const VotingGame& g) {
      const StrongCSRReport r = verify_strong_csr(g, apply(rule, g), rule.i, rule.j);
      ASSERT_TRUE(r.yq_holds) << to_string(rule);
      if (kind.quarrels_on_no()) {
        ASSERT_TRUE(r.nq_holds) << to_string(rule);
      }
    });
  }
}

TEST(VerifyStrongCsr, IdentityFailsAtEmptyRest) {
  const VotingGame g = fixtures::majority3();
  const StrongCSRReport r = verify_strong_csr(g, g, 0, 1);
  EXPECT_FALSE(r.yq_holds);
  EXPECT_EQ(*r.yq_witness, S({}));
}

TEST(VerifyStrongCsr, SymmetricWeakOnMajority) {
  const VotingGame g = fixtures::majority3();
  const StrongCSRReport r = verify_strong_csr(g, apply(QuarrelRule(kWeakSym, 0, 1), g), 0, 1);
  EXPECT_TRUE(r.yq_holds);
  EXPECT_TRUE(r.nq_holds);
  EXPECT_TRUE(r.yq_antecedent_met);
}

TEST(VerifyNoAmbushBetrayal, EveryRuleEveryGame) {
  for (const RuleKind& kind : all_rule_kinds()) {
    for_all_quarrels(kind, 4, [&](const QuarrelRule& rule, const VotingGame& g) {
      ASSERT_TRUE(verify_no_ambush_betrayal(g, apply(rule, g), rule.i, rule.j).holds);
    });
  }
}

TEST(VerifyNoAmbushBetrayal, FlippedSingletonIsCaught) {
  const VotingGame g = fixtures::majority3();
  VotingGame flipped = g;
  flipped.set(S({1}), true);
  const NoAmbushReport r = verify_no_ambush_betrayal(g, flipped, 0, 1);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], (AmbushWitness{S({}), 0}));
}

TEST(VerifyNoAmbushBetrayal, FmOnDictatorOtherPair) {
  const VotingGame g = fixtures::dictator3();
  EXPECT_TRUE(verify_no_ambush_betrayal(g, apply(QuarrelRule(kFelsenthalMachover, 1, 2), g), 1, 2)
                  .holds);
}

TEST(VerifySymmetry, Examples) {
  EXPECT_TRUE(verify_symmetry(QuarrelRule(kWeakSym, 0, 1), fixtures::majority3()));
  EXPECT_FALSE(verify_symmetry(QuarrelRule(kFelsenthalMachover, 0, 1), fixtures::dictator3()));
  for_all_quarrels(kLaruelleValenciano, 4, [&](const QuarrelRule& rule, const VotingGame& g) {
    ASSERT_TRUE(verify_symmetry(rule, g));
  });
}

TEST(VerifySymmetry, AsymmetricRulesFailSomewhere) {
  for (const RuleKind& kind : all_rule_kinds()) {
    bool always = true;
    for_all_quarrels(kind, 3, [&](const QuarrelRule& rule, const VotingGame& g) {
      always = always && verify_symmetry(rule, g);
    });
    EXPECT_EQ(always, kind.scope == Scope::kSymmetric) << to_string(kind);
  }
}

TEST(VerifyReciprocality, LvCounterexample) {
  EXPECT_FALSE(verify_reciprocality(QuarrelRule(kLaruelleValenciano, 0, 1), fixtures::dictator2()));
}

TEST(VerifyReciprocality, MatchesDeclaredDirection) {
  for (const RuleKind& kind : all_rule_kinds()) {
    bool always = true;
    for_all_quarrels(kind, 4, [&](const QuarrelRule& rule, const VotingGame& g) {
      always = always && verify_reciprocality(rule, g);
    });
    const bool expected = kind.direction == Direction::kReciprocal || kind.degree == Degree::kWeak;
    EXPECT_EQ(always, expected) << to_string(kind);
  }
}

TEST(DetectNmq, FmOnDictatorMakesDummyDecisive) {
  const VotingGame g = fixtures::dictator3();
  const std::vector<NmqWitness> w =
      detect_nmq(g, apply(QuarrelRule(kFelsenthalMachover, 0, 1), g), 0, 1);
  ASSERT_FALSE(w.empty());
  EXPECT_NE(std::find(w.begin(), w.end(), NmqWitness{S({1, 2}), 1}), w.end());
}

TEST(DetectNmq, SymmetricWeakNeverHasWitnesses) {
  for_all_quarrels(kWeakSym, 4, [&](const QuarrelRule& rule, const VotingGame& g) {
    ASSERT_TRUE(detect_nmq(g, apply(rule, g), rule.i, rule.j).empty());
  });
}

TEST(DetectNmq, IdentityHasNone) {
  for (const VotingGame& g : enumerate_monotonic_games(3, false)) {
    EXPECT_TRUE(detect_nmq(g, g, 0, 1).empty());
  }
}

TEST(DetectNmq, WitnessesAreNonMonotonicSteps) {
  for (const RuleKind& kind : all_rule_kinds()) {
    for_all_quarrels(kind, 3, [&](const QuarrelRule& rule, const VotingGame& g) {
      const VotingGame g_hat = apply(rule, g);
      for (const NmqWitness& w : detect_nmq(g, g_hat, rule.i, rule.j)) {
        const PlayerSet lo = w.division.contains(w.non_decisive) ? w.division.without(w.non_decisive)
                                                                 : w.division;
        ASSERT_TRUE(g_hat.wins(lo));
        ASSERT_FALSE(g_hat.wins(lo.with(w.non_decisive)));
      }
    });
  }
}

TEST(CheckDnq, Examples) {
  EXPECT_TRUE(check_dnq(QuarrelRule(kStrongYesRecip, 0, 1), 3).disposed);
  EXPECT_TRUE(check_dnq(QuarrelRule(kFelsenthalMachover, 0, 1), 3).disposed);
  const DnqResult weak = check_dnq(QuarrelRule(kWeakSym, 0, 1), 3);
  EXPECT_FALSE(weak.disposed);
  EXPECT_GT(weak.applicable_games, 0u);
  ASSERT_TRUE(weak.counterexample.has_value());
  EXPECT_TRUE(has_lopsided_joint_success(*weak.counterexample, 0, 1));
}

TEST(CheckDnq, ScaleLimit) {
  EXPECT_THROW(check_dnq(QuarrelRule(kWeakSym, 0, 1), 5), CapabilityError);
  EXPECT_THROW(check_dnq(QuarrelRule(kWeakSym, 0, 2), 2), InputError);
}

TEST(CheckDnq, DictatorGameIsApplicable) {
  EXPECT_TRUE(has_lopsided_joint_success(fixtures::dictator3(), 1, 0));
  EXPECT_FALSE(has_lopsided_joint_success(fixtures::majority3(), 0, 1));
}

}  // namespace
}  // namespace quarrel
