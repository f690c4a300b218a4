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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quarrel/enumerate.hpp"
#include "quarrel/power.hpp"
#include "quarrel/rule.hpp"
#include "quarrel/transforms.hpp"

namespace quarrel {

/// Which power component must not rise for either quarreller.
enum class Postulate { kStandard, kYesPower, kNoPower };

inline std::string_view to_string(Postulate p) {
  switch (p) {
    case Postulate::kStandard: return "standard";
    case Postulate::kYesPower: return "yes";
    case Postulate::kNoPower: return "no";
  }
  return "standard";
}

enum class VerdictStatus {
  kHolds,
  kViolated,
  /// The measure is undefined on the derived game (SS on a non-monotonic
  /// game, Banzhaf index with no non-dummy). Never counted as a violation.
  kNotEvaluated,
};

struct PostulateVerdict {
  Postulate postulate = Postulate::kStandard;
  Measure measure = Measure::kPenroseBanzhaf;
  QuarrelRule rule;
  std::size_t game_id = 0;
  VotingGame game{1};
  VerdictStatus status = VerdictStatus::kHolds;
  std::string note;
  Rational before_i, after_i, before_j, after_j;
  /// The first quarreller (i, then j) whose power rose.
  std::optional<Player> witness;

  bool holds() const { return status == VerdictStatus::kHolds; }
  bool violated() const { return status == VerdictStatus::kViolated; }
};

namespace detail {

inline std::vector<Rational> component(const VotingGame& g, Measure m, Postulate p) {
  PowerReport r = power_report(g, m);
  switch (p) {
    case Postulate::kYesPower: return r.yes_values;
    case Postulate::kNoPower: return r.no_values;
    case Postulate::kStandard: break;
  }
  return r.values;
}

}  // namespace detail

/// Compares the quarrellers' power before and after the quarrel.
inline PostulateVerdict check_postulate(Postulate postulate, Measure measure,
                                        const QuarrelRule& rule, const VotingGame& g,
                                        ApplyOptions options = {}, std::size_t game_id = 0) {
  if (postulate != Postulate::kStandard && measure != Measure::kPenroseBanzhaf) {
    throw CapabilityError("yes/no power postulates are defined for the Penrose-Banzhaf measure only");
  }
  PostulateVerdict v;
  v.postulate = postulate;
  v.measure = measure;
  v.rule = rule;
  v.game_id = game_id;
  v.game = g;

  const VotingGame g_hat = apply(rule, g, options);
  if (measure == Measure::kShapleyShubik && !is_monotonic(g_hat)) {
    v.status = VerdictStatus::kNotEvaluated;
    v.note = "derived game is not monotonic";
    return v;
  }
  std::vector<Rational> before, after;
  try {
    before = detail::component(g, measure, postulate);
    after = detail::component(g_hat, measure, postulate);
  } catch (const CapabilityError& e) {
    v.status = VerdictStatus::kNotEvaluated;
    v.note = e.what();
    return v;
  }
  v.before_i = before[rule.i];
  v.after_i = after[rule.i];
  v.before_j = before[rule.j];
  v.after_j = after[rule.j];
  if (v.after_i > v.before_i) v.witness = rule.i;
  else if (v.after_j > v.before_j) v.witness = rule.j;
  v.status = v.witness ? VerdictStatus::kViolated : VerdictStatus::kHolds;
  return v;
}

struct ScanResult {
  std::size_t games = 0;
  std::size_t checks = 0;
  std::size_t not_evaluated = 0;
  /// Sorted by (game id, i, j).
  std::vector<PostulateVerdict> violations;
};

inline constexpr int kMaxScanPlayers = 4;

/// Checks every non-trivial monotonic game on n players against every
/// ordered pair. Game ids index the enumeration order.
inline ScanResult scan_paradox(Postulate postulate, Measure measure, const RuleKind& kind, int n,
                               ApplyOptions options = {}) {
  if (n < 2) throw InputError("scans need at least two players");
  if (n > kMaxScanPlayers) {
    throw CapabilityError("paradox scans support at most " + std::to_string(kMaxScanPlayers) +
                          " players");
  }
  ScanResult out;
  std::size_t id = 0;
  for_each_monotonic_game(n, true, [&](const VotingGame& g) {
    ++out.games;
    for (Player i = 0; i < n; ++i) {
      for (Player j = 0; j < n; ++j) {
        if (i == j) continue;
        ++out.checks;
        PostulateVerdict v = check_postulate(postulate, measure, QuarrelRule(kind, i, j), g,
                                             options, id);
        if (v.status == VerdictStatus::kNotEvaluated) ++out.not_evaluated;
        if (v.violated()) out.violations.push_back(std::move(v));
      }
    }
    ++id;
  });
  return out;
}

}  // namespace quarrel
