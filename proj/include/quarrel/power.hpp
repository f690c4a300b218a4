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

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "quarrel/game.hpp"
#include "quarrel/rational.hpp"

namespace quarrel {

enum class Measure {
  kPenroseBanzhaf,  // raw PB measure
  kBanzhafIndex,    // PB normalized to sum 1
  kShapleyShubik,
};

inline std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::kPenroseBanzhaf: return "pb";
    case Measure::kBanzhafIndex: return "bz";
    case Measure::kShapleyShubik: return "ss";
  }
  return "pb";
}

/// Per-player power under one measure. The yes/no split is filled for PB only.
struct PowerReport {
  Measure measure = Measure::kPenroseBanzhaf;
  std::vector<Rational> values;
  std::vector<Rational> yes_values;
  std::vector<Rational> no_values;
};

/// Divisions in which i is decisive, split by i's vote.
struct DecisiveCounts {
  std::int64_t yes = 0;  // S containing i with i yes-decisive
  std::int64_t no = 0;   // S not containing i with i no-decisive
};

inline DecisiveCounts decisive_counts(const VotingGame& g, Player i) {
  g.require_player(i);
  DecisiveCounts c;
  for_each_subset(g.players().without(i), [&](PlayerSet s) {
    if (g.wins(s.with(i)) != g.wins(s)) ++c.yes;
    if (g.wins(s) != g.wins(s.with(i))) ++c.no;
  });
  return c;
}

/// (psi+, psi-): yes- and no-decisive divisions, each over all 2^n divisions.
inline std::pair<Rational, Rational> yes_no_power(const VotingGame& g, Player i) {
  const DecisiveCounts c = decisive_counts(g, i);
  const std::int64_t divisions = std::int64_t{1} << g.n();
  return {Rational(c.yes, divisions), Rational(c.no, divisions)};
}

/// Share of all 2^n divisions in which i is decisive. Valid for
/// non-monotonic games; on monotonic games it equals the usual count of
/// yes-decisive swings over 2^(n-1).
inline Rational penrose_banzhaf(const VotingGame& g, Player i) {
  const DecisiveCounts c = decisive_counts(g, i);
  return Rational(c.yes + c.no, std::int64_t{1} << g.n());
}

inline PowerReport banzhaf_index(const VotingGame& g) {
  PowerReport r{Measure::kBanzhafIndex, {}, {}, {}};
  std::vector<std::int64_t> swings;
  std::int64_t total = 0;
  for (Player p = 0; p < g.n(); ++p) {
    const DecisiveCounts c = decisive_counts(g, p);
    swings.push_back(c.yes + c.no);
    total += c.yes + c.no;
  }
  if (total == 0) throw CapabilityError("Banzhaf index undefined: every player is a dummy");
  for (std::int64_t s : swings) r.values.emplace_back(s, total);
  return r;
}

namespace detail {

inline std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

}  // namespace detail

/// Fraction of the n! orderings in which i is pivotal, computed by counting
/// coalitions S that i swings, each weighted by (|S|-1)!(n-|S|)!.
inline Rational shapley_shubik(const VotingGame& g, Player i) {
  g.require_player(i);
  if (!is_monotonic(g)) {
    throw CapabilityError("Shapley-Shubik index needs a monotonic game (pivots are not unique)");
  }
  const int n = g.n();
  std::int64_t pivotal = 0;
  for_each_subset(g.players().without(i), [&](PlayerSet rest) {
    if (g.wins(rest.with(i)) && !g.wins(rest)) {
      pivotal += detail::factorial(rest.size()) * detail::factorial(n - rest.size() - 1);
    }
  });
  return Rational(pivotal, detail::factorial(n));
}

inline PowerReport power_report(const VotingGame& g, Measure measure) {
  switch (measure) {
    case Measure::kBanzhafIndex:
      return banzhaf_index(g);
    case Measure::kShapleyShubik: {
      PowerReport r{measure, {}, {}, {}};
      for (Player p = 0; p < g.n(); ++p) r.values.push_back(shapley_shubik(g, p));
      return r;
    }
    case Measure::kPenroseBanzhaf:
      break;
  }
  PowerReport r{Measure::kPenroseBanzhaf, {}, {}, {}};
  for (Player p = 0; p < g.n(); ++p) {
    auto [yes, no] = yes_no_power(g, p);
    r.values.push_back(yes + no);
    r.yes_values.push_back(yes);
    r.no_values.push_back(no);
  }
  return r;
}

}  // namespace quarrel
