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

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quarrel/player_set.hpp"

namespace quarrel {

/// How far the damage of a quarrel spreads when the pair votes together:
/// weak neutralizes the pair, strong isolates both from everyone, and
/// cataclysmic sinks their entire side.
enum class Degree { kWeak, kStrong, kCataclysmic };

/// Which sides the pair quarrels on.
enum class Scope { kSymmetric, kYesOnly, kNoOnly };

/// Reciprocal quarrels are direction-free; non-reciprocal ones are i against j.
enum class Direction { kReciprocal, kNonReciprocal };

/// A point in the degree x scope x direction taxonomy, without the pair.
struct RuleKind {
  Degree degree = Degree::kWeak;
  Scope scope = Scope::kSymmetric;
  Direction direction = Direction::kReciprocal;

  bool quarrels_on_yes() const { return scope != Scope::kNoOnly; }
  bool quarrels_on_no() const { return scope != Scope::kYesOnly; }

  friend bool operator==(const RuleKind&, const RuleKind&) = default;
};

inline constexpr RuleKind kFelsenthalMachover{Degree::kCataclysmic, Scope::kYesOnly,
                                              Direction::kReciprocal};
inline constexpr RuleKind kLaruelleValenciano{Degree::kStrong, Scope::kSymmetric,
                                              Direction::kNonReciprocal};

/// A rule kind bound to an ordered pair: i quarrels with j.
struct QuarrelRule {
  RuleKind kind;
  Player i = 0;
  Player j = 1;

  QuarrelRule() = default;
  QuarrelRule(RuleKind k, Player quarreller, Player target)
      : kind(k), i(quarreller), j(target) {
    if (i < 0 || j < 0) throw InputError("quarrel players must be nonnegative");
    if (i == j) throw InputError("a quarrel needs two distinct players");
  }

  /// The same kind with the roles of i and j exchanged.
  QuarrelRule reversed() const { return QuarrelRule(kind, j, i); }

  friend bool operator==(const QuarrelRule&, const QuarrelRule&) = default;
};

/// Every degree x scope x direction combination (18 kinds).
inline std::vector<RuleKind> all_rule_kinds() {
  std::vector<RuleKind> out;
  for (Degree d : {Degree::kWeak, Degree::kStrong, Degree::kCataclysmic}) {
    for (Scope s : {Scope::kYesOnly, Scope::kSymmetric, Scope::kNoOnly}) {
      for (Direction r : {Direction::kReciprocal, Direction::kNonReciprocal}) {
        out.push_back({d, s, r});
      }
    }
  }
  return out;
}

/// The twelve yes-only and symmetric kinds that make up the typology.
inline std::vector<RuleKind> typology_rule_kinds() {
  std::vector<RuleKind> out;
  for (const RuleKind& k : all_rule_kinds()) {
    if (k.scope != Scope::kNoOnly) out.push_back(k);
  }
  return out;
}

inline std::string_view to_string(Degree d) {
  switch (d) {
    case Degree::kWeak: return "weak";
    case Degree::kStrong: return "strong";
    case Degree::kCataclysmic: return "cataclysmic";
  }
  return "weak";
}

inline std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::kSymmetric: return "sym";
    case Scope::kYesOnly: return "yes";
    case Scope::kNoOnly: return "no";
  }
  return "sym";
}

inline std::string_view to_string(Direction d) {
  return d == Direction::kReciprocal ? "recip" : "nonrecip";
}

inline std::string to_string(const RuleKind& k) {
  std::string out(to_string(k.degree));
  out += ':';
  out += to_string(k.scope);
  out += ':';
  out += to_string(k.direction);
  return out;
}

/// Canonical "<degree>:<scope>:<direction>:i=<i>,j=<j>" with 1-based players.
inline std::string to_string(const QuarrelRule& r) {
  return to_string(r.kind) + ":i=" + std::to_string(r.i + 1) + ",j=" + std::to_string(r.j + 1);
}

/// A parsed rule string. The pair is optional so that scans can take a
/// whole family ("weak:sym:recip", "fm").
struct RuleSpec {
  RuleKind kind;
  std::optional<std::pair<Player, Player>> pair;

  QuarrelRule bind(Player i, Player j) const { return QuarrelRule(kind, i, j); }
  QuarrelRule rule() const {
    if (!pair) throw InputError("rule '" + to_string(kind) + "' needs a pair i=..,j=..");
    return bind(pair->first, pair->second);
  }
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline Player parse_player(std::string_view field, char name, std::string_view text) {
  const std::string prefix = std::string(1, name) + "=";
  if (field.substr(0, 2) != prefix) {
    throw InputError("rule '" + std::string(text) + "': expected " + prefix + "<int>");
  }
  int value = 0;
  const std::string_view digits = field.substr(2);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    throw InputError("rule '" + std::string(text) + "': bad player index in '" +
                     std::string(field) + "'");
  }
  return value - 1;
}

}  // namespace detail

/// Parses "<degree>:<scope>:<direction>[:i=<int>,j=<int>]" or the aliases
/// "fm[:i=..,j=..]" and "lv[:i=..,j=..]". Player indices are 1-based.
inline RuleSpec parse_rule(std::string_view text) {
  const std::vector<std::string_view> parts = detail::split(text, ':');
  RuleSpec spec;
  std::size_t next = 0;
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("rule '" + std::string(text) + "': " + why);
  };

  if (parts[0] == "fm" || parts[0] == "lv") {
    spec.kind = parts[0] == "fm" ? kFelsenthalMachover : kLaruelleValenciano;
    next = 1;
  } else {
    if (parts.size() < 3) throw fail("expected <degree>:<scope>:<direction>");
    if (parts[0] == "weak") spec.kind.degree = Degree::kWeak;
    else if (parts[0] == "strong") spec.kind.degree = Degree::kStrong;
    else if (parts[0] == "cataclysmic") spec.kind.degree = Degree::kCataclysmic;
    else throw fail("unknown degree '" + std::string(parts[0]) + "'");

    if (parts[1] == "sym") spec.kind.scope = Scope::kSymmetric;
    else if (parts[1] == "yes") spec.kind.scope = Scope::kYesOnly;
    else if (parts[1] == "no") spec.kind.scope = Scope::kNoOnly;
    else throw fail("unknown scope '" + std::string(parts[1]) + "'");

    if (parts[2] == "recip") spec.kind.direction = Direction::kReciprocal;
    else if (parts[2] == "nonrecip") spec.kind.direction = Direction::kNonReciprocal;
    else throw fail("unknown direction '" + std::string(parts[2]) + "'");
    next = 3;
  }

  if (next == parts.size()) return spec;
  if (next + 1 != parts.size()) throw fail("trailing fields");
  const std::vector<std::string_view> players = detail::split(parts[next], ',');
  if (players.size() != 2) throw fail("expected i=<int>,j=<int>");
  const Player i = detail::parse_player(players[0], 'i', text);
  const Player j = detail::parse_player(players[1], 'j', text);
  if (i == j) throw fail("i and j must differ");
  spec.pair = std::make_pair(i, j);
  return spec;
}

}  // namespace quarrel
