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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quarrel/enumerate.hpp"
#include "quarrel/monotonicity.hpp"
#include "quarrel/postulates.hpp"
#include "quarrel/rule.hpp"
#include "quarrel/transforms.hpp"
#include "quarrel/verifiers.hpp"

namespace quarrel {

/// How far the derived games of a typology cell stray from monotonicity.
enum class CellClass { kMonotonic, kQuasiMonotonic, kSupremelyNonMonotonic };

inline std::string_view to_string(CellClass c) {
  switch (c) {
    case CellClass::kMonotonic: return "monotonic";
    case CellClass::kQuasiMonotonic: return "quasi-monotonic";
    case CellClass::kSupremelyNonMonotonic: return "supremely non-monotonic";
  }
  return "monotonic";
}

/// The classification claimed for each of the twelve typology kinds.
inline CellClass expected_class(const RuleKind& k) {
  if (k.scope == Scope::kNoOnly) throw InputError("no-only kinds are outside the typology");
  if (k.degree == Degree::kWeak) return CellClass::kMonotonic;
  if (k.degree == Degree::kStrong && k.scope == Scope::kYesOnly) return CellClass::kQuasiMonotonic;
  return CellClass::kSupremelyNonMonotonic;
}

/// Desk-scale evidence for one claim. `verified` means no counterexample
/// turned up within `scope`; it is not a proof.
struct TheoremResult {
  std::string id;
  std::string claim;
  std::string scope;
  bool verified = true;
  std::optional<std::string> counterexample;
  /// Number of instances examined (derived games, scan checks, ...).
  std::size_t evidence = 0;
  /// Set for typology cells only.
  std::optional<RuleKind> cell;
  /// min_k of the proof-family derived game at n = 3, 4, 5 (supremely
  /// non-monotonic cells); -1 stands for none-within-n.
  std::vector<int> family_min_k;
};

inline constexpr int kFamilyMinPlayers = 3;
inline constexpr int kFamilyMaxPlayers = 5;

/// The witness family for a supremely non-monotonic kind,
/// with the pair fixed at i = 0, j = 1.
inline VotingGame proof_family_game(const RuleKind& k, int n) {
  const Player i = 0;
  const Player j = 1;
  const PlayerSet pair = PlayerSet{}.with(i).with(j);
  if (k.degree == Degree::kStrong && k.scope == Scope::kSymmetric) {
    if (k.direction == Direction::kReciprocal) {
      return VotingGame::from_predicate(n, [&](PlayerSet s) { return !s.disjoint(pair); });
    }
    return VotingGame::from_predicate(n, [&](PlayerSet s) { return s.contains(i); });
  }
  if (k.degree == Degree::kCataclysmic) {
    if (k.direction == Direction::kReciprocal) {
      return VotingGame::from_predicate(n, [](PlayerSet s) { return !s.empty(); });
    }
    if (k.scope == Scope::kYesOnly) {
      return VotingGame::from_predicate(n, [&](PlayerSet s) {
        return !PlayerSet{}.with(j).contains(s);
      });
    }
    if (k.scope == Scope::kSymmetric) {
      return VotingGame::from_predicate(n, [&](PlayerSet s) { return s.size() >= n - 1; });
    }
  }
  throw InputError("no proof family for " + to_string(k));
}

namespace detail {

inline std::string describe(const VotingGame& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " W={";
  bool first = true;
  for (PlayerSet s : g.winning_sets()) {
    out << (first ? "" : ",") << to_string(s);
    first = false;
  }
  out << "}";
  return out.str();
}

inline std::string describe(const QuarrelRule& r, const VotingGame& g) {
  return to_string(r) + " on " + describe(g);
}

inline void fail(TheoremResult& r, std::string why) {
  if (r.verified) r.counterexample = std::move(why);
  r.verified = false;
}

/// Runs f(rule, g, derived) over every monotonic game on 2..n_max players and
/// every ordered pair.
inline void for_each_derivation(
    const RuleKind& kind, int n_max,
    const std::function<void(const QuarrelRule&, const VotingGame&, const VotingGame&)>& f) {
  for (int n = 2; n <= n_max; ++n) {
    for_each_monotonic_game(n, false, [&](const VotingGame& g) {
      for (Player i = 0; i < n; ++i) {
        for (Player j = 0; j < n; ++j) {
          if (i == j) continue;
          const QuarrelRule rule(kind, i, j);
          f(rule, g, apply(rule, g));
        }
      }
    });
  }
}

inline std::string exhaustive_scope(int n_max) {
  return "all monotonic games, n=2.." + std::to_string(n_max) + ", all ordered pairs";
}

inline TheoremResult check_cell(const RuleKind& kind, int n_max) {
  TheoremResult r;
  r.cell = kind;
  r.id = "typology:" + to_string(kind);
  const CellClass expected = expected_class(kind);
  r.claim = std::string("derived games are ") + std::string(to_string(expected));

  if (expected != CellClass::kSupremelyNonMonotonic) {
    r.scope = exhaustive_scope(n_max);
    const int bound = expected == CellClass::kMonotonic ? 0 : 1;
    bool bound_attained = bound == 0;
    for_each_derivation(kind, n_max, [&](const QuarrelRule& rule, const VotingGame& g,
                                         const VotingGame& g_hat) {
      ++r.evidence;
      const std::optional<int> k = min_k(g_hat);
      if (!k || *k > bound) {
        fail(r, describe(rule, g) + " gives min_k=" + (k ? std::to_string(*k) : "none"));
      }
      if (k && *k == bound) bound_attained = true;
    });
    if (!bound_attained) fail(r, "no derived game attains min_k=" + std::to_string(bound));
    return r;
  }

  r.scope = "proof-family games, n=" + std::to_string(kFamilyMinPlayers) + ".." +
            std::to_string(kFamilyMaxPlayers) + ", pair (1,2)";
  const QuarrelRule rule(kind, 0, 1);
  for (int n = kFamilyMinPlayers; n <= kFamilyMaxPlayers; ++n) {
    ++r.evidence;
    const std::optional<int> k = min_k(apply(rule, proof_family_game(kind, n)));
    r.family_min_k.push_back(k ? *k : detail::kUnbounded);
  }
  // Compare lower bounds: none-within-n at n means min_k > n.
  auto lower_bound = [](int k, int n) { return k == detail::kUnbounded ? n + 1 : k; };
  for (std::size_t t = 1; t < r.family_min_k.size(); ++t) {
    const int n = kFamilyMinPlayers + static_cast<int>(t);
    if (lower_bound(r.family_min_k[t], n) <= lower_bound(r.family_min_k[t - 1], n - 1)) {
      fail(r, "min_k does not grow from n=" + std::to_string(kFamilyMinPlayers + t - 1) +
                  " to n=" + std::to_string(kFamilyMinPlayers + t));
    }
  }
  return r;
}

/// Monotonic source game built from a non-monotonic derived game by the
/// three-rule construction, with the pair it singles out.
struct Reconstruction {
  VotingGame source;
  Player i;
  Player j;
};

}  // namespace detail

/// Rebuilds a monotonic game G and a pair (i, j) from a non-monotonic g_hat
/// so that g_hat is non-monotonic over {i, j} relative to G. Uses a violating
/// step X in W^, X + {k} not in W^ with X nonempty when one exists (i from X,
/// j = k); otherwise the violation sits at the empty set and G is g_hat with
/// the empty set removed.
inline detail::Reconstruction reconstruct_source(const VotingGame& g_hat) {
  const int n = g_hat.n();
  if (n < 2) throw InputError("reconstruction needs at least two players");
  for (std::size_t m = 1; m < g_hat.division_count(); ++m) {
    const PlayerSet x(static_cast<PlayerSet::Mask>(m));
    if (!g_hat.wins(x)) continue;
    for (Player k = 0; k < n; ++k) {
      if (x.contains(k) || g_hat.wins(x.with(k))) continue;
      const Player i = x.members().front();
      const PlayerSet pair = PlayerSet{}.with(i).with(k);
      const PlayerSet all = g_hat.players();
      VotingGame source = VotingGame::from_predicate(n, [&](PlayerSet t) {
        bool hit = false;
        if (!t.disjoint(pair)) {
          // Rule (1): some subset of T wins in g_hat.
          for_each_subset(t, [&](PlayerSet s) { hit = hit || g_hat.wins(s); });
          return hit;
        }
        // Rule (2): some superset of T loses in g_hat.
        for_each_subset(all - t, [&](PlayerSet extra) { hit = hit || !g_hat.wins(t | extra); });
        return !hit;
      });
      return {std::move(source), i, k};
    }
  }
  if (!g_hat.wins(PlayerSet{})) throw InputError("game is monotonic");
  Player i = 0;
  while (i < n && g_hat.wins(PlayerSet{}.with(i))) ++i;
  VotingGame source = g_hat;
  source.set(PlayerSet{}, false);
  return {std::move(source), i, i == 0 ? 1 : 0};
}

namespace detail {

inline TheoremResult check_paradox_any_measure() {
  TheoremResult r;
  r.id = "paradox:any-measure";
  r.claim = "every non-monotonic kind violates the standard postulate under PB, with a dummy gaining power";
  r.scope = "non-trivial monotonic games, n=3, all ordered pairs";
  for (const RuleKind& kind : typology_rule_kinds()) {
    if (expected_class(kind) == CellClass::kMonotonic) continue;
    const ScanResult scan = scan_paradox(Postulate::kStandard, Measure::kPenroseBanzhaf, kind, 3);
    r.evidence += scan.violations.size();
    if (scan.violations.empty()) {
      fail(r, to_string(kind) + " has no PB violation");
      continue;
    }
    const bool dummy_gain = std::any_of(
        scan.violations.begin(), scan.violations.end(), [](const PostulateVerdict& v) {
          const Player w = *v.witness;
          return is_dummy(v.game, w) && (w == v.rule.i ? v.after_i : v.after_j) > 0;
        });
    if (!dummy_gain) fail(r, to_string(kind) + " has no violation where a dummy gains power");
  }
  return r;
}

inline TheoremResult check_nmq_rederivation(int n_max) {
  TheoremResult r;
  r.id = "nmq:rederivation";
  r.claim = "every non-monotonic derived game is non-monotonic over the quarrellers of some source game";
  r.scope = "distinct non-monotonic derived games, " + exhaustive_scope(n_max);
  for (const RuleKind& kind : typology_rule_kinds()) {
    if (expected_class(kind) == CellClass::kMonotonic) continue;
    for (int n = 2; n <= n_max; ++n) {
      const std::vector<VotingGame> games = enumerate_monotonic_games(n, false);
      std::set<std::vector<PlayerSet>> seen;
      for (const VotingGame& g : games) {
        for (Player i = 0; i < n; ++i) {
          for (Player j = 0; j < n; ++j) {
            if (i == j) continue;
            const QuarrelRule rule(kind, i, j);
            const VotingGame g_hat = apply(rule, g);
            if (is_monotonic(g_hat) || !seen.insert(g_hat.winning_sets()).second) continue;
            ++r.evidence;

            // Direct construction: monotonic source, CSR-1 and NMQ.
            const Reconstruction rec = reconstruct_source(g_hat);
            const CSRReport csr = verify_csr(rec.source, g_hat, rec.i, rec.j);
            if (!is_monotonic(rec.source) || !csr.yq1.holds || !csr.nq1.holds ||
                detect_nmq(rec.source, g_hat, rec.i, rec.j).empty()) {
              fail(r, "construction fails for " + describe(rule, g));
            }

            // Some source game yields g_hat under the same kind with NMQ.
            bool found = false;
            for (const VotingGame& src : games) {
              for (Player p = 0; p < n && !found; ++p) {
                for (Player q = 0; q < n && !found; ++q) {
                  if (p == q) continue;
                  const QuarrelRule alt(kind, p, q);
                  found = apply(alt, src) == g_hat && !detect_nmq(src, g_hat, p, q).empty();
                }
              }
              if (found) break;
            }
            if (!found) fail(r, "no NMQ source for the result of " + describe(rule, g));
          }
        }
      }
    }
  }
  return r;
}

inline TheoremResult check_lv_non_reciprocal() {
  TheoremResult r;
  r.id = "lv:non-reciprocal";
  r.claim = "the LV rule is not reciprocal";
  r.scope = "n=2, W={{1},{1,2}}";
  const VotingGame g = VotingGame::from_winning_sets(2, {PlayerSet::of({0}), PlayerSet::of({0, 1})});
  const VotingGame forward = apply(QuarrelRule(kLaruelleValenciano, 0, 1), g);
  const VotingGame backward = apply(QuarrelRule(kLaruelleValenciano, 1, 0), g);
  r.evidence = 1;
  const VotingGame want_forward =
      VotingGame::from_winning_sets(2, {PlayerSet{}, PlayerSet::of({0})});
  if (forward != want_forward) fail(r, "1->2 gives " + describe(forward));
  if (backward != g) fail(r, "2->1 gives " + describe(backward));
  if (forward == backward) fail(r, "both directions agree");
  return r;
}

inline TheoremResult check_weak_symmetric_postulate(Measure measure, int n_max) {
  TheoremResult r;
  r.id = std::string("postulate:weak-sym:") + std::string(to_string(measure));
  r.claim = std::string(to_string(measure)) +
            " satisfies the standard postulate under the symmetric weak quarrel";
  r.scope = "non-trivial monotonic games, n=2.." + std::to_string(n_max) +
            ", all ordered pairs (reciprocal and non-reciprocal weak rules coincide)";
  const RuleKind kind{Degree::kWeak, Scope::kSymmetric, Direction::kReciprocal};
  for (int n = 2; n <= n_max; ++n) {
    const ScanResult scan = scan_paradox(Postulate::kStandard, measure, kind, n);
    r.evidence += scan.checks;
    if (scan.not_evaluated > 0) fail(r, "measure not evaluated on some derived game");
    if (!scan.violations.empty()) {
      const PostulateVerdict& v = scan.violations.front();
      fail(r, describe(v.rule, v.game));
    }
  }
  // The non-reciprocal weak rule must be the same transformation.
  const RuleKind other{Degree::kWeak, Scope::kSymmetric, Direction::kNonReciprocal};
  for_each_derivation(other, n_max, [&](const QuarrelRule& rule, const VotingGame& g,
                                        const VotingGame& g_hat) {
    if (apply(QuarrelRule(kind, rule.i, rule.j), g) != g_hat) {
      fail(r, "weak rules differ on " + describe(rule, g));
    }
  });
  return r;
}

}  // namespace detail

inline constexpr int kMaxTheoremPlayers = 4;

/// One result per typology cell, then the standalone claims.
inline std::vector<TheoremResult> run_theorem_suite(int n_max) {
  if (n_max < 2) throw InputError("the theorem suite needs n_max >= 2");
  if (n_max > kMaxTheoremPlayers) {
    throw CapabilityError("the theorem suite supports n_max <= " +
                          std::to_string(kMaxTheoremPlayers));
  }
  std::vector<TheoremResult> out;
  for (const RuleKind& kind : typology_rule_kinds()) out.push_back(detail::check_cell(kind, n_max));
  out.push_back(detail::check_paradox_any_measure());
  out.push_back(detail::check_nmq_rederivation(n_max));
  out.push_back(detail::check_lv_non_reciprocal());
  out.push_back(detail::check_weak_symmetric_postulate(Measure::kShapleyShubik, n_max));
  out.push_back(detail::check_weak_symmetric_postulate(Measure::kPenroseBanzhaf, n_max));
  return out;
}

/// Plain-text typology table: degrees down, (scope, direction) across. Each
/// cell shows the verified class and its evidence count.
inline std::string render_typology_table(const std::vector<TheoremResult>& results) {
  std::map<std::string, const TheoremResult*> by_kind;
  for (const TheoremResult& r : results) {
    if (r.cell) by_kind[to_string(*r.cell)] = &r;
  }
  const std::vector<std::pair<Scope, Direction>> columns = {
      {Scope::kYesOnly, Direction::kReciprocal},
      {Scope::kYesOnly, Direction::kNonReciprocal},
      {Scope::kSymmetric, Direction::kReciprocal},
      {Scope::kSymmetric, Direction::kNonReciprocal},
  };
  const std::vector<std::string> headers = {"quarrel", "asym recip", "asym non-recip",
                                            "sym recip", "sym non-recip"};
  std::vector<std::vector<std::string>> rows;
  for (Degree d : {Degree::kWeak, Degree::kStrong, Degree::kCataclysmic}) {
    std::vector<std::string> row{std::string(to_string(d))};
    for (auto [scope, direction] : columns) {
      const RuleKind k{d, scope, direction};
      auto it = by_kind.find(to_string(k));
      if (it == by_kind.end()) {
        row.push_back("-");
        continue;
      }
      const TheoremResult& r = *it->second;
      row.push_back(std::string(to_string(expected_class(k))) + " [" +
                    (r.verified ? "ok" : "FAIL") + ", " + std::to_string(r.evidence) + "]");
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += (c ? " | " : "") + cells[c] + std::string(width[c] - cells[c].size(), ' ');
    }
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  };
  line(headers);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

}  // namespace quarrel
