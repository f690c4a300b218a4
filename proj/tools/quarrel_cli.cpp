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

// quarrel: command-line front end.
//
// Exit codes: 0 clean, 2 usage or input error, 3 violations found (scan) or
// claims not verified (theorems), 4 capability limit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quarrel/io.hpp"
#include "quarrel/quarrel.hpp"

namespace {

using namespace quarrel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolations = 3;
constexpr int kExitCapability = 4;

struct RunConfig {
  std::string game_path;
  std::string rule;
  std::string measure = "pb";
  std::string postulate = "standard";
  int n = 3;
  int n_max = kMaxTheoremPlayers;
  std::string format = "json";
  std::string out_path;
  bool unanimity_patch = false;
  bool non_trivial = false;
};

// Rows of cells, rendered as CSV or as an aligned table.
class Grid {
 public:
  explicit Grid(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string csv() const {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << quote(cells[c]);
      out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
    return out.str();
  }

  std::string table() const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        text += (c ? "  " : "") + cells[c] + std::string(width[c] - cells[c].size(), ' ');
      }
      text.erase(text.find_last_not_of(' ') + 1);
      out << text << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
    return out.str();
  }

 private:
  static std::string quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string q = "\"";
    for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string render(const RunConfig& cfg, const Json& json_doc, const Grid& grid,
                   const std::string& table_extra = "") {
  if (cfg.format == "csv") return grid.csv();
  if (cfg.format == "table") return grid.table() + table_extra;
  return json_doc.dump(2) + "\n";
}

std::string json_lines(const std::vector<Json>& records) {
  std::string out;
  for (const Json& r : records) out += r.dump() + "\n";
  return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw InputError(cfg.out_path + ": cannot open for writing");
  out << text;
}

Measure parse_measure(const std::string& name) {
  if (name == "pb") return Measure::kPenroseBanzhaf;
  if (name == "bz") return Measure::kBanzhafIndex;
  if (name == "ss") return Measure::kShapleyShubik;
  throw InputError("unknown measure '" + name + "'");
}

Postulate parse_postulate(const std::string& name) {
  if (name == "standard") return Postulate::kStandard;
  if (name == "yes") return Postulate::kYesPower;
  if (name == "no") return Postulate::kNoPower;
  throw InputError("unknown postulate '" + name + "'");
}

std::string set_text(PlayerSet s) { return to_string(s); }

int cmd_power(const RunConfig& cfg) {
  const VotingGame g = load_game(cfg.game_path);
  std::vector<Measure> measures;
  if (cfg.measure == "all") {
    measures = {Measure::kPenroseBanzhaf, Measure::kBanzhafIndex, Measure::kShapleyShubik};
  } else {
    measures = {parse_measure(cfg.measure)};
  }

  Json doc{{"game", game_to_json(g)}, {"measures", Json::array()}};
  Grid grid({"measure", "player", "psi", "psi_decimal", "psi_yes", "psi_no"});
  for (Measure m : measures) {
    Json entry{{"measure", std::string(to_string(m))}};
    PowerReport report;
    try {
      report = power_report(g, m);
    } catch (const CapabilityError& e) {
      // An explicitly requested measure that cannot be computed is an error;
      // under "all" it is reported and skipped.
      if (measures.size() == 1) throw;
      entry["unavailable"] = e.what();
      doc["measures"].push_back(std::move(entry));
      grid.add({std::string(to_string(m)), "-", "unavailable", "", "", ""});
      continue;
    }
    Json players = Json::array();
    for (Player p = 0; p < g.n(); ++p) {
      Json row{{"player", p + 1}};
      put_rational(row, "psi", report.values[p]);
      std::string yes, no;
      if (!report.yes_values.empty()) {
        put_rational(row, "psi_yes", report.yes_values[p]);
        put_rational(row, "psi_no", report.no_values[p]);
        yes = to_string(report.yes_values[p]);
        no = to_string(report.no_values[p]);
      }
      players.push_back(std::move(row));
      grid.add({std::string(to_string(m)), std::to_string(p + 1), to_string(report.values[p]),
                to_decimal_string(report.values[p]), yes, no});
    }
    entry["players"] = std::move(players);
    doc["measures"].push_back(std::move(entry));
  }
  emit(cfg, render(cfg, doc, grid));
  return kExitOk;
}

Json monotonicity_json(const MonotonicityReport& r) {
  Json pairs = Json::array();
  for (const ViolatingPair& v : r.violating_pairs) {
    pairs.push_back({{"smaller", player_set_to_json(v.smaller)},
                     {"larger", player_set_to_json(v.larger)}});
  }
  Json out{{"is_monotonic", r.is_monotonic}};
  if (r.min_k) {
    out["min_k"] = *r.min_k;
  } else {
    out["min_k"] = "none-within-n";
  }
  out["violating_pairs"] = std::move(pairs);
  out["violating_pairs_truncated"] = r.violating_pairs_truncated;
  return out;
}

std::string min_k_text(const MonotonicityReport& r) {
  return r.min_k ? std::to_string(*r.min_k) : "none-within-n";
}

Json condition_json(const CsrCondition& c) {
  Json out{{"holds", c.holds}, {"vacuous", c.vacuous}};
  if (c.witness) out["witness"] = player_set_to_json(*c.witness);
  return out;
}

int cmd_quarrel(const RunConfig& cfg) {
  const VotingGame g = load_game(cfg.game_path);
  const QuarrelRule rule = parse_rule(cfg.rule).rule();
  const VotingGame g_hat = apply(rule, g, ApplyOptions{cfg.unanimity_patch});

  const MonotonicityReport mono = min_k_monotonicity(g_hat);
  const CSRReport csr = verify_csr(g, g_hat, rule.i, rule.j);
  const StrongCSRReport strong = verify_strong_csr(g, g_hat, rule.i, rule.j);
  const NoAmbushReport ambush = verify_no_ambush_betrayal(g, g_hat, rule.i, rule.j);
  const std::vector<NmqWitness> nmq = detect_nmq(g, g_hat, rule.i, rule.j);
  const bool symmetric = verify_symmetry(rule, g);
  const bool reciprocal = verify_reciprocality(rule, g);

  // The derived game sits at the top level so the output re-ingests as a game.
  Json doc = game_to_json(g_hat);
  doc["rule"] = to_string(rule);
  doc["unanimity_patch"] = cfg.unanimity_patch;
  doc["monotonicity"] = monotonicity_json(mono);
  doc["csr"] = {{"yq1", condition_json(csr.yq1)},
                {"yq2", condition_json(csr.yq2)},
                {"nq1", condition_json(csr.nq1)},
                {"nq2", condition_json(csr.nq2)}};
  Json strong_json{{"yq_holds", strong.yq_holds}, {"nq_holds", strong.nq_holds}};
  if (strong.yq_witness) strong_json["yq_witness"] = player_set_to_json(*strong.yq_witness);
  if (strong.nq_witness) strong_json["nq_witness"] = player_set_to_json(*strong.nq_witness);
  doc["strong_csr"] = std::move(strong_json);
  Json ambush_witnesses = Json::array();
  for (const AmbushWitness& w : ambush.witnesses) {
    ambush_witnesses.push_back({{"rest", player_set_to_json(w.rest)}, {"voter", w.voter + 1}});
  }
  doc["no_ambush_betrayal"] = {{"holds", ambush.holds}, {"witnesses", std::move(ambush_witnesses)}};
  Json nmq_json = Json::array();
  for (const NmqWitness& w : nmq) {
    nmq_json.push_back(
        {{"division", player_set_to_json(w.division)}, {"non_decisive", w.non_decisive + 1}});
  }
  doc["nmq"] = std::move(nmq_json);
  doc["symmetric_on_game"] = symmetric;
  doc["reciprocal_on_game"] = reciprocal;

  Grid grid({"field", "value"});
  for (PlayerSet s : g_hat.winning_sets()) grid.add({"winning", set_text(s)});
  grid.add({"rule", to_string(rule)});
  grid.add({"monotonic", mono.is_monotonic ? "true" : "false"});
  grid.add({"min_k", min_k_text(mono)});
  grid.add({"csr_yq1", csr.yq1.holds ? "holds" : "fails"});
  grid.add({"csr_yq2", csr.yq2.vacuous ? "vacuous" : csr.yq2.holds ? "holds" : "fails"});
  grid.add({"csr_nq1", csr.nq1.holds ? "holds" : "fails"});
  grid.add({"csr_nq2", csr.nq2.vacuous ? "vacuous" : csr.nq2.holds ? "holds" : "fails"});
  grid.add({"strong_csr", strong.yq_holds && strong.nq_holds ? "holds" : "fails"});
  grid.add({"no_ambush_betrayal", ambush.holds ? "holds" : "fails"});
  grid.add({"nmq_witnesses", std::to_string(nmq.size())});
  grid.add({"symmetric_on_game", symmetric ? "true" : "false"});
  grid.add({"reciprocal_on_game", reciprocal ? "true" : "false"});
  emit(cfg, render(cfg, doc, grid));
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg) {
  const RuleSpec spec = parse_rule(cfg.rule);
  if (spec.pair) throw InputError("scan takes a rule family without i=..,j=.. (all pairs are scanned)");
  const Measure measure = parse_measure(cfg.measure);
  const Postulate postulate = parse_postulate(cfg.postulate);
  const ScanResult scan =
      scan_paradox(postulate, measure, spec.kind, cfg.n, ApplyOptions{cfg.unanimity_patch});

  std::vector<Json> records;
  Grid grid({"game_id", "winning", "i", "j", "witness", "psi_i", "psi_hat_i", "psi_j", "psi_hat_j"});
  for (const PostulateVerdict& v : scan.violations) {
    Json rec{{"type", "violation"},
             {"game_id", v.game_id},
             {"game", game_to_json(v.game)},
             {"rule", to_string(v.rule)},
             {"postulate", std::string(to_string(v.postulate))},
             {"measure", std::string(to_string(v.measure))},
             {"i", v.rule.i + 1},
             {"j", v.rule.j + 1},
             {"witness", *v.witness + 1}};
    put_rational(rec, "psi_i", v.before_i);
    put_rational(rec, "psi_hat_i", v.after_i);
    put_rational(rec, "psi_j", v.before_j);
    put_rational(rec, "psi_hat_j", v.after_j);
    records.push_back(std::move(rec));
    std::string winning;
    for (PlayerSet s : v.game.winning_sets()) winning += set_text(s);
    grid.add({std::to_string(v.game_id), winning, std::to_string(v.rule.i + 1),
              std::to_string(v.rule.j + 1), std::to_string(*v.witness + 1), to_string(v.before_i),
              to_string(v.after_i), to_string(v.before_j), to_string(v.after_j)});
  }
  Json summary{{"type", "summary"},
               {"rule", to_string(spec.kind)},
               {"postulate", std::string(to_string(postulate))},
               {"measure", std::string(to_string(measure))},
               {"n", cfg.n},
               {"games", scan.games},
               {"checks", scan.checks},
               {"not_evaluated", scan.not_evaluated},
               {"violations", scan.violations.size()}};
  records.push_back(summary);

  std::string text;
  if (cfg.format == "json") {
    text = json_lines(records);
  } else {
    text = render(cfg, Json{}, grid,
                  "\n" + std::to_string(scan.violations.size()) + " violations in " +
                      std::to_string(scan.checks) + " checks over " + std::to_string(scan.games) +
                      " games (" + std::to_string(scan.not_evaluated) + " not evaluated)\n");
  }
  emit(cfg, text);
  return scan.violations.empty() ? kExitOk : kExitViolations;
}

int cmd_theorems(const RunConfig& cfg) {
  const std::vector<TheoremResult> results = run_theorem_suite(cfg.n_max);
  std::vector<Json> records;
  Grid grid({"id", "verified", "evidence", "scope", "counterexample"});
  bool all_verified = true;
  for (const TheoremResult& r : results) {
    all_verified = all_verified && r.verified;
    Json rec{{"id", r.id},
             {"claim", r.claim},
             {"scope", r.scope},
             {"verified", r.verified},
             {"evidence", r.evidence}};
    if (!r.family_min_k.empty()) {
      Json ks = Json::array();
      for (int k : r.family_min_k) {
        if (k < 0) {
          ks.push_back("none-within-n");
        } else {
          ks.push_back(k);
        }
      }
      rec["family_min_k"] = std::move(ks);
    }
    rec["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    records.push_back(std::move(rec));
    grid.add({r.id, r.verified ? "yes" : "NO", std::to_string(r.evidence), r.scope,
              r.counterexample.value_or("")});
  }
  std::string text;
  if (cfg.format == "json") {
    text = json_lines(records);
  } else {
    text = render(cfg, Json{}, grid, "\n" + render_typology_table(results));
  }
  emit(cfg, text);
  return all_verified ? kExitOk : kExitViolations;
}

int cmd_kmon(const RunConfig& cfg) {
  const VotingGame g = load_game(cfg.game_path);
  const MonotonicityReport r = min_k_monotonicity(g);
  Grid grid({"smaller", "larger"});
  for (const ViolatingPair& v : r.violating_pairs) grid.add({set_text(v.smaller), set_text(v.larger)});
  std::string extra = "\nmonotonic: " + std::string(r.is_monotonic ? "true" : "false") +
                      "\nmin_k: " + min_k_text(r) + "\n";
  if (r.violating_pairs_truncated) extra += "violating pairs truncated\n";
  emit(cfg, render(cfg, monotonicity_json(r), grid, extra));
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  std::vector<Json> records;
  Grid grid({"id", "winning"});
  std::size_t id = 0;
  for_each_monotonic_game(cfg.n, cfg.non_trivial, [&](const VotingGame& g) {
    Json rec{{"id", id}};
    rec.update(game_to_json(g));
    records.push_back(std::move(rec));
    std::string winning;
    for (PlayerSet s : g.winning_sets()) winning += set_text(s);
    grid.add({std::to_string(id), winning.empty() ? "-" : winning});
    ++id;
  });
  emit(cfg, cfg.format == "json" ? json_lines(records) : render(cfg, Json{}, grid));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quarrels in binary voting games: power, transforms, k-monotonicity, postulates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  };

  CLI::App* power = app.add_subcommand("power", "Voting power of every player");
  power->add_option("--game", cfg.game_path, "Game JSON file")->required();
  power->add_option("--measure", cfg.measure, "pb, bz, ss or all")
      ->check(CLI::IsMember({"pb", "bz", "ss", "all"}));
  add_format(power);

  CLI::App* quarrel = app.add_subcommand("quarrel", "Apply a quarrel rule and diagnose the result");
  quarrel->add_option("--game", cfg.game_path, "Game JSON file")->required();
  quarrel->add_option("--rule", cfg.rule, "e.g. weak:sym:recip:i=1,j=2 or fm:i=1,j=2")->required();
  quarrel->add_flag("--unanimity-patch", cfg.unanimity_patch, "Force [n] in and the empty set out");
  add_format(quarrel);

  CLI::App* scan = app.add_subcommand("scan", "Exhaustive quarrelling-paradox scan");
  scan->add_option("--rule", cfg.rule, "Rule family, e.g. weak:sym:recip or fm")->required();
  scan->add_option("--measure", cfg.measure, "pb, bz or ss")
      ->check(CLI::IsMember({"pb", "bz", "ss"}));
  scan->add_option("--postulate", cfg.postulate, "standard, yes or no")
      ->check(CLI::IsMember({"standard", "yes", "no"}));
  scan->add_option("--n", cfg.n, "Player count (2.." + std::to_string(kMaxScanPlayers) + ")");
  scan->add_flag("--unanimity-patch", cfg.unanimity_patch, "Force [n] in and the empty set out");
  add_format(scan);

  CLI::App* theorems = app.add_subcommand("theorems", "Run the theorem suite");
  theorems->add_option("--n-max", cfg.n_max,
                       "Largest n for exhaustive checks (2.." + std::to_string(kMaxTheoremPlayers) + ")");
  add_format(theorems);

  CLI::App* kmon = app.add_subcommand("kmon", "Monotonicity report with minimal k");
  kmon->add_option("--game", cfg.game_path, "Game JSON file")->required();
  add_format(kmon);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List every monotonic game on n players");
  enumerate->add_option("--n", cfg.n, "Player count (1.." + std::to_string(kMaxEnumerationPlayers) + ")");
  enumerate->add_flag("--non-trivial", cfg.non_trivial, "Skip the all-yes and all-no games");
  add_format(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (power->parsed()) return cmd_power(cfg);
    if (quarrel->parsed()) return cmd_quarrel(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (theorems->parsed()) return cmd_theorems(cfg);
    if (kmon->parsed()) return cmd_kmon(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
  } catch (const CapabilityError& e) {
    std::cerr << "quarrel: capability limit: " << e.what() << '\n';
    return kExitCapability;
  } catch (const InputError& e) {
    std::cerr << "quarrel: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
