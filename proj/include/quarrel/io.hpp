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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quarrel/game.hpp"
#include "quarrel/rational.hpp"

namespace quarrel {

using Json = nlohmann::ordered_json;

namespace detail {

/// 1-based line and column of a byte offset.
inline std::string position_of(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

inline std::int64_t parse_int64(const std::string& digits, const std::string& where) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != digits.size()) throw InputError(where + ": bad integer '" + digits + "'");
  return value;
}

}  // namespace detail

/// Accepts an integer, a "p/q" (or "p") string, or a decimal number. Decimals
/// are read through their 9-decimal rendering, so 0.1 becomes 1/10.
inline Rational parse_rational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d) || std::fabs(d) >= 1e9) {
      throw InputError(where + ": decimal out of supported range");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", d);
    std::string text = buf;
    const std::size_t dot = text.find('.');
    const std::string whole = text.substr(0, dot) + text.substr(dot + 1);
    return Rational(detail::parse_int64(whole, where), 1'000'000'000);
  }
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_int64(text, where));
    const std::int64_t den = detail::parse_int64(text.substr(slash + 1), where);
    if (den == 0) throw InputError(where + ": zero denominator");
    return Rational(detail::parse_int64(text.substr(0, slash), where), den);
  }
  throw InputError(where + ": expected a number or a \"p/q\" string");
}

/// Parses {"n", "winning"} or {"n", "weights", "quota"}. Players are 1-based.
/// Errors name the source, and the line:column for syntax errors or the JSON
/// path for semantic ones.
inline VotingGame parse_game(const std::string& text, const std::string& source = "<input>") {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ":" + detail::position_of(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": invalid JSON: " + e.what());
  }
  auto err = [&](const std::string& path, const std::string& what) {
    return InputError(source + ": " + path + ": " + what);
  };
  if (!doc.is_object()) throw err("/", "expected an object");

  if (doc.contains("weights")) {
    if (!doc.contains("quota")) throw err("/quota", "missing");
    const Json& weights = doc["weights"];
    if (!weights.is_array()) throw err("/weights", "expected an array");
    std::vector<Rational> w;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      w.push_back(parse_rational(weights[k], source + ": /weights/" + std::to_string(k)));
    }
    if (doc.contains("n") && (!doc["n"].is_number_integer() ||
                              doc["n"].get<std::int64_t>() != static_cast<std::int64_t>(w.size()))) {
      throw err("/n", "does not match the number of weights");
    }
    return VotingGame::weighted(w, parse_rational(doc["quota"], source + ": /quota"));
  }

  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw err("/n", "expected an integer");
  const std::int64_t n64 = doc["n"].get<std::int64_t>();
  if (n64 < 1) throw err("/n", "must be at least 1");
  if (n64 > kMaxPlayers) {
    throw CapabilityError(source + ": /n: at most " + std::to_string(kMaxPlayers) +
                          " players supported");
  }
  const int n = static_cast<int>(n64);
  if (!doc.contains("winning") || !doc["winning"].is_array()) {
    throw err("/winning", "expected an array of coalitions");
  }
  std::vector<PlayerSet> winning;
  const Json& sets = doc["winning"];
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string path = "/winning/" + std::to_string(k);
    if (!sets[k].is_array()) throw err(path, "expected an array of players");
    PlayerSet s;
    for (std::size_t t = 0; t < sets[k].size(); ++t) {
      const Json& p = sets[k][t];
      if (!p.is_number_integer()) throw err(path + "/" + std::to_string(t), "expected an integer");
      const std::int64_t player = p.get<std::int64_t>();
      if (player < 1 || player > n) {
        throw err(path + "/" + std::to_string(t),
                  "player " + std::to_string(player) + " out of range 1.." + std::to_string(n));
      }
      s = s.with(static_cast<Player>(player - 1));
    }
    winning.push_back(s);
  }
  return VotingGame::from_winning_sets(n, winning);
}

inline VotingGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str(), path);
}

/// 1-based members in ascending order.
inline Json player_set_to_json(PlayerSet s) {
  Json out = Json::array();
  for (Player p : s.members()) out.push_back(p + 1);
  return out;
}

/// The "winning" form, sets ascending by bitmask.
inline Json game_to_json(const VotingGame& g) {
  Json winning = Json::array();
  for (PlayerSet s : g.winning_sets()) winning.push_back(player_set_to_json(s));
  return Json{{"n", g.n()}, {"winning", std::move(winning)}};
}

/// Decimal rounded to 12 significant digits, as a JSON number.
inline double decimal_12(const Rational& r) { return std::stod(to_decimal_string(r)); }

/// Writes key = "p/q" and key_decimal = 12-digit decimal.
inline void put_rational(Json& obj, const std::string& key, const Rational& r) {
  obj[key] = to_string(r);
  obj[key + "_decimal"] = decimal_12(r);
}

}  // namespace quarrel
