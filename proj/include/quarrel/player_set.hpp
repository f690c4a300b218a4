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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace quarrel {

/// Raised for malformed caller input: out-of-range players, bad permutations,
/// quarrels on non-monotonic games, unparsable rule strings.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation is asked for outside the range where it is
/// defined or feasible (SS on non-monotonic games, enumeration above n = 5).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Players are 0-based inside the library. Only file and CLI I/O is 1-based.
using Player = int;

/// Hard cap on player count. A game stores one bit per division, so
/// 2^20 bits is the largest table we allocate.
inline constexpr int kMaxPlayers = 20;

/// A subset of [n] stored as a bitmask; bit p is player p.
///
/// Divisions are identified with their yes-set, so a PlayerSet doubles as a
/// division handle.
class PlayerSet {
 public:
  using Mask = std::uint32_t;

  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(Mask mask) : mask_(mask) {}

  static PlayerSet of(std::initializer_list<Player> players) {
    PlayerSet s;
    for (Player p : players) s = s.with(p);
    return s;
  }

  /// [n] = {0, ..., n-1}.
  static constexpr PlayerSet full(int n) {
    return PlayerSet(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(Player p) const { return (mask_ >> p) & 1u; }
  constexpr bool contains(PlayerSet other) const {
    return (other.mask_ & ~mask_) == 0;
  }
  constexpr bool disjoint(PlayerSet other) const {
    return (mask_ & other.mask_) == 0;
  }

  constexpr PlayerSet with(Player p) const {
    return PlayerSet(mask_ | (Mask{1} << p));
  }
  constexpr PlayerSet without(Player p) const {
    return PlayerSet(mask_ & ~(Mask{1} << p));
  }
  constexpr PlayerSet operator|(PlayerSet o) const {
    return PlayerSet(mask_ | o.mask_);
  }
  constexpr PlayerSet operator&(PlayerSet o) const {
    return PlayerSet(mask_ & o.mask_);
  }
  /// Set difference.
  constexpr PlayerSet operator-(PlayerSet o) const {
    return PlayerSet(mask_ & ~o.mask_);
  }
  /// Complement relative to [n].
  constexpr PlayerSet complement(int n) const {
    return PlayerSet(~mask_ & full(n).mask_);
  }

  /// True iff every member lies in [n].
  constexpr bool within(int n) const { return full(n).contains(*this); }

  std::vector<Player> members() const {
    std::vector<Player> out;
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr bool operator==(PlayerSet, PlayerSet) = default;
  friend constexpr auto operator<=>(PlayerSet a, PlayerSet b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  Mask mask_ = 0;
};

/// Calls f(sub) for every subset of `set`, including the empty set and `set`.
template <typename F>
void for_each_subset(PlayerSet set, F&& f) {
  const PlayerSet::Mask full = set.mask();
  PlayerSet::Mask sub = full;
  while (true) {
    f(PlayerSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// Renders {1,3} style notation with 1-based player labels.
inline std::string to_string(PlayerSet s) {
  std::string out = "{";
  bool first = true;
  for (Player p : s.members()) {
    if (!first) out += ",";
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace quarrel
