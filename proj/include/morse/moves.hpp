#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morse/word.hpp"

namespace morse {

enum class MoveKind {
  CommuteDistant,
  ZigZagCancel,
  ZigZagInsert,
  R1Absorb,
  R1Insert,
  R2Cancel,
  R2Insert,
  YangBaxter,
  CapAbsorbCross,
};

inline std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::CommuteDistant: return "CommuteDistant";
    case MoveKind::ZigZagCancel: return "ZigZagCancel";
    case MoveKind::ZigZagInsert: return "ZigZagInsert";
    case MoveKind::R1Absorb: return "R1Absorb";
    case MoveKind::R1Insert: return "R1Insert";
    case MoveKind::R2Cancel: return "R2Cancel";
    case MoveKind::R2Insert: return "R2Insert";
    case MoveKind::YangBaxter: return "YangBaxter";
    case MoveKind::CapAbsorbCross: return "CapAbsorbCross";
  }
  return "?";
}

inline bool is_insertion(MoveKind k) {
  return k == MoveKind::ZigZagInsert || k == MoveKind::R1Insert || k == MoveKind::R2Insert;
}

/// A local rewrite of a Morse word.
///
/// Parameter meaning by kind (`site` is a 0-based event offset):
///   CommuteDistant  swaps events site and site+1; side is where the upper one
///                   sits relative to the lower one (+1 right, -1 left).
///   ZigZagCancel    removes Cup(index) at site and Cap(index+side) at site+1.
///   ZigZagInsert    inserts that pair so that it occupies site, site+1.
///   R1Absorb        removes Cross(index, sign) at site+1 right above Cup(index) at site.
///   CapAbsorbCross  removes Cross(index, sign) at site right below Cap(index) at site+1.
///   R1Insert        inserts Cross(index, sign) at site; side -1 anchors it on the
///                   cup at site-1, side +1 on the cap currently at site.
///   R2Cancel        removes Cross(index, sign) Cross(index, -sign) at site, site+1.
///   R2Insert        inserts that pair at site.
///   YangBaxter      rewrites three crossings starting at site; side +1 matches
///                   (index, index+1, index), side -1 matches (index+1, index, index+1).
struct Move {
  MoveKind kind = MoveKind::CommuteDistant;
  std::size_t site = 0;
  int index = 0;
  int sign = 0;
  int side = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(const Move& m) {
  std::string s(to_string(m.kind));
  s += '@' + std::to_string(m.site);
  if (m.index != 0) s += " i=" + std::to_string(m.index);
  if (m.sign != 0) s += m.sign > 0 ? " +" : " -";
  if (m.side != 0) s += m.side > 0 ? " up" : " down";
  return s;
}

class InvalidMove : public std::invalid_argument {
 public:
  InvalidMove(const Move& m, const std::string& why)
      : std::invalid_argument("invalid move " + to_string(m) + ": " + why) {}
};

/// The move that undoes `m`.
inline Move inverse(const Move& m) {
  switch (m.kind) {
    case MoveKind::CommuteDistant: return {MoveKind::CommuteDistant, m.site, 0, 0, -m.side};
    case MoveKind::ZigZagCancel: return {MoveKind::ZigZagInsert, m.site, m.index, 0, m.side};
    case MoveKind::ZigZagInsert: return {MoveKind::ZigZagCancel, m.site, m.index, 0, m.side};
    case MoveKind::R1Absorb: return {MoveKind::R1Insert, m.site + 1, m.index, m.sign, -1};
    case MoveKind::CapAbsorbCross: return {MoveKind::R1Insert, m.site, m.index, m.sign, +1};
    case MoveKind::R1Insert:
      if (m.side < 0) return {MoveKind::R1Absorb, m.site - 1, m.index, m.sign, 0};
      return {MoveKind::CapAbsorbCross, m.site, m.index, m.sign, 0};
    case MoveKind::R2Cancel: return {MoveKind::R2Insert, m.site, m.index, m.sign, 0};
    case MoveKind::R2Insert: return {MoveKind::R2Cancel, m.site, m.index, m.sign, 0};
    case MoveKind::YangBaxter: return {MoveKind::YangBaxter, m.site, m.index, m.sign, -m.side};
  }
  return m;
}

namespace detail {

// Support of an event on the level between two adjacent events, in doubled
// coordinates: strand p sits at 2p and the slot between strands p-1 and p at
// 2p-1. A cap leaves only a slot on the level above it; a cup occupies only a
// slot on the level below it.
struct Support {
  int lo;
  int hi;
};

inline Support top_support(const Event& e) {
  if (e.is_cap()) return {2 * e.index - 1, 2 * e.index - 1};
  return {2 * e.index, 2 * e.index + 2};
}

inline Support bottom_support(const Event& e) {
  if (e.is_cup()) return {2 * e.index - 1, 2 * e.index - 1};
  return {2 * e.index, 2 * e.index + 2};
}

}  // namespace detail

/// Which side of `lower` the event `upper` sits on when the two act on
/// disjoint parts of their shared level: +1 right, -1 left, 0 if they
/// overlap. A cap directly below a cup in the same slot fits either side and
/// also gives 0.
inline int commute_side(const Event& lower, const Event& upper) {
  if (lower.is_cap() && upper.is_cup() && lower.index == upper.index) return 0;
  const auto t = detail::top_support(lower);
  const auto b = detail::bottom_support(upper);
  if (t.hi < b.lo) return +1;
  if (t.lo > b.hi) return -1;
  return 0;
}

/// Rewrites `lower` followed by `upper` as the equivalent pair in the opposite
/// order. `side` 0 accepts whichever side applies; the cap-below-cup case
/// needs an explicit side to say where the cup goes.
inline std::optional<std::pair<Event, Event>> commute(const Event& lower, const Event& upper, int side = 0) {
  if (lower.is_cap() && upper.is_cup() && lower.index == upper.index) {
    const int i = lower.index;
    if (side > 0) return std::pair{Event::cup(i + 2), lower};
    if (side < 0) return std::pair{upper, Event::cap(i + 2)};
    return std::nullopt;
  }
  const int actual = commute_side(lower, upper);
  if (actual == 0 || (side != 0 && side != actual)) return std::nullopt;
  if (actual > 0) return std::pair{upper.with_index(upper.index - lower.delta()), lower};
  return std::pair{upper, lower.with_index(lower.index + upper.delta())};
}

namespace detail {

inline std::optional<std::vector<Event>> rewrite(std::span<const Event> ev, const std::vector<int>& counts,
                                                 const Move& m) {
  const std::size_t n = ev.size();
  const std::size_t s = m.site;
  std::vector<Event> out(ev.begin(), ev.end());
  auto erase2 = [&](std::size_t at) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(at),
              out.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  };
  auto insert = [&](std::size_t at, std::initializer_list<Event> es) {
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), es);
  };
  switch (m.kind) {
    case MoveKind::CommuteDistant: {
      if (s + 1 >= n || (m.side != 1 && m.side != -1)) return std::nullopt;
      auto swapped = commute(ev[s], ev[s + 1], m.side);
      if (!swapped) return std::nullopt;
      out[s] = swapped->first;
      out[s + 1] = swapped->second;
      return out;
    }
    case MoveKind::ZigZagCancel:
      if (s + 1 >= n || (m.side != 1 && m.side != -1)) return std::nullopt;
      if (ev[s] != Event::cup(m.index) || ev[s + 1] != Event::cap(m.index + m.side)) return std::nullopt;
      erase2(s);
      return out;
    case MoveKind::ZigZagInsert: {
      if (s == 0 || s >= n || (m.side != 1 && m.side != -1)) return std::nullopt;
      const int c = counts[s];
      const int lo = m.side > 0 ? 1 : 2;
      const int hi = m.side > 0 ? c : c + 1;
      if (m.index < lo || m.index > hi) return std::nullopt;
      insert(s, {Event::cup(m.index), Event::cap(m.index + m.side)});
      return out;
    }
    case MoveKind::R1Absorb:
      if (s + 1 >= n || ev[s] != Event::cup(m.index) || ev[s + 1] != Event::cross(m.index, m.sign))
        return std::nullopt;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(s) + 1);
      return out;
    case MoveKind::CapAbsorbCross:
      if (s + 1 >= n || ev[s] != Event::cross(m.index, m.sign) || ev[s + 1] != Event::cap(m.index))
        return std::nullopt;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(s));
      return out;
    case MoveKind::R1Insert:
      if (m.sign != 1 && m.sign != -1) return std::nullopt;
      if (m.side < 0) {
        if (s == 0 || s > n || ev[s - 1] != Event::cup(m.index)) return std::nullopt;
      } else if (m.side > 0) {
        if (s >= n || ev[s] != Event::cap(m.index)) return std::nullopt;
      } else {
        return std::nullopt;
      }
      insert(s, {Event::cross(m.index, m.sign)});
      return out;
    case MoveKind::R2Cancel:
      if (s + 1 >= n || ev[s] != Event::cross(m.index, m.sign) || ev[s + 1] != Event::cross(m.index, -m.sign))
        return std::nullopt;
      erase2(s);
      return out;
    case MoveKind::R2Insert:
      if (s == 0 || s >= n || (m.sign != 1 && m.sign != -1)) return std::nullopt;
      if (m.index < 1 || m.index > counts[s] - 1) return std::nullopt;
      insert(s, {Event::cross(m.index, m.sign), Event::cross(m.index, -m.sign)});
      return out;
    case MoveKind::YangBaxter: {
      if (s + 2 >= n || (m.side != 1 && m.side != -1) || (m.sign != 1 && m.sign != -1)) return std::nullopt;
      const int outer = m.side > 0 ? m.index : m.index + 1;
      const int inner = m.side > 0 ? m.index + 1 : m.index;
      if (ev[s] != Event::cross(outer, m.sign) || ev[s + 1] != Event::cross(inner, m.sign) ||
          ev[s + 2] != Event::cross(outer, m.sign))
        return std::nullopt;
      out[s] = out[s + 2] = Event::cross(inner, m.sign);
      out[s + 1] = Event::cross(outer, m.sign);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_applicable(const MorseWord& w, const Move& m) {
  return detail::rewrite(w.events(), w.counts(), m).has_value();
}

/// Applies `m`; throws InvalidMove when its pattern does not match at the site.
inline MorseWord apply_move(const MorseWord& w, const Move& m) {
  auto rewritten = detail::rewrite(w.events(), w.counts(), m);
  if (!rewritten) throw InvalidMove(m, "pattern does not match");
  auto out = MorseWord::from_events(std::move(*rewritten), Closure::Link);
  if (out.components() != w.components()) throw InvalidMove(m, "component count changed");
  return out;
}

struct MoveOptions {
  bool insertions = true;
};

/// All applicable moves, ordered by site and then by kind.
inline std::vector<Move> enumerate_moves(const MorseWord& w, MoveOptions opts = {}) {
  std::vector<Move> out;
  const auto ev = w.events();
  const auto& counts = w.counts();
  const std::size_t n = ev.size();
  for (std::size_t s = 0; s <= n; ++s) {
    const int c = counts[s];
    // Kinds in enum order at each site.
    if (s + 1 < n) {
      if (const int side = commute_side(ev[s], ev[s + 1]); side != 0) {
        out.push_back({MoveKind::CommuteDistant, s, 0, 0, side});
      } else if (commute(ev[s], ev[s + 1], -1)) {
        out.push_back({MoveKind::CommuteDistant, s, 0, 0, -1});
        out.push_back({MoveKind::CommuteDistant, s, 0, 0, +1});
      }
    }
    if (s + 1 < n && ev[s].is_cup() && ev[s + 1].is_cap()) {
      const int d = ev[s + 1].index - ev[s].index;
      if (d == 1 || d == -1) out.push_back({MoveKind::ZigZagCancel, s, ev[s].index, 0, d});
    }
    if (opts.insertions && s > 0 && s < n) {
      for (int i = 1; i <= c; ++i) out.push_back({MoveKind::ZigZagInsert, s, i, 0, +1});
      for (int i = 2; i <= c + 1; ++i) out.push_back({MoveKind::ZigZagInsert, s, i, 0, -1});
    }
    if (s + 1 < n && ev[s].is_cup() && ev[s + 1].is_cross() && ev[s + 1].index == ev[s].index)
      out.push_back({MoveKind::R1Absorb, s, ev[s].index, ev[s + 1].sign});
    if (opts.insertions) {
      for (int sign : {1, -1}) {
        if (s > 0 && ev[s - 1].is_cup()) out.push_back({MoveKind::R1Insert, s, ev[s - 1].index, sign, -1});
        if (s < n && ev[s].is_cap()) out.push_back({MoveKind::R1Insert, s, ev[s].index, sign, +1});
      }
    }
    if (s + 1 < n && ev[s].is_cross() && ev[s + 1].is_cross() && ev[s].index == ev[s + 1].index &&
        ev[s].sign == -ev[s + 1].sign)
      out.push_back({MoveKind::R2Cancel, s, ev[s].index, ev[s].sign});
    if (opts.insertions && s > 0 && s < n) {
      for (int i = 1; i <= c - 1; ++i)
        for (int sign : {1, -1}) out.push_back({MoveKind::R2Insert, s, i, sign});
    }
    if (s + 2 < n && ev[s].is_cross() && ev[s + 1].is_cross() && ev[s + 2].is_cross() &&
        ev[s].sign == ev[s + 1].sign && ev[s + 1].sign == ev[s + 2].sign && ev[s] == ev[s + 2]) {
      const int a = ev[s].index;
      const int b = ev[s + 1].index;
      if (b == a + 1) out.push_back({MoveKind::YangBaxter, s, a, ev[s].sign, +1});
      if (b == a - 1) out.push_back({MoveKind::YangBaxter, s, b, ev[s].sign, -1});
    }
    if (s + 1 < n && ev[s].is_cross() && ev[s + 1].is_cap() && ev[s].index == ev[s + 1].index)
      out.push_back({MoveKind::CapAbsorbCross, s, ev[s].index, ev[s].sign});
  }
  return out;
}

}  // namespace morse
