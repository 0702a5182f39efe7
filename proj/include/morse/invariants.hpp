#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "morse/rational.hpp"
#include "morse/word.hpp"

namespace morse {

enum class GapClass { Thick, Thin, Neither };

inline std::string_view to_string(GapClass c) {
  switch (c) {
    case GapClass::Thick: return "thick";
    case GapClass::Thin: return "thin";
    case GapClass::Neither: return "neither";
  }
  return "neither";
}

/// A regular interval between two consecutive critical events.
struct Gap {
  int width = 0;
  EventKind below = EventKind::Cup;
  EventKind above = EventKind::Cap;
  GapClass classification = GapClass::Neither;

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Regular levels of an embedding, bottom to top. Crossings are regular for
/// the height function, so they never split a gap.
struct LevelProfile {
  std::vector<Gap> gaps;

  std::vector<int> widths(GapClass c) const {
    std::vector<int> out;
    for (const auto& g : gaps)
      if (g.classification == c) out.push_back(g.width);
    return out;
  }
  std::vector<int> thick() const { return widths(GapClass::Thick); }
  std::vector<int> thin() const { return widths(GapClass::Thin); }
};

inline LevelProfile level_profile(const MorseWord& w) {
  LevelProfile p;
  const auto events = w.events();
  const auto& counts = w.counts();
  std::ptrdiff_t prev = -1;
  for (std::size_t k = 0; k < events.size(); ++k) {
    if (!events[k].is_critical()) continue;
    if (prev >= 0) {
      Gap g;
      g.width = counts[static_cast<std::size_t>(prev) + 1];
      g.below = events[static_cast<std::size_t>(prev)].kind;
      g.above = events[k].kind;
      if (g.below == EventKind::Cup && g.above == EventKind::Cap)
        g.classification = GapClass::Thick;
      else if (g.below == EventKind::Cap && g.above == EventKind::Cup)
        g.classification = GapClass::Thin;
      p.gaps.push_back(g);
    }
    prev = static_cast<std::ptrdiff_t>(k);
  }
  return p;
}

/// Gabai width: the sum of all gap widths.
inline int width(const LevelProfile& p) {
  int total = 0;
  for (const auto& g : p.gaps) total += g.width;
  return total;
}
inline int width(const MorseWord& w) { return width(level_profile(w)); }

/// Largest number of strands met by any regular level.
inline int trunk_embedding(const MorseWord& w) {
  const auto& c = w.counts();
  return *std::max_element(c.begin(), c.end());
}

/// Number of maxima.
inline int bridge_count(const MorseWord& w) {
  return static_cast<int>(std::count_if(w.events().begin(), w.events().end(),
                                        [](const Event& e) { return e.is_cap(); }));
}

inline int critical_count(const MorseWord& w) {
  return static_cast<int>(std::count_if(w.events().begin(), w.events().end(),
                                        [](const Event& e) { return e.is_critical(); }));
}

inline int crossing_count(std::span<const Event> events) {
  return static_cast<int>(
      std::count_if(events.begin(), events.end(), [](const Event& e) { return e.is_cross(); }));
}
inline int crossing_count(const MorseWord& w) { return crossing_count(w.events()); }

/// Number of thick levels.
inline int height_embedding(const LevelProfile& p) { return static_cast<int>(p.thick().size()); }
inline int height_embedding(const MorseWord& w) { return height_embedding(level_profile(w)); }

/// Thick widths sorted non-increasing.
inline std::vector<int> otp_vector(const LevelProfile& p) {
  auto v = p.thick();
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}
inline std::vector<int> otp_vector(const MorseWord& w) { return otp_vector(level_profile(w)); }

/// Lexicographic order on non-increasing width sequences. A proper prefix is
/// smaller, which is the same as padding the shorter sequence with zeros.
inline std::strong_ordering otp_compare(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// trunk / (height * 2 * bridge) of a single embedding.
inline Rational proportion(const MorseWord& w) {
  require_knot(w);
  return Rational(trunk_embedding(w), std::int64_t{height_embedding(w)} * 2 * bridge_count(w));
}

/// Mean width of the thick levels.
inline Rational average_trunk(const MorseWord& w) {
  const auto thick = level_profile(w).thick();
  return Rational(std::accumulate(thick.begin(), thick.end(), std::int64_t{0}),
                  static_cast<std::int64_t>(thick.size()));
}

/// Upper bound on representativity of the knot type: r <= beta and
/// r <= trunk/2 hold for the minimizing embeddings, and any embedding bounds
/// those from above.
inline int rep_upper_bound(const MorseWord& w) {
  require_knot(w);
  return std::min(bridge_count(w), trunk_embedding(w) / 2);
}

/// Upper bound on waist of the knot type: waist <= trunk/3.
inline int waist_upper_bound(const MorseWord& w) {
  require_knot(w);
  return trunk_embedding(w) / 3;
}

/// Every per-embedding quantity for one knot presentation.
struct EmbeddingReport {
  int width = 0;
  int trunk = 0;
  int height = 0;
  int bridge = 0;
  int critical_count = 0;
  int crossings = 0;
  std::vector<int> otp_vector;
  Rational proportion;
  Rational average_trunk;
  int rep_upper = 0;
  int waist_upper = 0;
  LevelProfile profile;
};

inline EmbeddingReport analyze(const MorseWord& w) {
  require_knot(w);
  EmbeddingReport r;
  r.profile = level_profile(w);
  r.width = width(r.profile);
  r.trunk = trunk_embedding(w);
  r.height = height_embedding(r.profile);
  r.bridge = bridge_count(w);
  r.critical_count = critical_count(w);
  r.crossings = crossing_count(w);
  r.otp_vector = otp_vector(r.profile);
  r.proportion = Rational(r.trunk, std::int64_t{r.height} * 2 * r.bridge);
  const auto thick = r.profile.thick();
  r.average_trunk = Rational(std::accumulate(thick.begin(), thick.end(), std::int64_t{0}),
                             static_cast<std::int64_t>(thick.size()));
  r.rep_upper = std::min(r.bridge, r.trunk / 2);
  r.waist_upper = r.trunk / 3;
  return r;
}

/// Stacks `b` on top of `a`: the final cap of `a` and the initial cup of `b`
/// are removed, so `b` continues on the two strands `a` leaves open.
inline MorseWord connected_sum(const MorseWord& a, const MorseWord& b) {
  require_knot(a);
  require_knot(b);
  std::vector<Event> events(a.events().begin(), a.events().end() - 1);
  events.insert(events.end(), b.events().begin() + 1, b.events().end());
  return MorseWord::from_events(std::move(events), Closure::Knot);
}

/// Largest strand count over all levels of a tangle, the boundary included.
inline int tangle_trunk(const TangleWord& t) {
  const auto& c = t.counts();
  return *std::max_element(c.begin(), c.end());
}

}  // namespace morse
