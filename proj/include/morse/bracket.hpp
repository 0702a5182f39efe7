#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "morse/detail/disjoint_sets.hpp"
#include "morse/invariants.hpp"
#include "morse/laurent.hpp"
#include "morse/word.hpp"

namespace morse {

/// Port order around a crossing.
enum Port : int { BottomLeft = 0, BottomRight = 1, TopLeft = 2, TopRight = 3 };

/// One crossing of the diagram. Strand A runs BottomLeft-TopRight, strand B
/// runs BottomRight-TopLeft; `braid_sign` +1 puts A on top.
struct DiagramCrossing {
  int braid_sign = 1;
  std::array<int, 4> arcs{};  // indexed by Port
  bool a_up = true;
  bool b_up = true;

  /// Sign of the crossing for the traversal orientation.
  int oriented_sign() const { return braid_sign * (a_up ? 1 : -1) * (b_up ? 1 : -1); }
};

/// Crossings with the arcs that join them. Arcs run through cups and caps;
/// closed curves that meet no crossing are counted in `free_loops`.
struct PlanarDiagram {
  std::vector<DiagramCrossing> crossings;
  int arc_count = 0;
  int free_loops = 0;

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.oriented_sign();
    return w;
  }
};

inline PlanarDiagram planar_diagram(const MorseWord& w) {
  detail::DisjointSets pieces;
  std::vector<std::size_t> level;
  struct RawCrossing {
    int sign;
    std::array<std::size_t, 4> pieces;
  };
  std::vector<RawCrossing> raw;
  for (const Event& e : w.events()) {
    const auto at = static_cast<std::ptrdiff_t>(e.index - 1);
    switch (e.kind) {
      case EventKind::Cup: {
        const auto p = pieces.add();
        level.insert(level.begin() + at, {p, p});
        break;
      }
      case EventKind::Cap:
        pieces.unite(level[static_cast<std::size_t>(at)], level[static_cast<std::size_t>(at) + 1]);
        level.erase(level.begin() + at, level.begin() + at + 2);
        break;
      case EventKind::Cross: {
        const auto i = static_cast<std::size_t>(at);
        const auto tl = pieces.add();
        const auto tr = pieces.add();
        raw.push_back({e.sign, {level[i], level[i + 1], tl, tr}});
        level[i] = tl;
        level[i + 1] = tr;
        break;
      }
    }
  }

  PlanarDiagram pd;
  std::vector<int> arc_of(pieces.size(), -1);
  std::vector<std::vector<std::pair<int, int>>> ports;  // arc -> (crossing, port)
  for (std::size_t c = 0; c < raw.size(); ++c) {
    DiagramCrossing dc;
    dc.braid_sign = raw[c].sign;
    for (int p = 0; p < 4; ++p) {
      const auto root = pieces.find(raw[c].pieces[static_cast<std::size_t>(p)]);
      if (arc_of[root] < 0) {
        arc_of[root] = pd.arc_count++;
        ports.emplace_back();
      }
      dc.arcs[static_cast<std::size_t>(p)] = arc_of[root];
      ports[static_cast<std::size_t>(arc_of[root])].emplace_back(static_cast<int>(c), p);
    }
    pd.crossings.push_back(dc);
  }
  std::vector<bool> seen_root(pieces.size(), false);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const auto root = pieces.find(p);
    if (arc_of[root] < 0 && !seen_root[root]) {
      seen_root[root] = true;
      ++pd.free_loops;
    }
  }

  // Orient each component by walking it. Entering through a bottom port
  // means travelling upward.
  const std::size_t nc = pd.crossings.size();
  std::vector<std::array<bool, 2>> done(nc, {false, false});
  auto strand_of = [](int port) { return (port == BottomLeft || port == TopRight) ? 0 : 1; };
  for (std::size_t start = 0; start < nc; ++start) {
    for (int start_strand = 0; start_strand < 2; ++start_strand) {
      if (done[start][static_cast<std::size_t>(start_strand)]) continue;
      int c = static_cast<int>(start);
      int in_port = start_strand == 0 ? BottomLeft : BottomRight;
      while (!done[static_cast<std::size_t>(c)][static_cast<std::size_t>(strand_of(in_port))]) {
        auto& cr = pd.crossings[static_cast<std::size_t>(c)];
        const int strand = strand_of(in_port);
        const bool up = in_port == BottomLeft || in_port == BottomRight;
        (strand == 0 ? cr.a_up : cr.b_up) = up;
        done[static_cast<std::size_t>(c)][static_cast<std::size_t>(strand)] = true;
        const int out_port = 3 - in_port;
        const auto& ends = ports[static_cast<std::size_t>(cr.arcs[static_cast<std::size_t>(out_port)])];
        // The arc has exactly two ends; take the one we did not leave by.
        const auto& next = (ends[0] == std::pair{c, out_port}) ? ends[1] : ends[0];
        c = next.first;
        in_port = next.second;
      }
    }
  }
  return pd;
}

inline int writhe(const MorseWord& w) { return planar_diagram(w).writhe(); }

inline constexpr int kMaxBracketCrossings = 18;

/// State sum over all 2^c smoothings. Throws BudgetExceeded above
/// `max_crossings`.
inline LaurentPoly kauffman_bracket(const PlanarDiagram& pd, int max_crossings = kMaxBracketCrossings) {
  const std::size_t c = pd.crossings.size();
  if (static_cast<int>(c) > max_crossings)
    throw BudgetExceeded("bracket state sum over " + std::to_string(c) + " crossings exceeds limit of " +
                         std::to_string(max_crossings));
  // tally[a - b + c][loops] counts states with that weight.
  const std::size_t max_loops = static_cast<std::size_t>(pd.arc_count + pd.free_loops) + 1;
  std::vector<std::vector<std::int64_t>> tally(2 * c + 1, std::vector<std::int64_t>(max_loops + 1, 0));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    detail::DisjointSets sets(static_cast<std::size_t>(pd.arc_count));
    int loops = pd.arc_count;
    int a_minus_b = 0;
    for (std::size_t k = 0; k < c; ++k) {
      const bool a_smoothing = (state >> k) & 1U;
      a_minus_b += a_smoothing ? 1 : -1;
      const auto& cr = pd.crossings[k];
      // For braid sign +1 the A-smoothing keeps the two strands vertical.
      const bool vertical = a_smoothing == (cr.braid_sign > 0);
      const auto arc = [&](int p) { return static_cast<std::size_t>(cr.arcs[static_cast<std::size_t>(p)]); };
      if (vertical) {
        loops -= sets.unite(arc(BottomLeft), arc(TopLeft));
        loops -= sets.unite(arc(BottomRight), arc(TopRight));
      } else {
        loops -= sets.unite(arc(BottomLeft), arc(BottomRight));
        loops -= sets.unite(arc(TopLeft), arc(TopRight));
      }
    }
    loops += pd.free_loops;
    ++tally[static_cast<std::size_t>(a_minus_b + static_cast<int>(c))][static_cast<std::size_t>(loops)];
  }
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> d_pow(max_loops + 1);
  d_pow[0] = LaurentPoly(1);
  for (std::size_t k = 1; k <= max_loops; ++k) d_pow[k] = d_pow[k - 1] * d;
  LaurentPoly out;
  for (std::size_t e = 0; e < tally.size(); ++e)
    for (std::size_t loops = 1; loops <= max_loops; ++loops)
      if (tally[e][loops] != 0)
        out += LaurentPoly::monomial(tally[e][loops], static_cast<int>(e) - static_cast<int>(c)) * d_pow[loops - 1];
  return out;
}

inline LaurentPoly kauffman_bracket(const MorseWord& w, int max_crossings = kMaxBracketCrossings) {
  if (crossing_count(w) > max_crossings)
    throw BudgetExceeded("bracket state sum over " + std::to_string(crossing_count(w)) +
                         " crossings exceeds limit of " + std::to_string(max_crossings));
  return kauffman_bracket(planar_diagram(w), max_crossings);
}

/// (-A^3)^(-writhe) times the bracket; invariant under all Reidemeister moves.
inline LaurentPoly jones_normalized(const MorseWord& w, int max_crossings = kMaxBracketCrossings) {
  if (crossing_count(w) > max_crossings)
    throw BudgetExceeded("bracket state sum over " + std::to_string(crossing_count(w)) +
                         " crossings exceeds limit of " + std::to_string(max_crossings));
  const auto pd = planar_diagram(w);
  const int wr = pd.writhe();
  const LaurentPoly factor = LaurentPoly::monomial((wr % 2 == 0) ? 1 : -1, -3 * wr);
  return factor * kauffman_bracket(pd, max_crossings);
}

}  // namespace morse
