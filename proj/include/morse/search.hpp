#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "morse/bracket.hpp"
#include "morse/dsl.hpp"
#include "morse/invariants.hpp"
#include "morse/moves.hpp"

namespace morse {

enum class ObjectiveKind { GabaiWidth, CriticalCount, OTPLex, TrunkOnly };

inline std::string_view to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::GabaiWidth: return "width";
    case ObjectiveKind::CriticalCount: return "critical";
    case ObjectiveKind::OTPLex: return "otp";
    case ObjectiveKind::TrunkOnly: return "trunk";
  }
  return "?";
}

/// Total preorder on embeddings. OTPLex compares thick-width vectors and
/// breaks ties by total width.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::GabaiWidth;
  std::optional<ObjectiveKind> tiebreak;

  static std::weak_ordering compare_by(ObjectiveKind k, const EmbeddingReport& a, const EmbeddingReport& b) {
    switch (k) {
      case ObjectiveKind::GabaiWidth: return a.width <=> b.width;
      case ObjectiveKind::CriticalCount: return a.critical_count <=> b.critical_count;
      case ObjectiveKind::TrunkOnly: return a.trunk <=> b.trunk;
      case ObjectiveKind::OTPLex: {
        const auto c = otp_compare(a.otp_vector, b.otp_vector);
        if (c != 0) return c;
        return a.width <=> b.width;
      }
    }
    return std::weak_ordering::equivalent;
  }

  std::weak_ordering compare(const EmbeddingReport& a, const EmbeddingReport& b) const {
    const auto c = compare_by(kind, a, b);
    if (c != 0 || !tiebreak) return c;
    return compare_by(*tiebreak, a, b);
  }
};

/// Commutation-class key. Critical events keep their order; crossings sit as
/// low as distant commutation allows, and among crossings competing for the
/// same slot the lowest index goes first. Words related by commuting a
/// crossing past a distant event share one form.
inline std::vector<Event> canonical_events(std::span<const Event> events) {
  std::vector<Event> rest(events.begin(), events.end());
  std::vector<Event> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t pick = 0;
    std::optional<Event> lowest;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (!rest[j].is_cross()) continue;
      Event moving = rest[j];
      bool reaches = true;
      for (std::size_t k = j; k-- > 0;) {
        auto swapped = commute(rest[k], moving);
        if (!swapped) {
          reaches = false;
          break;
        }
        moving = swapped->first;
      }
      if (reaches && (!lowest || moving.index < lowest->index)) {
        lowest = moving;
        pick = j;
      }
    }
    if (!lowest) {
      out.push_back(rest.front());
      rest.erase(rest.begin());
      continue;
    }
    // Slide the chosen crossing to the front, reindexing what it passes.
    for (std::size_t k = pick; k-- > 0;) {
      auto swapped = commute(rest[k], rest[k + 1]);
      rest[k] = swapped->first;
      rest[k + 1] = swapped->second;
    }
    out.push_back(rest.front());
    rest.erase(rest.begin());
  }
  return out;
}

inline std::string canonical_key(const MorseWord& w) { return serialize(canonical_events(w.events())); }

struct SearchConfig {
  int beam_width = 16;
  int max_steps = 32;
  int insertion_budget = 1;
  std::uint64_t random_seed = 0;
  std::size_t max_visited = 2'000'000;
};

struct SearchResult {
  MorseWord best_word;
  EmbeddingReport best_report;
  std::vector<Move> trace;
  std::size_t visited = 0;
};

/// Thrown when a search hits its visit limit; carries the best word so far.
class SearchBudgetExceeded : public BudgetExceeded {
 public:
  explicit SearchBudgetExceeded(SearchResult best)
      : BudgetExceeded("search visit limit reached after " + std::to_string(best.visited) + " words"),
        best_(std::move(best)) {}
  const SearchResult& best() const { return best_; }

 private:
  SearchResult best_;
};

namespace detail {

inline std::uint64_t mix(std::string_view key, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= seed + 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

struct SearchNode {
  MorseWord word;
  EmbeddingReport report;
  std::vector<Move> trace;
  int insertions = 0;
  std::string key;
  std::uint64_t order = 0;
};

}  // namespace detail

/// Beam search over the move graph. Every step expands the whole beam, keeps
/// the `beam_width` best unseen successors, and remembers the best word seen.
/// Words are deduplicated exactly; when the successors overflow the beam, one
/// word per canonical class is kept ahead of its commutation variants.
inline SearchResult beam_search(const MorseWord& start, const Objective& objective, const SearchConfig& config = {}) {
  require_knot(start);
  if (config.beam_width < 1 || config.max_steps < 0 || config.insertion_budget < 0)
    throw std::invalid_argument("search bounds must be positive");
  using detail::SearchNode;
  std::unordered_set<std::string> visited;
  SearchNode root{start, analyze(start), {}, 0, canonical_key(start), 0};
  visited.insert(serialize(start));
  SearchResult best{start, root.report, {}, 1};
  std::vector<SearchNode> beam{root};

  auto before = [&](const SearchNode& a, const SearchNode& b) {
    const auto c = objective.compare(a.report, b.report);
    if (c != 0) return c < 0;
    if (a.order != b.order) return a.order < b.order;
    return a.key < b.key;
  };

  for (int step = 0; step < config.max_steps; ++step) {
    std::vector<SearchNode> next;
    for (const auto& node : beam) {
      const MoveOptions opts{node.insertions < config.insertion_budget};
      for (const auto& m : enumerate_moves(node.word, opts)) {
        auto w = apply_move(node.word, m);
        if (!visited.insert(serialize(w)).second) continue;
        best.visited = visited.size();
        if (visited.size() > config.max_visited) throw SearchBudgetExceeded(best);
        auto key = canonical_key(w);
        SearchNode child{w, analyze(w), node.trace, node.insertions + (is_insertion(m.kind) ? 1 : 0),
                         std::move(key), 0};
        child.trace.push_back(m);
        child.order = detail::mix(child.key, config.random_seed);
        next.push_back(std::move(child));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), before);
    const auto width = static_cast<std::size_t>(config.beam_width);
    if (next.size() > width) {
      std::unordered_set<std::string> classes;
      std::stable_partition(next.begin(), next.end(),
                            [&](const SearchNode& n) { return classes.insert(n.key).second; });
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(width), next.end());
      std::sort(next.begin(), next.end(), before);
    }
    if (objective.compare(next.front().report, best.best_report) < 0) {
      best.best_word = next.front().word;
      best.best_report = next.front().report;
      best.trace = next.front().trace;
    }
    beam = std::move(next);
  }
  best.visited = visited.size();
  return best;
}

struct ExhaustiveOptions {
  int insertion_budget = 0;
  std::size_t max_visited = 2'000'000;
};

/// Breadth-first enumeration of every word within `radius` moves of `start`.
/// Words are deduplicated exactly, so the optimum is over the whole ball.
inline SearchResult exhaustive_min(const MorseWord& start, const Objective& objective, int radius,
                                   const ExhaustiveOptions& opts = {}) {
  require_knot(start);
  struct Node {
    MorseWord word;
    EmbeddingReport report;
    std::size_t parent;
    Move move;
    int insertions;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  auto state_key = [](const MorseWord& w, int ins) { return std::to_string(ins) + '|' + serialize(w); };
  nodes.push_back({start, analyze(start), 0, {}, 0});
  seen.insert(state_key(start, 0));
  std::size_t best = 0;

  auto result = [&](std::size_t idx) {
    SearchResult r{nodes[idx].word, nodes[idx].report, {}, seen.size()};
    for (std::size_t i = idx; i != 0; i = nodes[i].parent) r.trace.push_back(nodes[i].move);
    std::reverse(r.trace.begin(), r.trace.end());
    return r;
  };

  std::size_t layer_begin = 0;
  for (int depth = 0; depth < radius; ++depth) {
    const std::size_t layer_end = nodes.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const MoveOptions mo{nodes[i].insertions < opts.insertion_budget};
      for (const auto& m : enumerate_moves(nodes[i].word, mo)) {
        auto w = apply_move(nodes[i].word, m);
        const int ins = nodes[i].insertions + (is_insertion(m.kind) ? 1 : 0);
        if (!seen.insert(state_key(w, ins)).second) continue;
        if (seen.size() > opts.max_visited) throw SearchBudgetExceeded(result(best));
        auto report = analyze(w);
        nodes.push_back({std::move(w), std::move(report), i, m, ins});
        if (objective.compare(nodes.back().report, nodes[best].report) < 0) best = nodes.size() - 1;
      }
    }
    layer_begin = layer_end;
    if (layer_begin == nodes.size()) break;
  }
  return result(best);
}

class BracketMismatch : public std::runtime_error {
 public:
  BracketMismatch(std::size_t a, std::size_t b)
      : std::runtime_error("words " + std::to_string(a) + " and " + std::to_string(b) +
                           " have different normalized brackets") {}
};

/// Membership in the width-, critical- and OTP-minimal subsets of a set of
/// positions. These are minima over the supplied set only.
struct PositionClass {
  bool width_minimal = false;
  bool critical_minimal = false;
  bool otp_minimal = false;

  /// "TP,MCP,OTP", "MCP", ..., or "none".
  std::string cell() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
      if (!on) return;
      if (!out.empty()) out += ',';
      out += name;
    };
    add(width_minimal, "TP");
    add(critical_minimal, "MCP");
    add(otp_minimal, "OTP");
    return out.empty() ? "none" : out;
  }
};

struct Classification {
  std::vector<EmbeddingReport> reports;
  std::vector<PositionClass> classes;
};

/// When `verify` is set, every word must share the normalized bracket of the
/// first one, otherwise BracketMismatch.
inline Classification classify_positions(std::span<const MorseWord> words, bool verify = true) {
  Classification out;
  if (words.empty()) return out;
  if (verify) {
    const auto ref = jones_normalized(words[0]);
    for (std::size_t i = 1; i < words.size(); ++i)
      if (jones_normalized(words[i]) != ref) throw BracketMismatch(0, i);
  }
  for (const auto& w : words) out.reports.push_back(analyze(w));
  auto min_by = [&](ObjectiveKind k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.reports.size(); ++i)
      if (Objective::compare_by(k, out.reports[i], out.reports[best]) < 0) best = i;
    return out.reports[best];
  };
  const auto w_min = min_by(ObjectiveKind::GabaiWidth);
  const auto c_min = min_by(ObjectiveKind::CriticalCount);
  const auto o_min = min_by(ObjectiveKind::OTPLex);
  for (const auto& r : out.reports) {
    PositionClass pc;
    pc.width_minimal = r.width == w_min.width;
    pc.critical_minimal = r.critical_count == c_min.critical_count;
    pc.otp_minimal = otp_compare(r.otp_vector, o_min.otp_vector) == 0;
    out.classes.push_back(pc);
  }
  return out;
}

}  // namespace morse
