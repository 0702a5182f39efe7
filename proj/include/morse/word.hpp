#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "morse/detail/disjoint_sets.hpp"
#include "morse/event.hpp"

namespace morse {

/// Whether a closed word must present a knot or may present a link.
enum class Closure { Knot, Link };

/// Closed components and boundary arcs formed by a locally valid event
/// sequence starting from `boundary` open strands.
struct ComponentCount {
  int closed = 0;
  int arcs = 0;
};

namespace detail {

/// Local validity of one event at a level holding `n` strands.
inline std::optional<Violation> check_event(const Event& e, int n, std::size_t pos) {
  if (e.kind == EventKind::Cross && e.sign != 1 && e.sign != -1)
    return Violation{ErrorCode::BadSign, pos, "crossing sign must be +1 or -1"};
  if (e.kind != EventKind::Cross && e.sign != 0)
    return Violation{ErrorCode::BadSign, pos, "cups and caps carry no sign"};
  switch (e.kind) {
    case EventKind::Cup:
      if (e.index < 1 || e.index > n + 1)
        return Violation{ErrorCode::BadIndex, pos,
                         "cup index must lie in [1, " + std::to_string(n + 1) + "]"};
      break;
    case EventKind::Cap:
      if (n < 2)
        return Violation{ErrorCode::NegativeCount, pos, "cap with fewer than two strands"};
      [[fallthrough]];
    case EventKind::Cross:
      if (e.index < 1 || e.index > n - 1)
        return Violation{ErrorCode::BadIndex, pos,
                         "index must lie in [1, " + std::to_string(n - 1) + "]"};
      break;
  }
  return std::nullopt;
}

/// Follows strand identity through the events with a union-find over strand
/// ends. Boundary strands get their own classes; a cap joining two ends of one
/// class closes a component. `on_close` receives the event offset.
template <class OnClose>
ComponentCount trace(int boundary, std::span<const Event> events, OnClose&& on_close) {
  DisjointSets sets(static_cast<std::size_t>(boundary));
  std::vector<std::size_t> level(sets.size());
  for (std::size_t i = 0; i < level.size(); ++i) level[i] = i;
  ComponentCount out;
  out.arcs = boundary / 2;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const Event& e = events[k];
    const auto at = static_cast<std::size_t>(e.index - 1);
    switch (e.kind) {
      case EventKind::Cup: {
        const std::size_t id = sets.add();
        level.insert(level.begin() + static_cast<std::ptrdiff_t>(at), {id, id});
        break;
      }
      case EventKind::Cap:
        if (!sets.unite(level[at], level[at + 1])) {
          ++out.closed;
          on_close(k);
        }
        level.erase(level.begin() + static_cast<std::ptrdiff_t>(at),
                    level.begin() + static_cast<std::ptrdiff_t>(at) + 2);
        break;
      case EventKind::Cross:
        std::swap(level[at], level[at + 1]);
        break;
    }
  }
  return out;
}

struct Checked {
  std::vector<int> counts;
  std::vector<Violation> violations;
};

inline Checked check_counts(int boundary, std::span<const Event> events) {
  Checked out;
  out.counts.reserve(events.size() + 1);
  int n = boundary;
  out.counts.push_back(n);
  for (std::size_t k = 0; k < events.size(); ++k) {
    if (auto v = check_event(events[k], n, k)) {
      out.violations.push_back(std::move(*v));
    } else {
      n += events[k].delta();
    }
    out.counts.push_back(n);
  }
  if (n != 0)
    out.violations.push_back(
        {ErrorCode::NonzeroEnd, events.size(), "strand count ends at " + std::to_string(n)});
  return out;
}

}  // namespace detail

struct Validation;
Validation validate(std::vector<Event> events, Closure closure = Closure::Knot);

/// A validated closed Morse presentation (knot or link) read bottom to top.
class MorseWord {
 public:
  /// Throws ValidationError.
  static MorseWord from_events(std::vector<Event> events, Closure closure = Closure::Knot);

  std::span<const Event> events() const { return events_; }
  const Event& operator[](std::size_t k) const { return events_[k]; }
  std::size_t size() const { return events_.size(); }

  /// counts()[k] is the strand count on the level just below event k;
  /// counts().back() == 0.
  const std::vector<int>& counts() const { return counts_; }

  int components() const { return components_; }
  bool is_knot() const { return components_ == 1; }

  friend bool operator==(const MorseWord& a, const MorseWord& b) { return a.events_ == b.events_; }

 private:
  MorseWord() = default;
  std::vector<Event> events_;
  std::vector<int> counts_;
  int components_ = 0;

  friend Validation validate(std::vector<Event>, Closure);
};

/// Outcome of validating a raw event sequence.
struct Validation {
  std::optional<MorseWord> word;
  std::vector<Violation> violations;

  bool ok() const { return word.has_value(); }
};

inline Validation validate(std::vector<Event> events, Closure closure) {
  Validation out;
  if (events.empty()) {
    out.violations.push_back({ErrorCode::Empty, 0, "a closed word needs at least one cup and cap"});
    return out;
  }
  auto checked = detail::check_counts(0, events);
  if (!checked.violations.empty()) {
    out.violations = std::move(checked.violations);
    return out;
  }
  const auto traced = detail::trace(0, events, [](std::size_t) {});
  if (closure == Closure::Knot && traced.closed != 1) {
    out.violations.push_back({ErrorCode::MultipleComponents, events.size(),
                              std::to_string(traced.closed) + " components"});
    return out;
  }
  MorseWord w;
  w.events_ = std::move(events);
  w.counts_ = std::move(checked.counts);
  w.components_ = traced.closed;
  out.word = std::move(w);
  return out;
}

inline MorseWord MorseWord::from_events(std::vector<Event> events, Closure closure) {
  auto v = validate(std::move(events), closure);
  if (!v.ok()) throw ValidationError(std::move(v.violations));
  return std::move(*v.word);
}

/// Throws MultipleComponents unless the word presents a knot.
inline const MorseWord& require_knot(const MorseWord& w) {
  if (!w.is_knot())
    throw ValidationError({{ErrorCode::MultipleComponents, w.size(),
                            std::to_string(w.components()) + " components"}});
  return w;
}

inline int component_count(const MorseWord& w) { return w.components(); }

/// Closed components and arcs of any locally valid sequence.
inline ComponentCount component_count(int boundary, std::span<const Event> events) {
  return detail::trace(boundary, events, [](std::size_t) {});
}

/// An n-string tangle: starts from `boundary` = 2n strands on the boundary
/// sphere and ends at the single interior maximum with no strands left.
class TangleWord {
 public:
  /// Throws ValidationError.
  static TangleWord from_events(int boundary, std::vector<Event> events) {
    std::vector<Violation> violations;
    if (boundary <= 0 || boundary % 2 != 0) {
      violations.push_back({ErrorCode::BadBoundary, 0, "boundary strand count must be even and positive"});
      throw ValidationError(std::move(violations));
    }
    auto checked = detail::check_counts(boundary, events);
    if (!checked.violations.empty()) throw ValidationError(std::move(checked.violations));
    detail::trace(boundary, events, [&](std::size_t k) {
      violations.push_back({ErrorCode::ClosedComponent, k, "cap closes a loop inside the tangle"});
    });
    if (!violations.empty()) throw ValidationError(std::move(violations));
    TangleWord t;
    t.boundary_ = boundary;
    t.events_ = std::move(events);
    t.counts_ = std::move(checked.counts);
    return t;
  }

  int boundary() const { return boundary_; }
  int strings() const { return boundary_ / 2; }
  std::span<const Event> events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const TangleWord& a, const TangleWord& b) {
    return a.boundary_ == b.boundary_ && a.events_ == b.events_;
  }

 private:
  TangleWord() = default;
  int boundary_ = 0;
  std::vector<Event> events_;
  std::vector<int> counts_;
};

inline ComponentCount component_count(const TangleWord& t) {
  return component_count(t.boundary(), t.events());
}

}  // namespace morse
