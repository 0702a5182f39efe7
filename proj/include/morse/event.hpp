#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morse {

enum class EventKind : std::uint8_t { Cup, Cap, Cross };

/// One atomic event of a Morse presentation, read bottom to top.
///
/// `index` is the 1-based position of the left strand the event touches. A
/// cup at `index` creates two strands at positions index and index+1, shifting
/// everything above them up by two; a cap joins the strands at index and
/// index+1; a crossing exchanges them. For crossings `sign` is the braid
/// exponent: +1 means the strand rising from position `index` passes over.
/// Cups and caps carry sign 0.
struct Event {
  EventKind kind = EventKind::Cup;
  int index = 1;
  int sign = 0;

  static constexpr Event cup(int i) { return {EventKind::Cup, i, 0}; }
  static constexpr Event cap(int i) { return {EventKind::Cap, i, 0}; }
  static constexpr Event cross(int i, int s) { return {EventKind::Cross, i, s}; }

  constexpr bool is_critical() const { return kind != EventKind::Cross; }
  constexpr bool is_cup() const { return kind == EventKind::Cup; }
  constexpr bool is_cap() const { return kind == EventKind::Cap; }
  constexpr bool is_cross() const { return kind == EventKind::Cross; }

  /// Change in strand count across the event.
  constexpr int delta() const {
    switch (kind) {
      case EventKind::Cup: return 2;
      case EventKind::Cap: return -2;
      case EventKind::Cross: return 0;
    }
    return 0;
  }

  constexpr Event with_index(int i) const { return {kind, i, sign}; }

  friend constexpr bool operator==(const Event&, const Event&) = default;
};

enum class ErrorCode {
  Empty,
  NegativeCount,
  BadIndex,
  BadSign,
  NonzeroEnd,
  MultipleComponents,
  ClosedComponent,
  BadBoundary,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::NonzeroEnd: return "NonzeroEnd";
    case ErrorCode::MultipleComponents: return "MultipleComponents";
    case ErrorCode::ClosedComponent: return "ClosedComponent";
    case ErrorCode::BadBoundary: return "BadBoundary";
  }
  return "Unknown";
}

/// A single validation failure; `position` is the 0-based event offset, or
/// the word length for failures that concern the word as a whole.
struct Violation {
  ErrorCode code;
  std::size_t position;
  std::string detail;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

  bool has(ErrorCode code) const {
    for (const auto& v : violations_)
      if (v.code == code) return true;
    return false;
  }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string msg = "invalid Morse word:";
    for (const auto& v : vs) {
      msg += ' ';
      msg += to_string(v.code);
      msg += " at event ";
      msg += std::to_string(v.position);
      if (!v.detail.empty()) {
        msg += " (";
        msg += v.detail;
        msg += ')';
      }
      msg += ';';
    }
    return msg;
  }

  std::vector<Violation> violations_;
};

/// Raised when an exact computation or search would exceed its hard limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace morse
