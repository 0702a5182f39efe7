#pragma once

#include <charconv>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "morse/word.hpp"

namespace morse {

// Text format, one token per event, whitespace separated:
//   b<i>   Cup(i)
//   d<i>   Cap(i)
//   x<i>+  Cross(i, +1)
//   x<i>-  Cross(i, -1)
// An optional leading header `tangle <2n>` makes the text a tangle word.
// `#` starts a comment running to the end of the line.

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                           what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParsedEvents {
  std::optional<int> tangle_boundary;
  std::vector<Event> events;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      const std::size_t start = i;
      const std::size_t start_col = col;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n' &&
             text[i] != '#') {
        ++i;
        ++col;
      }
      out.push_back({text.substr(start, i - start), line, start_col});
    }
  }
  return out;
}

inline std::optional<int> parse_positive(std::string_view digits) {
  if (digits.empty() || digits.front() == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

inline Event parse_event(const Token& t) {
  const std::string_view s = t.text;
  const char head = s.front();
  std::string_view digits = s.substr(1);
  int sign = 0;
  if (head == 'x') {
    if (digits.empty() || (digits.back() != '+' && digits.back() != '-'))
      throw SyntaxError(t.line, t.column, "crossing token '" + std::string(s) + "' needs a trailing + or -");
    sign = digits.back() == '+' ? 1 : -1;
    digits.remove_suffix(1);
  } else if (head != 'b' && head != 'd') {
    throw SyntaxError(t.line, t.column, "unknown token '" + std::string(s) + "'");
  }
  const auto index = parse_positive(digits);
  if (!index) throw SyntaxError(t.line, t.column, "bad strand index in '" + std::string(s) + "'");
  switch (head) {
    case 'b': return Event::cup(*index);
    case 'd': return Event::cap(*index);
    default: return Event::cross(*index, sign);
  }
}

}  // namespace detail

/// Tokenizes and decodes events without validating the word.
inline ParsedEvents parse_events(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  ParsedEvents out;
  std::size_t k = 0;
  if (!tokens.empty() && tokens[0].text == "tangle") {
    if (tokens.size() < 2) throw SyntaxError(tokens[0].line, tokens[0].column, "tangle header needs a strand count");
    const auto n = detail::parse_positive(tokens[1].text);
    if (!n) throw SyntaxError(tokens[1].line, tokens[1].column, "bad boundary strand count");
    out.tangle_boundary = *n;
    k = 2;
  }
  for (; k < tokens.size(); ++k) {
    if (tokens[k].text == "tangle")
      throw SyntaxError(tokens[k].line, tokens[k].column, "tangle header must come first");
    out.events.push_back(detail::parse_event(tokens[k]));
  }
  return out;
}

using AnyWord = std::variant<MorseWord, TangleWord>;

/// Parses and validates. Closed words may present links; knot-level
/// operations reject those themselves. Throws SyntaxError or ValidationError.
inline AnyWord parse(std::string_view text) {
  auto parsed = parse_events(text);
  if (parsed.tangle_boundary) return TangleWord::from_events(*parsed.tangle_boundary, std::move(parsed.events));
  return MorseWord::from_events(std::move(parsed.events), Closure::Link);
}

/// Parses text that must be a closed word.
inline MorseWord parse_word(std::string_view text) {
  auto w = parse(text);
  if (auto* m = std::get_if<MorseWord>(&w)) return std::move(*m);
  throw ValidationError({{ErrorCode::BadBoundary, 0, "expected a closed word, got a tangle"}});
}

inline std::string to_token(const Event& e) {
  switch (e.kind) {
    case EventKind::Cup: return "b" + std::to_string(e.index);
    case EventKind::Cap: return "d" + std::to_string(e.index);
    case EventKind::Cross: return "x" + std::to_string(e.index) + (e.sign > 0 ? "+" : "-");
  }
  return "?";
}

inline std::string serialize(std::span<const Event> events) {
  std::string out;
  for (const auto& e : events) {
    if (!out.empty()) out += ' ';
    out += to_token(e);
  }
  return out;
}

inline std::string serialize(const MorseWord& w) { return serialize(w.events()); }

inline std::string serialize(const TangleWord& t) {
  std::string out = "tangle " + std::to_string(t.boundary());
  if (t.size() > 0) out += ' ' + serialize(t.events());
  return out;
}

inline std::string serialize(const AnyWord& w) {
  return std::visit([](const auto& x) { return serialize(x); }, w);
}

}  // namespace morse
