#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morse/detail/disjoint_sets.hpp"
#include "morse/dsl.hpp"
#include "morse/word.hpp"

namespace morse {

class UnknownName : public std::invalid_argument {
 public:
  explicit UnknownName(const std::string& name) : std::invalid_argument("unknown catalog entry '" + name + "'") {}
};

/// Closure of the braid (s_1 ... s_{p-1})^q on p strands: nested cups, the
/// braid on the right-hand strands, nested caps. q < 0 gives the mirror.
inline MorseWord torus_plat(int p, int q) {
  if (p < 2 || q == 0) throw std::invalid_argument("torus_plat needs p >= 2 and q != 0");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_plat(p, q) with gcd > 1 is a link");
  std::vector<Event> ev;
  for (int i = 1; i <= p; ++i) ev.push_back(Event::cup(i));
  const int sign = q > 0 ? 1 : -1;
  for (int r = 0; r < std::abs(q); ++r)
    for (int j = 1; j < p; ++j) ev.push_back(Event::cross(p + j, sign));
  for (int i = p; i >= 1; --i) ev.push_back(Event::cap(i));
  return MorseWord::from_events(std::move(ev));
}

/// A crossingless knot word whose thick levels have the given widths (bottom
/// to top) separated by the given thin levels. Cups open at the top of the
/// level; each cap joins the lowest adjacent pair of distinct strands, so the
/// result is always a single unknotted component.
inline MorseWord realize_profile(const std::vector<int>& thick, const std::vector<int>& thin) {
  if (thick.empty() || thin.size() + 1 != thick.size())
    throw std::invalid_argument("profile needs k thick widths and k-1 thin widths");
  for (std::size_t i = 0; i < thick.size(); ++i) {
    if (thick[i] < 2 || thick[i] % 2 != 0) throw std::invalid_argument("thick widths must be even and >= 2");
    if (i < thin.size()) {
      if (thin[i] < 2 || thin[i] % 2 != 0) throw std::invalid_argument("thin widths must be even and >= 2");
      if (thin[i] >= thick[i] || thin[i] >= thick[i + 1])
        throw std::invalid_argument("each thin width must be below its neighbouring thick widths");
    }
  }
  std::vector<Event> ev;
  detail::DisjointSets sets;
  std::vector<std::size_t> level;
  auto rise_to = [&](int target) {
    while (static_cast<int>(level.size()) < target) {
      ev.push_back(Event::cup(static_cast<int>(level.size()) + 1));
      const auto id = sets.add();
      level.push_back(id);
      level.push_back(id);
    }
  };
  auto fall_to = [&](int target) {
    while (static_cast<int>(level.size()) > target) {
      std::size_t at = 0;
      if (level.size() > 2)
        while (sets.find(level[at]) == sets.find(level[at + 1])) ++at;
      ev.push_back(Event::cap(static_cast<int>(at) + 1));
      sets.unite(level[at], level[at + 1]);
      level.erase(level.begin() + static_cast<std::ptrdiff_t>(at),
                  level.begin() + static_cast<std::ptrdiff_t>(at) + 2);
    }
  };
  for (std::size_t i = 0; i < thick.size(); ++i) {
    rise_to(thick[i]);
    fall_to(i < thin.size() ? thin[i] : 0);
  }
  return MorseWord::from_events(std::move(ev));
}

/// Inserts `fingers` zig-zags (a cup immediately followed by a cap) on the
/// rightmost strand of the first widest level. Each finger adds one maximum
/// and does not change the knot type.
inline MorseWord pad(const MorseWord& w, int fingers) {
  std::vector<Event> ev(w.events().begin(), w.events().end());
  for (int f = 0; f < fingers; ++f) {
    auto tmp = MorseWord::from_events(ev, Closure::Link);
    const auto& counts = tmp.counts();
    const auto widest = std::max_element(counts.begin(), counts.end());
    const auto site = static_cast<std::size_t>(widest - counts.begin());
    const int c = *widest;
    ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(site), {Event::cup(c + 1), Event::cap(c)});
  }
  return MorseWord::from_events(std::move(ev), w.is_knot() ? Closure::Knot : Closure::Link);
}

struct CatalogEntry {
  std::string name;
  std::string description;
};

/// Built-in presentations. The profile stand-ins reproduce level profiles
/// only; they carry no crossings, so each of them is an unknot diagram.
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"unknot", "b1 d1"},
      {"trefoil_plat", "left-handed trefoil as the 4-plat of s2^-3"},
      {"figure8_plat", "figure-eight knot as a 4-plat"},
      {"torus_plat(p,q)", "closure of (s1...s(p-1))^q on p strands, gcd(p,q) = 1"},
      {"padded_trefoil", "trefoil_plat with one zig-zag finger: profile 2,4,6,4,2, width 18"},
      {"cex4_gamma", "profile stand-in: 11-bridge position, one thick level of 22, width 242"},
      {"cex4_gamma_prime", "profile stand-in: thick 18,14 thin 6, width 242, 13 maxima"},
      {"bt134", "profile stand-in: thick 10,10,10 thin 4,4, width 134, 11 maxima"},
      {"bt_mcp", "profile stand-in: thick 12,12 thin 4, width 136, 10 maxima"},
      {"stack_101010", "profile stand-in: thick 10,10,10 thin 2,2 (stacked summands)"},
      {"rational_tangle", "tangle 4: a three-twist rational tangle, trunk 4"},
      {"two_rational_sum", "tangle 4: two twist regions joined through a cup, trunk 6"},
  };
  return entries;
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, char sep) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    const auto part = s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("bad integer list '" + std::string(s) + "'");
    out.push_back(v);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

/// Throws UnknownName.
inline AnyWord catalog(std::string_view name) {
  if (name == "unknot") return parse_word("b1 d1");
  if (name == "trefoil_plat") return parse_word("b1 b3 x2- x2- x2- d3 d1");
  if (name == "figure8_plat") return parse_word("b1 b3 x2+ x2+ x1- x2+ d3 d1");
  if (name == "padded_trefoil") return pad(parse_word("b1 b3 x2- x2- x2- d3 d1"), 1);
  if (name == "cex4_gamma") return realize_profile({22}, {});
  if (name == "cex4_gamma_prime") return realize_profile({18, 14}, {6});
  if (name == "bt134") return realize_profile({10, 10, 10}, {4, 4});
  if (name == "bt_mcp") return realize_profile({12, 12}, {4});
  if (name == "stack_101010") return realize_profile({10, 10, 10}, {2, 2});
  if (name == "rational_tangle") return parse("tangle 4 x2+ x2+ x2+ d1 d1");
  if (name == "two_rational_sum") return parse("tangle 4 b3 x2+ x2+ x4- x4- x4- d3 d1 d1");
  if (name.starts_with("torus_plat(") && name.ends_with(")")) {
    auto args = name.substr(11, name.size() - 12);
    std::vector<int> pq;
    try {
      pq = detail::parse_int_list(args, ',');
    } catch (const std::invalid_argument&) {
      throw UnknownName(std::string(name));
    }
    if (pq.size() != 2) throw UnknownName(std::string(name));
    return torus_plat(pq[0], pq[1]);
  }
  throw UnknownName(std::string(name));
}

inline MorseWord catalog_word(std::string_view name) {
  auto w = catalog(name);
  if (auto* m = std::get_if<MorseWord>(&w)) return std::move(*m);
  throw std::invalid_argument("catalog entry '" + std::string(name) + "' is a tangle");
}

/// Resolves a word source:
///   catalog:<name>            built-in entry
///   torus:<p>,<q>             torus_plat(p, q)
///   profile:<thick>/<thin>    realize_profile, comma-separated widths
///   pad:<k>:<source>          source with k zig-zag fingers
///   file:<path> or @<path>    DSL text read from a file
///   anything else             DSL text
inline AnyWord resolve_source(std::string_view src) {
  if (src.starts_with("catalog:")) return catalog(src.substr(8));
  if (src.starts_with("torus:")) {
    const auto pq = detail::parse_int_list(src.substr(6), ',');
    if (pq.size() != 2) throw std::invalid_argument("torus source needs p,q");
    return torus_plat(pq[0], pq[1]);
  }
  if (src.starts_with("profile:")) {
    const auto body = src.substr(8);
    const auto slash = body.find('/');
    const auto thick = detail::parse_int_list(body.substr(0, slash), ',');
    const auto thin =
        slash == std::string_view::npos ? std::vector<int>{} : detail::parse_int_list(body.substr(slash + 1), ',');
    return realize_profile(thick, thin);
  }
  if (src.starts_with("pad:")) {
    const auto rest = src.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("pad source needs pad:<k>:<source>");
    const auto k = detail::parse_int_list(rest.substr(0, colon), ',');
    if (k.size() != 1 || k[0] < 0) throw std::invalid_argument("bad finger count");
    auto inner = resolve_source(rest.substr(colon + 1));
    auto* w = std::get_if<MorseWord>(&inner);
    if (!w) throw std::invalid_argument("cannot pad a tangle");
    return pad(*w, k[0]);
  }
  if (src.starts_with("file:") || src.starts_with("@")) {
    const std::string path(src.substr(src.front() == '@' ? 1 : 5));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
  }
  return parse(src);
}

}  // namespace morse
