#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "morse/invariants.hpp"

namespace morse {

enum class RenderFormat { Ascii, Svg };

inline RenderFormat parse_render_format(std::string_view s) {
  if (s == "ascii") return RenderFormat::Ascii;
  if (s == "svg") return RenderFormat::Svg;
  throw std::invalid_argument("unknown render format '" + std::string(s) + "'");
}

// Gaps are drawn top to bottom so the picture reads like the height function.

inline std::string render_ascii(const LevelProfile& p) {
  int widest = 0;
  for (const auto& g : p.gaps) widest = std::max(widest, g.width);
  const double scale = widest > 64 ? 64.0 / widest : 1.0;
  std::ostringstream out;
  for (auto it = p.gaps.rbegin(); it != p.gaps.rend(); ++it) {
    const auto len = std::max<std::size_t>(1, static_cast<std::size_t>(it->width * scale + 0.5));
    std::string label(to_string(it->classification));
    label.resize(7, ' ');
    out << (it->width < 10 ? "   " : it->width < 100 ? "  " : " ") << it->width << ' ' << label << ' '
        << std::string(len, '#') << '\n';
  }
  return out.str();
}

inline std::string render_svg(const LevelProfile& p) {
  constexpr int unit = 8;
  constexpr int bar = 14;
  constexpr int label = 90;
  int widest = 0;
  for (const auto& g : p.gaps) widest = std::max(widest, g.width);
  const int w = label + widest * unit + 10;
  const int h = static_cast<int>(p.gaps.size()) * (bar + 4) + 8;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  int y = 4;
  for (auto it = p.gaps.rbegin(); it != p.gaps.rend(); ++it, y += bar + 4) {
    const char* fill = it->classification == GapClass::Thick  ? "#c0392b"
                       : it->classification == GapClass::Thin ? "#2980b9"
                                                              : "#95a5a6";
    out << "  <text x=\"4\" y=\"" << y + bar - 3 << "\" font-size=\"11\">" << it->width << ' '
        << to_string(it->classification) << "</text>\n";
    out << "  <rect class=\"" << to_string(it->classification) << "\" x=\"" << label << "\" y=\"" << y
        << "\" width=\"" << it->width * unit << "\" height=\"" << bar << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string render_profile(const MorseWord& w, RenderFormat f) {
  const auto p = level_profile(w);
  return f == RenderFormat::Ascii ? render_ascii(p) : render_svg(p);
}

}  // namespace morse
