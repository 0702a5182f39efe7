#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "morse/bracket.hpp"
#include "morse/catalog.hpp"
#include "morse/json.hpp"
#include "morse/render.hpp"
#include "morse/search.hpp"

namespace morse {

enum ExitCode : int { kOk = 0, kValidation = 1, kSyntax = 2, kBudget = 3 };

namespace detail {

inline ObjectiveKind parse_objective(const std::string& s) {
  if (s == "width") return ObjectiveKind::GabaiWidth;
  if (s == "critical") return ObjectiveKind::CriticalCount;
  if (s == "otp") return ObjectiveKind::OTPLex;
  if (s == "trunk") return ObjectiveKind::TrunkOnly;
  throw std::invalid_argument("unknown objective '" + s + "'");
}

inline MorseWord closed_source(const std::string& src) {
  auto w = resolve_source(src);
  if (auto* m = std::get_if<MorseWord>(&w)) return std::move(*m);
  throw ValidationError({{ErrorCode::BadBoundary, 0, "'" + src + "' is a tangle; a closed word is required"}});
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse-word calculus: width, trunk, height and position search for knots"};
  app.require_subcommand(1);

  std::string src_a;
  std::string src_b;
  std::string objective = "width";
  std::string format = "ascii";
  std::string entry;
  SearchConfig cfg;

  auto* analyze_cmd = app.add_subcommand("analyze", "Print the embedding report as JSON");
  analyze_cmd->add_option("source", src_a, "Word source")->required();

  auto* optimize_cmd = app.add_subcommand("optimize", "Beam search for a better position");
  optimize_cmd->add_option("source", src_a, "Word source")->required();
  optimize_cmd->add_option("--objective", objective, "width|critical|otp|trunk");
  optimize_cmd->add_option("--beam", cfg.beam_width, "Beam width");
  optimize_cmd->add_option("--steps", cfg.max_steps, "Maximum search depth");
  optimize_cmd->add_option("--seed", cfg.random_seed, "Tie-break seed");
  optimize_cmd->add_option("--insertions", cfg.insertion_budget, "Growth moves allowed per path");
  optimize_cmd->add_option("--max-visited", cfg.max_visited, "Visit limit");

  auto* sum_cmd = app.add_subcommand("sum", "Connected sum of two knot words");
  sum_cmd->add_option("a", src_a)->required();
  sum_cmd->add_option("b", src_b)->required();

  auto* compare_cmd = app.add_subcommand("compare", "Compare two words in the OTP order");
  compare_cmd->add_option("a", src_a)->required();
  compare_cmd->add_option("b", src_b)->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket and normalized bracket");
  bracket_cmd->add_option("source", src_a)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in words, or print one");
  catalog_cmd->add_option("name", entry);

  auto* render_cmd = app.add_subcommand("render", "Draw the level profile");
  render_cmd->add_option("source", src_a)->required();
  render_cmd->add_option("--format", format, "ascii|svg");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kSyntax;
  }

  try {
    if (analyze_cmd->parsed()) {
      auto w = resolve_source(src_a);
      if (auto* t = std::get_if<TangleWord>(&w)) {
        Json j;
        j["boundary"] = t->boundary();
        j["trunk"] = tangle_trunk(*t);
        j["arcs"] = component_count(*t).arcs;
        out << j.dump(2) << '\n';
      } else {
        out << to_json(analyze(std::get<MorseWord>(w))).dump(2) << '\n';
      }
    } else if (optimize_cmd->parsed()) {
      const auto start = detail::closed_source(src_a);
      const Objective obj{detail::parse_objective(objective), std::nullopt};
      SearchResult result = [&] {
        try {
          return beam_search(start, obj, cfg);
        } catch (const SearchBudgetExceeded& e) {
          err << e.what() << '\n';
          out << to_json(e.best()).dump(2) << '\n';
          throw;
        }
      }();
      Json j;
      j["start_word"] = serialize(start);
      j["start_report"] = to_json(analyze(start));
      j["objective"] = objective;
      j.update(to_json(result));
      out << j.dump(2) << '\n';
    } else if (sum_cmd->parsed()) {
      const auto s = connected_sum(detail::closed_source(src_a), detail::closed_source(src_b));
      Json j;
      j["word"] = serialize(s);
      j["report"] = to_json(analyze(s));
      out << j.dump(2) << '\n';
    } else if (compare_cmd->parsed()) {
      const auto a = otp_vector(require_knot(detail::closed_source(src_a)));
      const auto b = otp_vector(require_knot(detail::closed_source(src_b)));
      const auto c = otp_compare(a, b);
      Json j;
      j["a"] = a;
      j["b"] = b;
      j["order"] = c < 0 ? "less" : c > 0 ? "greater" : "equal";
      j["otp_less"] = c < 0 ? Json("a") : c > 0 ? Json("b") : Json(nullptr);
      out << j.dump(2) << '\n';
    } else if (bracket_cmd->parsed()) {
      const auto w = detail::closed_source(src_a);
      Json j;
      j["crossings"] = crossing_count(w);
      j["components"] = w.components();
      j["writhe"] = writhe(w);
      j["bracket"] = kauffman_bracket(w).str();
      j["jones_normalized"] = jones_normalized(w).str();
      out << j.dump(2) << '\n';
    } else if (catalog_cmd->parsed()) {
      if (entry.empty()) {
        for (const auto& e : catalog_entries()) out << e.name << "  " << e.description << '\n';
      } else {
        out << serialize(catalog(entry)) << '\n';
      }
    } else if (render_cmd->parsed()) {
      out << render_profile(detail::closed_source(src_a), parse_render_format(format));
    }
  } catch (const SyntaxError& e) {
    err << e.what() << '\n';
    return kSyntax;
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}

}  // namespace morse
