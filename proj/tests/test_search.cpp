#include <gtest/gtest.h>

#include <random>

#include "morse/catalog.hpp"
#include "morse/search.hpp"
#include "support/random_words.hpp"

using namespace morse;

namespace {

MorseWord replay(const MorseWord& start, const std::vector<Move>& trace) {
  MorseWord w = start;
  for (const auto& m : trace) w = apply_move(w, m);
  return w;
}

const Objective kWidth{ObjectiveKind::GabaiWidth, std::nullopt};

}  // namespace

TEST(BeamSearch, RemovesFingerFromTrefoil) {
  const auto start = catalog_word("padded_trefoil");
  ASSERT_EQ(width(start), 18);
  const auto r = beam_search(start, kWidth);
  EXPECT_EQ(r.best_report.width, 8);
  EXPECT_EQ(r.best_report.otp_vector, std::vector<int>{4});
  EXPECT_EQ(replay(start, r.trace), r.best_word);
  EXPECT_EQ(jones_normalized(r.best_word), jones_normalized(start));
}

TEST(BeamSearch, OtpObjectiveReachesTrefoilPosition) {
  const auto r = beam_search(catalog_word("padded_trefoil"), {ObjectiveKind::OTPLex, std::nullopt});
  EXPECT_EQ(r.best_report.otp_vector, std::vector<int>{4});
}

TEST(BeamSearch, UnknotStaysPut) {
  const auto start = catalog_word("unknot");
  const auto r = beam_search(start, kWidth);
  EXPECT_EQ(r.best_word, start);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.best_report.width, 2);
}

TEST(BeamSearch, CriticalCountNeverGrows) {
  const auto start = catalog_word("stack_101010");
  const auto r = beam_search(start, {ObjectiveKind::CriticalCount, std::nullopt});
  EXPECT_LE(r.best_report.critical_count, critical_count(start));
  EXPECT_EQ(replay(start, r.trace), r.best_word);
}

TEST(BeamSearch, DeterministicForFixedSeed) {
  const auto start = catalog_word("figure8_plat");
  SearchConfig cfg;
  cfg.max_steps = 6;
  cfg.random_seed = 42;
  const auto a = beam_search(start, kWidth, cfg);
  const auto b = beam_search(start, kWidth, cfg);
  EXPECT_EQ(a.best_word, b.best_word);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.visited, b.visited);
}

TEST(BeamSearch, VisitLimitCarriesBestSoFar) {
  SearchConfig cfg;
  cfg.max_visited = 5;
  try {
    beam_search(catalog_word("padded_trefoil"), kWidth, cfg);
    FAIL() << "expected SearchBudgetExceeded";
  } catch (const SearchBudgetExceeded& e) {
    EXPECT_LE(e.best().best_report.width, 18);
    EXPECT_EQ(replay(catalog_word("padded_trefoil"), e.best().trace), e.best().best_word);
  }
}

TEST(BeamSearch, RejectsLinks) {
  EXPECT_THROW(beam_search(parse_word("b1 d1 b1 d1"), kWidth), ValidationError);
}

TEST(ExhaustiveMin, SmallBalls) {
  EXPECT_EQ(exhaustive_min(catalog_word("trefoil_plat"), kWidth, 2).best_report.width, 8);
  EXPECT_EQ(exhaustive_min(catalog_word("unknot"), kWidth, 3).best_report.width, 2);
  const auto padded = pad(catalog_word("unknot"), 1);
  const auto r = exhaustive_min(padded, kWidth, 1);
  EXPECT_EQ(r.best_report.width, 2);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].kind, MoveKind::ZigZagCancel);
}

TEST(ExhaustiveMin, MonotoneInRadius) {
  std::mt19937_64 rng(5);
  fuzz::RandomWordOptions opt;
  opt.target_events = 10;
  opt.max_crossings = 3;
  for (int i = 0; i < 30; ++i) {
    const auto w = fuzz::random_knot(rng, opt);
    int prev = width(w);
    for (int radius = 0; radius <= 3; ++radius) {
      const auto r = exhaustive_min(w, kWidth, radius);
      EXPECT_LE(r.best_report.width, prev);
      EXPECT_EQ(replay(w, r.trace), r.best_word);
      EXPECT_LE(static_cast<int>(r.trace.size()), radius);
      prev = r.best_report.width;
    }
  }
}

TEST(ExhaustiveMin, NeverWorseThanBeamOfSameDepth) {
  std::mt19937_64 rng(11);
  fuzz::RandomWordOptions opt;
  opt.target_events = 10;
  opt.max_crossings = 3;
  for (int i = 0; i < 40; ++i) {
    const auto w = fuzz::random_knot(rng, opt);
    SearchConfig cfg;
    cfg.max_steps = 2;
    cfg.insertion_budget = 0;
    const auto beam = beam_search(w, kWidth, cfg);
    const auto ex = exhaustive_min(w, kWidth, 2);
    EXPECT_LE(ex.best_report.width, beam.best_report.width) << serialize(w);
  }
}

TEST(CanonicalKey, IdempotentAndCommuteInvariant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto w = fuzz::random_knot(rng);
    const auto once = canonical_events(w.events());
    EXPECT_EQ(canonical_events(once), once);
    EXPECT_EQ(component_count(0, once).closed, 1);
    for (const auto& m : enumerate_moves(w, {false})) {
      if (m.kind != MoveKind::CommuteDistant) continue;
      const auto v = apply_move(w, m);
      if (v[m.site].is_cross() || v[m.site + 1].is_cross())
        EXPECT_EQ(canonical_key(v), canonical_key(w)) << serialize(w);
    }
  }
}

TEST(ClassifyPositions, PaddedTrefoilIsInNoMinimalSet) {
  const std::vector<MorseWord> ws{catalog_word("trefoil_plat"), catalog_word("padded_trefoil")};
  const auto c = classify_positions(ws);
  EXPECT_EQ(c.classes[0].cell(), "TP,MCP,OTP");
  EXPECT_EQ(c.classes[1].cell(), "none");
}

TEST(ClassifyPositions, SingletonIsEverything) {
  const std::vector<MorseWord> ws{catalog_word("figure8_plat")};
  EXPECT_EQ(classify_positions(ws).classes[0].cell(), "TP,MCP,OTP");
}

TEST(ClassifyPositions, ThinAndCriticalDisagree) {
  const std::vector<MorseWord> ws{catalog_word("bt134"), catalog_word("bt_mcp")};
  const auto c = classify_positions(ws);
  EXPECT_EQ(c.reports[0].width, 134);
  EXPECT_EQ(c.reports[1].width, 136);
  EXPECT_EQ(c.classes[0].cell(), "TP,OTP");
  EXPECT_EQ(c.classes[1].cell(), "MCP");
}

TEST(ClassifyPositions, DifferentKnotsAreRejected) {
  const std::vector<MorseWord> ws{catalog_word("trefoil_plat"), catalog_word("figure8_plat")};
  EXPECT_THROW(classify_positions(ws), BracketMismatch);
  EXPECT_NO_THROW(classify_positions(ws, false));
}

TEST(Objective, TiebreakAppliesOnlyOnTies) {
  const auto a = analyze(catalog_word("bt134"));
  const auto b = analyze(catalog_word("bt_mcp"));
  const Objective trunk_then_crit{ObjectiveKind::TrunkOnly, ObjectiveKind::CriticalCount};
  EXPECT_LT(a.trunk, b.trunk);
  EXPECT_TRUE(trunk_then_crit.compare(a, b) < 0);
  const Objective width_then_crit{ObjectiveKind::GabaiWidth, ObjectiveKind::CriticalCount};
  EXPECT_TRUE(width_then_crit.compare(a, b) < 0);
  EXPECT_TRUE(width_then_crit.compare(a, a) == 0);
}
