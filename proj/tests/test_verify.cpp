#include <gtest/gtest.h>

#include <fstream>

#include "crossforge/bounds_table.hpp"
#include "crossforge/conformance.hpp"
#include "crossforge/verify.hpp"

using namespace crossforge;

TEST(Verify, QuickGridClassifiesEveryCell) {
  const auto r = verify_sweep(quick_options());
  ASSERT_FALSE(r.cells.empty());
  EXPECT_EQ(r.count(CellStatus::Match) + r.count(CellStatus::Mismatch) + r.count(CellStatus::NotApplicable),
            r.cells.size());
  EXPECT_EQ(r.discrepancies().size(), r.count(CellStatus::Mismatch));
}

TEST(Verify, ClosedFormsAllMatch) {
  VerifyOptions o;
  o.lemmas = {"2.1", "3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8", "3.12", "3.13", "3.14", "4.1", "4.2"};
  const auto r = verify_sweep(o);
  for (const auto& c : r.cells) EXPECT_NE(c.status, CellStatus::Mismatch) << c.lemma << " m=" << c.m;
  EXPECT_GT(r.count(CellStatus::Match), 0u);
}

TEST(Verify, ThreadCountDoesNotChangeOutput) {
  auto o = quick_options();
  o.threads = 1;
  const auto a = verify_sweep(o).to_csv();
  o.threads = 4;
  EXPECT_EQ(verify_sweep(o).to_csv(), a);
}

TEST(Verify, CsvShape) {
  VerifyOptions o;
  o.lemmas = {"3.12"};
  o.m_hi = 6;
  o.n_hi = 5;
  const std::string csv = verify_sweep(o).to_csv();
  EXPECT_EQ(csv.rfind("lemma,m,n,l,branch,printed,computed,status\n", 0), 0u);
}

TEST(Verify, RejectsUnknownLemma) {
  VerifyOptions o;
  o.lemmas = {"9.9"};
  EXPECT_THROW(verify_sweep(o), std::invalid_argument);
}

TEST(Verify, WrongSignReadingIsCaught) {
  VerifyOptions o;
  o.lemmas = {"3.12"};
  o.m_hi = 15;
  o.n_lo = 3;
  o.n_hi = 7;
  o.sign = SignReading::Literal;
  EXPECT_FALSE(verify_sweep(o).all_match());
}

TEST(BoundsTable, RowsAndCsv) {
  const auto rows = bounds_table(Family::Cycle, 4, 5, 3, 4);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].m, 4);
  EXPECT_EQ(rows[0].n, 3);
  EXPECT_EQ(rows[1].upper, ExactValue(56));
  ASSERT_TRUE(rows[1].drawing.has_value());
  EXPECT_EQ(*rows[1].drawing, ExactValue(56));
  const std::string csv = bounds_csv(rows);
  EXPECT_EQ(csv.rfind("m,n,family,lower_raw,lower_clamped,upper,ratio,drawing\n", 0), 0u);
  EXPECT_EQ(bounds_json(rows).at("rows").size(), 4u);
}

TEST(BoundsTable, DefersShortPaths) {
  EXPECT_THROW(bounds_table(Family::Path, 4, 6, 2, 5), DeferredCase);
  EXPECT_THROW(bounds_table(Family::Path, 2, 3, 2, 5), DeferredCase);
  EXPECT_EQ(bounds_table(Family::Path, 2, 3, 4, 5).size(), 4u);
}

TEST(Conformance, CheckedInFileIsCurrent) {
  std::ifstream in(std::string(CROSSFORGE_SOURCE_DIR) + "/conformance/interpretations.json");
  ASSERT_TRUE(in.good());
  const auto stored = nlohmann::ordered_json::parse(in);
  EXPECT_EQ(stored, conformance_document());
  const auto d = parse_interpretations(nlohmann::json::parse(stored.dump()));
  EXPECT_EQ(d.sign, default_interpretations().sign);
  EXPECT_EQ(d.alternation, default_interpretations().alternation);
}

TEST(Conformance, DefaultsWinTheirEvidence) {
  const auto doc = conformance_document();
  const auto& ev = doc.at("evidence");
  const auto& sign = ev.at("sign");
  EXPECT_EQ(sign.at("exponent-m-minus-n-floor").at("match"), sign.at("exponent-m-minus-n-floor").at("cells"));
  const auto& alt = ev.at("alternation").at(doc.at("defaults").at("alternation").get<std::string>());
  EXPECT_EQ(alt.at("closes"), alt.at("cells"));
  EXPECT_EQ(alt.at("totals_match"), alt.at("cells"));
}
