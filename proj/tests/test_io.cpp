#include <gtest/gtest.h>

#include "support.hpp"
#include "tfn/io.hpp"

using namespace tfn;
using tfn::test::Q;
using tfn::test::T;

namespace {

const char* kExample1 =
    "label,lo,peak,hi\n"
    "# comment\n"
    "alpha,-0.5,-0.3,-0.1\n"
    "\n"
    "neg_alpha,0.1,0.3,0.5\n"
    "beta,0.2806,0.4806,0.6806\n"
    "gamma,0.7,0.7,0.7\n";

std::size_t position(const RankResult& r, const std::string& label) {
  return static_cast<std::size_t>(std::find(r.ranking.begin(), r.ranking.end(), label) - r.ranking.begin());
}

}  // namespace

TEST(ParseTfn, AcceptsTriplesAndScalars) {
  EXPECT_EQ(parse_tfn("(0.2, 0.5, 0.8)"), Tfn::make(Q("1/5"), Q("1/2"), Q("4/5")));
  EXPECT_EQ(parse_tfn("1/3,1/2,1"), Tfn::make(Q("1/3"), Q("1/2"), 1));
  EXPECT_EQ(parse_tfn("0.7"), Tfn::scalar(Q("7/10")));
  EXPECT_EQ(parse_tfn("  ( -1 ,0, 1 ) "), Tfn::zero_symmetric(1));
}

TEST(ParseTfn, ReportsColumns) {
  try {
    parse_tfn("(0, 1, 2x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 9U);
  }
  EXPECT_THROW(parse_tfn("(1, 0, 2)"), ParseError);
  EXPECT_THROW(parse_tfn("(1, 2)"), ParseError);
  EXPECT_THROW(parse_tfn(""), ParseError);
}

TEST(Csv, ParsesExampleDataset) {
  const Dataset d = parse_csv(kExample1);
  ASSERT_EQ(d.entries.size(), 4U);
  EXPECT_EQ(d.entries[0].label, "alpha");
  EXPECT_EQ(d.entries[1].value, -d.entries[0].value);
  EXPECT_EQ(d.entries[3].value, Tfn::scalar(Q("0.7")));
}

TEST(Csv, ErrorsCarryRowAndColumn) {
  try {
    parse_csv("label,lo,peak,hi\na,0,1,2\nb,0,1x,2\n");
    FAIL();
  } catch (const DatasetError& e) {
    EXPECT_EQ(e.row(), 3U);
    EXPECT_EQ(e.column(), 6U);
  }
  try {
    parse_csv("a,0,1,2\nb,1,2\n");
    FAIL();
  } catch (const DatasetError& e) {
    EXPECT_EQ(e.row(), 2U);
  }
  try {
    parse_csv("a,0,1,2\na,1,2,3\n");
    FAIL();
  } catch (const DatasetError& e) {
    EXPECT_EQ(e.row(), 2U);
    EXPECT_EQ(e.column(), 1U);
  }
  EXPECT_THROW(parse_csv("a,3,1,2\n"), DatasetError);
  EXPECT_THROW(parse_csv(",0,1,2\n"), DatasetError);
}

TEST(Json, ParsesAndRejectsFloats) {
  const Dataset d = parse_json_dataset(R"([{"label":"x","lo":-1,"peak":"0","hi":"1/2"}])");
  ASSERT_EQ(d.entries.size(), 1U);
  EXPECT_EQ(d.entries[0].value, T("(-1,0,1/2)"));
  EXPECT_THROW(parse_json_dataset(R"([{"label":"x","lo":0.1,"peak":1,"hi":2}])"), DatasetError);
  EXPECT_THROW(parse_json_dataset(R"({"label":"x"})"), DatasetError);
  EXPECT_THROW(parse_json_dataset("[1,"), DatasetError);
}

TEST(Rank, ExampleOneVerdicts) {
  const Dataset d = parse_csv(kExample1);
  for (const OrderId& o : {OrderId(OrderId::Kind::TotalSum), OrderId(OrderId::Kind::UpperSum)}) {
    const RankResult r = rank(d, o);
    EXPECT_LT(position(r, "alpha"), position(r, "neg_alpha")) << o.name();
    EXPECT_LT(position(r, "beta"), position(r, "gamma")) << o.name();
    EXPECT_EQ(r.matrix[0][1], std::strong_ordering::less);
    EXPECT_EQ(r.matrix[2][3], std::strong_ordering::less);
  }
}

TEST(Rank, MatchesSortingByTheComparator) {
  SampleConfig cfg;
  cfg.seed = 9;
  Sampler s(cfg);
  for (const OrderId& o : all_orders()) {
    Dataset d;
    for (int i = 0; i < 25; ++i) d.entries.push_back({"e" + std::to_string(i), s.structured_tfn()});
    const RankResult r = rank(d, o);
    ASSERT_EQ(r.ranking.size(), d.entries.size());
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
      for (std::size_t j = 0; j < d.entries.size(); ++j) {
        EXPECT_EQ(r.matrix[i][j], compare(o, d.entries[i].value, d.entries[j].value));
      }
    }
  }
  Dataset single;
  single.entries.push_back({"only", Tfn::scalar(1)});
  EXPECT_EQ(rank(single, OrderId::Kind::UpperSum).ranking, std::vector<std::string>{"only"});
}

TEST(Format, ExactWithMarkedApproximation) {
  EXPECT_EQ(format_number(3), "3");
  EXPECT_EQ(format_number(Q("1/3")), "1/3 (≈0.333333)");
  EXPECT_EQ(format_tfn(T("(-1,0,1)")), "(-1, 0, 1)");
}

TEST(JsonSchema, TfnRoundTrips) {
  SampleConfig cfg;
  Sampler s(cfg);
  for (int i = 0; i < 500; ++i) {
    const Tfn a = s.tfn();
    EXPECT_EQ(tfn_from_json(nlohmann::json::parse(to_json(a).dump())), a);
  }
}

TEST(JsonSchema, ReportFields) {
  const Mutant m = designated_mutant(Axiom::Wlt);
  SampleConfig cfg;
  cfg.count = 500;
  const nlohmann::json j = to_json(run_check(Axiom::Wlt, m.order, m.claimed, cfg));
  EXPECT_EQ(j.at("axiom"), "wlt");
  EXPECT_EQ(j.at("verdict"), "Fail");
  const auto& ce = j.at("counterexample");
  for (const auto& v : ce.at("values")) EXPECT_NO_THROW(tfn_from_json(v));
  EXPECT_TRUE(ce.at("minimized").contains("clause"));
}

TEST(JsonSchema, BallDescription) {
  const BallDescription b = closed_ball_description(OrderId::Kind::UpperSum, Tfn{}, T("(-1,0,1)"));
  const nlohmann::json j = to_json(b);
  EXPECT_EQ(j.at("case"), "SymmetricRadius");
  EXPECT_EQ(j.at("rendered"), render(b));
}
