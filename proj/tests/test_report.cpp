#include "bidisk/report.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

using namespace bidisk;

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("3"), (IntRange{3, 3}));
  EXPECT_EQ(parse_range("1..4"), (IntRange{1, 4}));
  EXPECT_THROW(parse_range(""), std::invalid_argument);
  EXPECT_THROW(parse_range("a"), std::invalid_argument);
  EXPECT_THROW(parse_range("1..x"), std::invalid_argument);
  EXPECT_THROW(parse_range("1-3"), std::invalid_argument);
  EXPECT_EQ(to_string(IntRange{2, 5}), "2..5");
  EXPECT_EQ(to_string(IntRange{2, 2}), "2");
}

TEST(Validate, Rules) {
  RunConfig ok;
  EXPECT_NO_THROW(validate(ok));
  auto bad = [&](auto mutate) {
    RunConfig c;
    mutate(c);
    EXPECT_THROW(validate(c), std::invalid_argument);
  };
  bad([](RunConfig& c) { c.k = {0, 0}; });
  bad([](RunConfig& c) { c.l = {3, 1}; });
  bad([](RunConfig& c) { c.safe_grade = 1; c.max_grade = 5; });
  bad([](RunConfig& c) { c.max_grade = 5; c.safe_grade = 4; });
  bad([](RunConfig& c) { c.trials = 0; });
  bad([](RunConfig& c) { c.tol = 0; });
  bad([](RunConfig& c) { c.fault = "nonsense"; });
}

TEST(RunAnalyze, OneByOne) {
  RunConfig cfg;
  const RunResult r = run_analyze(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.document["schema"], 1);
  const Json& s = r.document["results"][0]["structure"];
  EXPECT_EQ(s["minimal_count"], 2);
  EXPECT_EQ(s["dim_predicted"], 2);
  EXPECT_EQ(s["abelian"], true);
  EXPECT_TRUE(s["dim_measured"].is_null());
  const Json& inventory = r.document["results"][0]["minimal_subspaces"];
  ASSERT_EQ(inventory.size(), 2U);
  EXPECT_EQ(inventory[0]["wandering"][0], Json({{"0,0", "1/1"}}));
  EXPECT_EQ(inventory[1]["wandering"][0], Json({{"1,0", "1/1"}, {"0,1", "-1/1"}}));
}

TEST(RunAnalyze, MeasuredCommutant) {
  RunConfig cfg;
  cfg.k = {2, 2};
  cfg.l = {2, 2};
  cfg.commutant = true;
  const RunResult r = run_analyze(cfg);
  const Json& s = r.document["results"][0]["structure"];
  EXPECT_EQ(s["dim_predicted"], 8);
  EXPECT_EQ(s["dim_measured"], 8);
}

TEST(RunVerify, PassesAndIsDeterministic) {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.k = {2, 2};
  cfg.l = {2, 2};
  cfg.trials = 5;
  cfg.seed = 7;
  const RunResult a = run(cfg);
  const RunResult b = run(cfg);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(render(a.document, Format::Json), render(b.document, Format::Json));
  for (const Json& check : a.document["results"][0]["checks"]) {
    EXPECT_TRUE(check["passed"].get<bool>()) << check["name"];
  }
}

TEST(RunVerify, CorruptedAdjointFailsByName) {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.k = {1, 1};
  cfg.l = {2, 2};
  cfg.trials = 2;
  cfg.fault = "adjoint";
  const RunResult r = run(cfg);
  EXPECT_EQ(r.exit_code, 1);
  std::vector<std::string> failed;
  for (const Json& check : r.document["results"][0]["checks"]) {
    if (!check["passed"].get<bool>()) failed.push_back(check["name"]);
  }
  EXPECT_EQ(failed, std::vector<std::string>{"adjoint_identity"});
  for (const Json& check : r.document["results"][0]["checks"]) {
    if (check["name"] == "adjoint_identity") EXPECT_FALSE(check["failures"].empty());
  }
}

TEST(RunClasses, SizesCoverTheWindow) {
  RunConfig cfg;
  cfg.command = Command::Classes;
  cfg.k = {2, 2};
  cfg.l = {3, 3};
  cfg.max_grade = 6;
  cfg.safe_grade = 2;
  const RunResult r = run(cfg);
  std::size_t total = 0;
  for (const Json& c : r.document["results"][0]["classes"]) total += c["size"].get<std::size_t>();
  EXPECT_EQ(total, 6U * 28U);
}

TEST(RunCommutant, ReportsMatch) {
  RunConfig cfg;
  cfg.command = Command::Commutant;
  cfg.k = {1, 2};
  cfg.l = {1, 1};
  cfg.max_grade = 6;
  cfg.safe_grade = 2;
  const RunResult r = run(cfg);
  ASSERT_EQ(r.document["results"].size(), 2U);
  for (const Json& e : r.document["results"]) EXPECT_TRUE(e["matches"].get<bool>());
}

TEST(Render, TextShowsKeysAndValues) {
  Json doc = {{"schema", 1}, {"results", {{{"k", 1}, {"tags", {1, 2}}}}}};
  const std::string text = render(doc, Format::Text);
  EXPECT_NE(text.find("schema: 1"), std::string::npos);
  EXPECT_NE(text.find("k: 1"), std::string::npos);
  EXPECT_NE(text.find("tags: [1,2]"), std::string::npos);
}

TEST(Serialize, RationalsAreStrings) {
  const Context ctx = build_context(1, 1);
  SparseVector f(make_window(2));
  f.add(ctx.locate(1, 1), Rational(-3, 4));
  EXPECT_EQ(to_json(f), Json({{"1,1", "-3/4"}}));
  NullityResult n;
  n.gap_ratio = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(to_json(n)["gap_ratio"].is_null());
}
