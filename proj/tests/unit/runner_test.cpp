#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "koszul/curves/dualizing.hpp"
#include "koszul/curves/sections.hpp"
#include "koszul/curves/serialization.hpp"
#include "koszul/error.hpp"
#include "koszul/runner/cache.hpp"
#include "koszul/runner/models.hpp"
#include "koszul/runner/run.hpp"

using namespace koszul;
using namespace koszul::runner;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class RunnerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("koszul_runner_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST(Config, ParsesAndValidates) {
  const auto c = parse_config(json::parse(R"j({"command": "gv", "cell": [0, 4, 4, 2], "seed": 5})j"));
  EXPECT_EQ(c.command, Command::Gv);
  ASSERT_TRUE(c.cell);
  EXPECT_EQ(c.cell->h1(), 0);
  EXPECT_EQ(c.cell->rho(), 0);
  EXPECT_EQ(c.p, 2);
  EXPECT_EQ(c.seed, 5u);

  EXPECT_THROW(parse_config(json::parse(R"j({"command": "nope", "cell": [0,1,1]})j")), UsageError);
  EXPECT_THROW(parse_config(json::parse(R"j({"command": "betti"})j")), UsageError);
  EXPECT_THROW(parse_config(json::parse(R"j({"command": "betti", "cell": [0,1,1], "steps": -1})j")), UsageError);
  EXPECT_THROW(parse_config(json::parse(R"j({"command": "betti", "cell": [0,1,1], "colour": 1})j")), UsageError);
  EXPECT_THROW(parse_config(json::parse(R"j({"command": "betti", "model": 3})j")), UsageError);
  EXPECT_THROW(parse_config(json::parse(R"j([1, 2])j")), UsageError);
}

TEST(Config, EchoLeavesOutExecutionDetails) {
  auto c = parse_config(json::parse(R"j({"command": "mrc", "model": "conic", "output": "a.json", "jobs": 3})j"));
  const auto echo = config_echo(c);
  EXPECT_FALSE(echo.contains("output"));
  EXPECT_FALSE(echo.contains("jobs"));
  EXPECT_EQ(echo["model"], "conic");
}

TEST(Models, BuiltinExamples) {
  const auto rn4 = builtin_model("rational-normal(4)", 1);
  EXPECT_EQ(rn4.curve().component_count(), 1u);
  EXPECT_EQ(rn4.total_degree(), 4);

  const auto e3 = builtin_model("cycle-genus-1(3)", 1);
  EXPECT_EQ(e3.curve().component_count(), 2u);
  EXPECT_EQ(e3.curve().nodes().size(), 2u);
  EXPECT_EQ(e3.total_degree(), 3);

  const auto k3 = builtin_model("canonical-graph(3)", 1);
  EXPECT_EQ(k3.curve().arithmetic_genus(), 3);
  EXPECT_EQ(curves::h0_basis(k3).dimension(), 3u);
  EXPECT_EQ(curves::h0_residue_oracle(curves::LineBundle::trivial(k3.curve_ptr())), 3u);

  EXPECT_EQ(builtin_model("conic", 1).total_degree(), 2);
  EXPECT_EQ(builtin_model("twisted-cubic", 1).total_degree(), 3);
  EXPECT_THROW(builtin_model("elliptic(3)", 1), ModelError);
  EXPECT_THROW(builtin_model("rational-normal(40)", 1), ModelError);
  EXPECT_THROW(builtin_model("rational-normal", 1), ModelError);
}

TEST(Models, CanonicalGraphsCarryTheirDualizingSheaf) {
  for (long g = 3; g <= 6; ++g) {
    const auto k = builtin_model("canonical-graph(" + std::to_string(g) + ")", 0);
    EXPECT_EQ(k.curve().arithmetic_genus(), g);
    EXPECT_EQ(k.total_degree(), 2 * g - 2);
    EXPECT_EQ(static_cast<long>(curves::h0_basis(k).dimension()), g);
  }
}

TEST(Models, CellModelsHaveTheRequestedInvariants) {
  struct C { long g, r, d; };
  for (const C c : {C{0, 3, 3}, C{2, 3, 5}, C{3, 2, 4}, C{4, 3, 6}, C{5, 3, 7}, C{4, 2, 5}}) {
    const auto l = model_for_cell(c.g, c.r, c.d, 13);
    EXPECT_EQ(l.curve().arithmetic_genus(), c.g);
    EXPECT_EQ(l.total_degree(), c.d);
    EXPECT_EQ(static_cast<long>(curves::h0_basis(l).dimension()), c.r + 1);
    EXPECT_TRUE(curves::is_globally_generated(curves::h0_basis(l)));
  }
  EXPECT_THROW(model_for_cell(5, 3, 6, 1), ModelError);  // rho < 0
  EXPECT_THROW(model_for_cell(8, 3, 7, 1), ModelError);  // h^1 = 2
}

TEST_F(RunnerTest, BettiRun) {
  RunConfig c;
  c.command = Command::Betti;
  c.cell = Cell{0, 4, 4, 1};
  c.output = (dir_ / "betti.json").string();
  const auto out = run(c);
  ASSERT_EQ(out.exit_code, kSuccess) << out.message;
  const auto doc = json::parse(slurp(c.output));
  EXPECT_EQ(doc["engine_version"], out.envelope["engine_version"]);
  EXPECT_TRUE(doc.contains("config_echo"));
  for (const auto& cell : doc["results"]["betti"]["cells"]) {
    if (cell["p"] == 1 && cell["q"] == 1) EXPECT_EQ(cell["k"], 6);
  }
  const auto& b = doc["results"]["bookkeeping"];
  EXPECT_EQ(b["rho"], 0);
  EXPECT_EQ(b["h1"], 0);
  EXPECT_EQ(b["h0"], 5);
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_NE(e.path().extension(), ".tmp");
}

TEST_F(RunnerTest, InductWritesCertificateLines) {
  RunConfig c;
  c.command = Command::Induct;
  c.cell = Cell{0, 4, 4, 1};
  c.steps = 5;
  c.seed = 11;
  c.output = (dir_ / "induct.json").string();
  const auto out = run(c);
  ASSERT_EQ(out.exit_code, kSuccess) << out.message;
  std::ifstream lines(dir_ / "induct.jsonl");
  std::string line;
  long g = 1;
  while (std::getline(lines, line)) {
    const auto cert = json::parse(line);
    EXPECT_EQ(cert["g"], g);
    EXPECT_EQ(cert["d"], g + 4);
    EXPECT_EQ(cert["holds"], true);
    EXPECT_EQ(cert["caveat"], "subject to smoothing hypothesis");
    ++g;
  }
  EXPECT_EQ(g, 6);
}

TEST_F(RunnerTest, DeterministicOutputs) {
  for (const char* text : {R"j({"command": "verify-lemma21", "model": "cycle-genus-1(5)", "samples": 6, "seed": 3})j",
                           R"j({"command": "verify-prop14", "cell": [2, 3, 5, 1], "samples": 4, "seed": 8})j",
                           R"j({"command": "induct", "model": "conic", "steps": 2, "seed": 4})j"}) {
    auto c = parse_config(json::parse(text));
    c.output = (dir_ / "a.json").string();
    run(c);
    c.jobs = 3;
    c.output = (dir_ / "b.json").string();
    run(c);
    EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json")) << text;
  }
}

TEST_F(RunnerTest, CacheHitsReproduceResults) {
  auto c = parse_config(json::parse(R"j({"command": "mrc", "model": "rational-normal(5)", "seed": 2})j"));
  c.cache_dir = (dir_ / "cache").string();
  const auto first = run(c);
  EXPECT_FALSE(first.cache_hit);
  const auto second = run(c);
  EXPECT_TRUE(second.cache_hit);
  EXPECT_EQ(first.envelope.dump(), second.envelope.dump());
  c.seed = 3;  // different key
  EXPECT_FALSE(run(c).cache_hit);
}

TEST_F(RunnerTest, TamperedCacheEntryIsDetectedWhenAudited) {
  // Find a config whose key is audited, then corrupt its entry.
  auto c = parse_config(json::parse(R"j({"command": "mrc", "model": "conic"})j"));
  c.cache_dir = (dir_ / "cache").string();
  std::uint64_t key = 0;
  for (c.seed = 0;; ++c.seed) {
    key = ResultCache::make_key(c.model->dump(), "mrc", config_echo(c));
    if (ResultCache::audited(key)) break;
  }
  ASSERT_EQ(run(c).exit_code, kSuccess);
  const ResultCache cache(*c.cache_dir);
  auto entry = cache.lookup(key);
  ASSERT_TRUE(entry);
  auto value = json::parse(entry->value);
  value["mrc"]["k11"] = 99;
  entry->value = value.dump();
  cache.store(*entry);
  const auto out = run(c);
  EXPECT_EQ(out.exit_code, kFatal);
  EXPECT_NE(out.message.find("differs from recomputation"), std::string::npos);
}

TEST_F(RunnerTest, MismatchAndErrorsMapToExitCodes) {
  auto c = parse_config(json::parse(R"j({"command": "betti", "model": "conic", "cell": [0, 3, 3]})j"));
  auto out = run(c);
  EXPECT_EQ(out.exit_code, kUsage);
  EXPECT_NE(out.message.find("(0, 2, 2)"), std::string::npos);
  EXPECT_NE(out.message.find("(0, 3, 3)"), std::string::npos);

  c = parse_config(json::parse(R"j({"command": "gv", "model": "conic", "p": 1})j"));
  EXPECT_EQ(run(c).exit_code, kSuccess);
  c.p = 2;
  EXPECT_EQ(run(c).exit_code, kUsage);

  c = parse_config(json::parse(R"j({"command": "induct", "model": "double-cover(3,3)", "steps": 1})j"));
  out = run(c);
  EXPECT_EQ(out.exit_code, kInconclusive);
  EXPECT_TRUE(out.envelope["results"]["induction"].contains("diagnostic"));
}

TEST_F(RunnerTest, ExplicitModelDocument) {
  const auto l = builtin_model("cycle-genus-1(4)", 5);
  RunConfig c;
  c.command = Command::Mrc;
  c.model = curves::model_to_json(l);
  const auto out = run(c);
  ASSERT_EQ(out.exit_code, kSuccess) << out.message;
  EXPECT_EQ(out.envelope["results"]["bookkeeping"]["g"], 1);
  EXPECT_EQ(out.envelope["results"]["mrc"]["k11"], 2);
}
