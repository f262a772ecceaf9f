#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "krfusion/cli.hpp"

using namespace krfusion;
using namespace krfusion::cli;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "krfusion");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json without_elapsed(const std::string& text) {
  Json doc = Json::parse(text);
  doc.erase("elapsed_ms");
  return doc;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("krfusion_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(CliParse, WeightSpec) {
  EXPECT_EQ(parse_weight_spec("2*w1, w1,1*w3"), KRWeightSpec({{2, 1}, {1, 1}, {1, 3}}));
  EXPECT_EQ(parse_weight_spec(" w2 ", 3), KRWeightSpec({{1, 2}}));
  try {
    parse_weight_spec("w1,x3", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  try {
    parse_weight_spec("w1,2*w5", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  EXPECT_THROW(parse_weight_spec("0*w1"), ParseError);
  EXPECT_THROW(parse_weight_spec("-1*w1"), ParseError);
  EXPECT_THROW(parse_weight_spec("w1,"), ParseError);
  EXPECT_THROW(parse_weight_spec(""), ParseError);
  EXPECT_THROW(parse_weight_spec("2w1"), ParseError);
}

TEST(CliParse, LambdaAndAlgebra) {
  EXPECT_EQ(parse_lambda("0", 3), DominantWeight::zero(3));
  EXPECT_EQ(parse_lambda("2*w1 + w3", 3), DominantWeight({2, 0, 1}));
  EXPECT_EQ(parse_lambda("w1+w1", 2), DominantWeight({2, 0}));
  EXPECT_THROW(parse_lambda("w4", 3), ParseError);
  EXPECT_THROW(parse_lambda("w1,w2", 3), ParseError);
  EXPECT_EQ(parse_algebra("d4"), (AlgebraType{Family::D, 4}));
  EXPECT_EQ(parse_algebra("G2"), (AlgebraType{Family::G, 2}));
  EXPECT_THROW(parse_algebra("H3"), std::invalid_argument);
  EXPECT_THROW(parse_algebra("E5"), std::invalid_argument);
  EXPECT_THROW(parse_algebra("A"), std::invalid_argument);
}

TEST(Cli, GoldenOutputs) {
  const std::filesystem::path dir = KRFUSION_GOLDEN_DIR;
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    ++seen;
    const auto stem = entry.path().stem().string();
    SCOPED_TRACE(stem);
    std::vector<std::string> args;
    std::istringstream lines(slurp(entry.path()));
    for (std::string line; std::getline(lines, line);) args.push_back(line);
    const Result r = run_cli(args);
    const std::string expected = slurp(dir / (stem + ".out"));
    EXPECT_EQ(r.code, std::stoi(slurp(dir / (stem + ".exit"))));
    const bool json = std::find(args.begin(), args.end(), "json") != args.end();
    if (json)
      EXPECT_EQ(without_elapsed(r.out), Json::parse(expected));
    else
      EXPECT_EQ(r.out, expected);
  }
  EXPECT_GE(seen, 10);
}

TEST(Cli, ComputeText) {
  const Result r = run_cli({"compute", "--algebra", "A1", "--weights", "w1,w1", "--lambda", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "M(q) = q\n");
  const Result z = run_cli({"compute", "--algebra", "A1", "--weights", "w1,w1", "--lambda", "w1"});
  EXPECT_EQ(z.code, kExitOk);
  EXPECT_NE(z.out.find("zero-weight condition fails"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  const Result r = run_cli({"compute", "--algebra", "B2", "--weights", "w2,w1,w2", "--lambda", "w1", "--variant",
                            "both", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = parse_compute_json(r.out);
  EXPECT_EQ(doc.algebra, (AlgebraType{Family::B, 2}));
  EXPECT_EQ(doc.R, KRWeightSpec({{1, 1}, {1, 2}, {1, 2}}));
  EXPECT_EQ(doc.lambda, DominantWeight({1, 0}));
  EXPECT_EQ(doc.variant, Variant::both);
  const AlgebraData b2({Family::B, 2});
  ASSERT_TRUE(doc.polynomial.has_value());
  EXPECT_EQ(*doc.polynomial, fermionic_polynomial(b2, doc.R, doc.lambda));
  EXPECT_EQ(doc.q1_value, eval_at_one(*doc.polynomial));
  ASSERT_TRUE(doc.kr2_value.has_value());
  EXPECT_EQ(*doc.kr2_value, doc.q1_value);
  // Keys appear in a fixed order.
  const auto ordered = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"algebra", "R", "lambda", "variant", "strict_vacancy", "polynomial",
                                            "q1_value", "kr2_value", "reason", "elapsed_ms"}));
}

TEST(Cli, DeterministicAcrossThreadsAndOrder) {
  const auto a = run_cli({"table", "--algebra", "A3", "--weights", "w1,2*w2,w3,w2", "--format", "json"});
  const auto b = run_cli({"table", "--algebra", "A3", "--weights", "w2, w3, 2*w2, w1", "--format", "json",
                          "--threads", "4"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(without_elapsed(a.out), without_elapsed(b.out));
}

TEST(Cli, CacheHitIsIdentical) {
  const auto dir = scratch_dir("cache");
  const std::vector<std::string> args = {"table",       "--algebra", "C3", "--weights", "w1,w2,w1",
                                         "--cache-dir", dir.string(), "--format", "json"};
  const auto first = run_cli(args);
  ASSERT_EQ(first.code, kExitOk);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  const auto second = run_cli(args);
  EXPECT_EQ(without_elapsed(first.out), without_elapsed(second.out));
  // A different request does not reuse the entry.
  auto other = args;
  other[4] = "w1,w2";
  EXPECT_NE(without_elapsed(run_cli(other).out), without_elapsed(first.out));
  std::filesystem::remove_all(dir);
}

TEST(Cli, CacheKeyDistinguishesRequests) {
  Request a;
  a.algebra = {Family::A, 2};
  a.R = KRWeightSpec({{1, 1}, {1, 2}});
  a.command = Command::table;
  Request b = a;
  b.strict_vacancy = true;
  Request c = a;
  c.variant = Variant::both;
  EXPECT_NE(canonical_key(a), canonical_key(b));
  EXPECT_NE(canonical_key(a), canonical_key(c));
  EXPECT_NE(cache_file_name(a), cache_file_name(c));
  EXPECT_EQ(cache_file_name(a).size(), 21u);  // 16 hex digits + ".json"
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"verify", "--algebra", "A1", "--weights", "w1,w1,w1,w1"}).code, kExitOk);
  EXPECT_EQ(run_cli({"compute", "--algebra", "A1", "--weights", "w1,w1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"table", "--algebra", "A1", "--weights", "w1", "--lambda", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dims", "--algebra", "A1", "--weights", "w1", "--format", "csv"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"compute", "--algebra", "Q7", "--weights", "w1", "--lambda", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"compute", "--algebra", "A2", "--weights", "w3", "--lambda", "0"}).code, kExitUsage);
  const auto err = run_cli({"compute", "--algebra", "A2", "--weights", "w1,,w2", "--lambda", "0", "--format", "json"});
  EXPECT_EQ(err.code, kExitUsage);
  EXPECT_EQ(Json::parse(err.out)["error"]["kind"], "usage");
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, StrictVacancyAgreesOnSmallCases) {
  const std::vector<std::string> base = {"table", "--algebra", "B3", "--weights", "w1,w3,w2", "--format", "json"};
  auto strict = base;
  strict.push_back("--strict-vacancy");
  auto a = without_elapsed(run_cli(base).out);
  auto b = without_elapsed(run_cli(strict).out);
  EXPECT_EQ(a["rows"], b["rows"]);
  EXPECT_EQ(b["strict_vacancy"], true);
}

TEST(Cli, Selfcheck) {
  const auto r = run_cli({"selfcheck", "--seed", "7", "--cases", "5", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["total_cases"], 40);
  EXPECT_TRUE(doc["passed"].get<bool>());
}
