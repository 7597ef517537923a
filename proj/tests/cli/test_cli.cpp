#include <gtest/gtest.h>

#include <json.hpp>

#include "mdepth/cli/app.hpp"

using mdepth::cli::Format;
using mdepth::cli::Request;
using mdepth::cli::run;
using Json = nlohmann::json;

namespace {

const char* const kC8 = "1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-1";

Request request(const std::string& command) {
  Request r;
  r.command = command;
  r.format = Format::Json;
  return r;
}

Json json_of(const Request& r) {
  const auto outcome = run(r);
  EXPECT_EQ(outcome.exit_code, 0) << outcome.err;
  return Json::parse(outcome.out);
}

}  // namespace

TEST(Cli, AnalyzeEightCycle) {
  auto r = request("analyze");
  r.edges = {kC8};
  const Json j = json_of(r);
  EXPECT_EQ(j["depth"], 3);
  EXPECT_EQ(j["mdepth"], 3);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["maximal_depth"], true);
  EXPECT_EQ(j["field"], "QQ");
  EXPECT_EQ(j["ass"].size(), 10u);
  EXPECT_EQ(j["h_table"].size(), 5u);
}

TEST(Cli, AnalyzeSkewLines) {
  auto r = request("analyze");
  r.gens = {"x1*x3,x1*x4,x2*x3,x2*x4"};
  const Json j = json_of(r);
  EXPECT_EQ(j["depth"], 1);
  EXPECT_EQ(j["mdepth"], 2);
  EXPECT_EQ(j["generalized_cm"], true);
  EXPECT_EQ(j["maximal_depth"], false);
  EXPECT_EQ(j["h_table"][1]["k_dim"], 1);
  EXPECT_EQ(j["h_table"][1]["finite_length"], true);
}

TEST(Cli, SeqCmCycles) {
  for (const auto& [edges, verdict] : {std::pair{"1-2,2-3,3-4,4-5,5-1", "true"}, std::pair{kC8, "false"}}) {
    auto r = request("seqcm");
    r.edges = {edges};
    const Json j = json_of(r);
    EXPECT_EQ(j["sequentially_cm"], verdict) << edges;
    EXPECT_EQ(j["filtration_verdict"], verdict) << edges;
  }
}

TEST(Cli, FiltrationSchema) {
  auto r = request("filtration");
  r.edges = {kC8};
  const Json j = json_of(r);
  EXPECT_EQ(j["t"], 3);
  ASSERT_EQ(j["levels"].size(), 5u);
  const Json& level3 = j["levels"][3];
  EXPECT_EQ(level3["i"], 3);
  EXPECT_EQ(level3["nonzero"], true);
  EXPECT_EQ(level3["depth_interval"], Json::array({2, 2}));
  EXPECT_EQ(level3["ass_i"].size(), 8u);
  EXPECT_TRUE(j["levels"][1]["depth_interval"].is_null());
}

TEST(Cli, AttHeaderNamesBothReadings) {
  auto r = request("att");
  r.edges = {"1-2,2-3,3-4,4-5,5-1"};
  const Json j = json_of(r);
  EXPECT_TRUE(j.contains("hypothesis_reading"));
  EXPECT_TRUE(j.contains("hypothesis_alternative"));
  for (const auto& row : j["degrees"]) EXPECT_TRUE(row.contains("justification"));
}

TEST(Cli, FieldFlagChangesVerdict) {
  auto r = request("analyze");
  r.gens = {"x1*x2*x4,x1*x2*x5,x1*x3*x5,x1*x3*x6,x1*x4*x6,x2*x3*x4,x2*x3*x6,x2*x5*x6,x3*x4*x5,x4*x5*x6"};
  EXPECT_EQ(json_of(r)["cohen_macaulay"], true);
  r.field = "f2";
  const Json j = json_of(r);
  EXPECT_EQ(j["cohen_macaulay"], false);
  EXPECT_EQ(j["field"], "GF(2)");
}

TEST(Cli, PolarizeKeepsDepth) {
  auto r = request("polarize");
  r.gens = {"x1^2,x1*x2"};
  const Json j = json_of(r);
  EXPECT_EQ(j["depth"], 0);
  EXPECT_EQ(j["added_vars"], 1);
}

TEST(Cli, TensorAndDirectSum) {
  auto t = request("tensor");
  t.edges = {"1-2,2-3,3-4,4-1", "1-2,2-3,3-1"};
  const Json tj = json_of(t);
  EXPECT_EQ(tj["depth_additive"], true);
  EXPECT_EQ(tj["maximal_depth_iff_both"], true);

  auto d = request("directsum");
  d.gens = {"x1,x2,x3", "x1*x2"};
  d.vars = 4;
  const Json dj = json_of(d);
  EXPECT_EQ(dj["maximal_depth"], true);
  EXPECT_EQ(dj["summand_rule"], true);
}

TEST(Cli, LocalizeAndPsupp) {
  auto l = request("localize");
  l.edges = {"1-2,2-3,3-4,4-5,5-1"};
  l.face = "1";
  const Json lj = json_of(l);
  EXPECT_EQ(lj["face_size"], 1);
  EXPECT_EQ(lj["localization"]["depth"], 1);

  auto p = request("psupp");
  p.edges = {kC8};
  p.degree = 3;
  EXPECT_EQ(json_of(p)["faces"][0], "{}");
}

TEST(Cli, ExitCodes) {
  auto malformed = request("analyze");
  malformed.gens = {"x1*y2"};
  EXPECT_EQ(run(malformed).exit_code, mdepth::cli::kExitMalformed);

  auto two_inputs = request("analyze");
  two_inputs.gens = {"x1", "x2"};
  EXPECT_EQ(run(two_inputs).exit_code, mdepth::cli::kExitMalformed);

  auto capped = request("analyze");
  capped.edges = {kC8};
  capped.max_vertices = 4;
  EXPECT_EQ(run(capped).exit_code, mdepth::cli::kExitCapExceeded);

  auto zerodivisor = request("analyze");
  zerodivisor.edges = {"1-2,2-3,3-4,4-1"};
  zerodivisor.quotient_var = 1;
  const auto outcome = run(zerodivisor);
  EXPECT_EQ(outcome.exit_code, mdepth::cli::kExitPrecondition);
  EXPECT_EQ(outcome.err.rfind("error: regularity-violation: ", 0), 0u);
  EXPECT_EQ(std::count(outcome.err.begin(), outcome.err.end(), '\n'), 1);
}

TEST(Cli, ByteIdenticalReruns) {
  for (const auto* command : {"analyze", "filtration", "att", "probe"}) {
    for (auto format : {Format::Json, Format::Table}) {
      auto r = request(command);
      r.format = format;
      r.samples = 40;
      r.seed = 7;
      if (std::string(command) != "probe") r.edges = {kC8};
      const auto first = run(r);
      const auto second = run(r);
      EXPECT_EQ(first.exit_code, 0) << first.err;
      EXPECT_EQ(first.out, second.out) << command;
    }
  }
}

TEST(Cli, RegressPasses) {
  const auto outcome = run(request("regress"));
  EXPECT_EQ(outcome.exit_code, 0) << outcome.out;
  const Json j = Json::parse(outcome.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GE(j["passed"].get<int>(), 60);
}
