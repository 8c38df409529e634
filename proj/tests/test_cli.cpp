#include <doctest.h>

#include "dioph/cli/commands.hpp"
#include "dioph/cli/config.hpp"
#include "dioph/error.hpp"

using namespace dioph;
using dioph::cli::ExperimentConfig;

namespace {

ExperimentConfig make(std::string cmd, std::map<std::string, std::string> params) {
  ExperimentConfig c;
  c.command = std::move(cmd);
  c.params = std::move(params);
  return c;
}

Json result(const ExperimentConfig& c) { return Json::parse(cli::run(c))["result"]; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config round trip") {
    ExperimentConfig c = make("minima", {{"n", "1"}, {"xi", "0"}, {"X", "1,1"}});
    c.seed = 18446744073709551615ULL;
    c.format = "tsv";
    CHECK(ExperimentConfig::from_json(c.to_json()) == c);
    CHECK_THROWS_AS(ExperimentConfig::from_json(Json::parse("{\"command\": 3}")), Error);
    CHECK_THROWS_AS(c.get("missing"), Error);
  }

  TEST_CASE("command list") {
    const auto& names = cli::command_names();
    CHECK(names.size() == 9);
    CHECK_THROWS_AS(cli::run(make("nonsense", {})), Error);
  }

  TEST_CASE("heights command") {
    CHECK(result(make("heights", {{"vector", "4,6"}}))["value"] == "3/1");
    CHECK_THROWS_AS(cli::run(make("heights", {})), Error);
    CHECK_THROWS_AS(cli::run(make("heights", {{"vector", "1"}, {"poly", "1"}})), Error);
  }

  TEST_CASE("minima command") {
    Json r = result(make("minima", {{"n", "1"}, {"xi", "0"}, {"X", "1,1"}}));
    CHECK(r["lambdas"] == Json::array({"1/1", "1/1"}));
  }

  TEST_CASE("module generation command") {
    Json r = result(make("module-gen-check", {{"kmax", "2"}, {"lmax", "2"}}));
    CHECK(r.dump().find("false") == std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    ExperimentConfig c = make("duality", {{"n", "2"}, {"xi", "1/3"}, {"X", "1/4,1,3"}});
    CHECK(cli::run(c) == cli::run(c));
    c.format = "tsv";
    CHECK(cli::run(c).find('\t') != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(cli::exit_code_for(Error(ErrorCode::HardAssertion, "x")) == 2);
    CHECK(cli::exit_code_for(Error(ErrorCode::CounterexampleFound, "x")) == 2);
    CHECK(cli::exit_code_for(Error(ErrorCode::InvalidArgument, "x")) == 1);
  }
}
