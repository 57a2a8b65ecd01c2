#include <doctest.h>

#include <json.hpp>

#include "csg/suites.hpp"

TEST_CASE("every listed suite runs and passes at a small size") {
  for (auto name : csg::suite_names()) {
    for (const char* instance : {"symm", "braid"}) {
      csg::SuiteOptions opt;
      opt.suite = std::string(name);
      opt.instance = instance;
      opt.max_level = 2;
      opt.trials = 20;
      const auto report = csg::run_suite(opt);
      INFO(name, " ", instance);
      CHECK(report.pass());
      CHECK(report.checks > 0);
    }
  }
}

TEST_CASE("reports are deterministic for a seed") {
  csg::SuiteOptions opt;
  opt.suite = "crossed";
  opt.instance = "braid";
  opt.max_level = 4;
  opt.trials = 50;
  opt.seed = 123;
  CHECK(csg::run_suite(opt).to_json() == csg::run_suite(opt).to_json());
  const auto j = nlohmann::json::parse(csg::run_suite(opt).to_json());
  CHECK(j["suite"] == "crossed");
  CHECK(j["parameters"]["seed"] == 123);
}

TEST_CASE("unknown names are rejected") {
  csg::SuiteOptions opt;
  opt.suite = "nope";
  CHECK_THROWS_AS(csg::run_suite(opt), csg::Error);
  opt.suite = "crossed";
  opt.instance = "cyclic";
  CHECK_THROWS_AS(csg::run_suite(opt), csg::Error);
  CHECK(csg::parse_right_action("right").has_value());
  CHECK_FALSE(csg::parse_right_action("left").has_value());
  CHECK(csg::parse_index_reading("sigma-inv") == csg::IndexReading::SigmaInverse);
}

TEST_CASE("a wrong reading produces counterexamples") {
  csg::SuiteOptions opt;
  opt.suite = "g-like";
  opt.max_level = 2;
  opt.g_like_action = csg::RightAction::RightMultiplication;
  const auto report = csg::run_suite(opt);
  CHECK_FALSE(report.pass());
  CHECK_FALSE(report.counterexamples.empty());
  CHECK(report.counterexamples.size() <= csg::SuiteReport::kMaxListed);
}
