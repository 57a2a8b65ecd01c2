#include <doctest.h>

#include <string>

#include "csg/error.hpp"
#include "csg/expr.hpp"

namespace {

std::string run(const char* text) { return csg::describe(csg::evaluate(text)); }

std::string error_of(const char* text) {
  try {
    (void)csg::evaluate(text);
  } catch (const csg::Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("permutation expressions") {
  CHECK(run("[1,0]") == "[1,0]\n");
  CHECK(run("mul([1,0,2],[2,0,1])") == "[2,1,0]\n");
  CHECK(run("inv([1,2,0])") == "[2,0,1]\n");
  CHECK(run("circ_0([1,0],[1,0])") == "[2,1,0]\n");
  CHECK(run("boxplus([1,0],[0])") == "[1,0,2]\n");
  CHECK(run("d_0([1,2,0])") == "[0,1]\n");
  CHECK(run("s_1([1,0])") == "[1,2,0]\n");
  CHECK(run("sL([1,0])") == "[0,2,1]\n");
  CHECK(run("sR([1,0])") == "[1,0,2]\n");
  CHECK(run("pad([1,0], 1, 1)") == "[0,2,1,3]\n");
}

TEST_CASE("braid expressions") {
  const auto out = run("d_2(s1 s2@2)");
  CHECK(out.rfind("s1 @1\n", 0) == 0);
  CHECK(out.find("perm: [1,0]") != std::string::npos);
  CHECK(out.find("identity: no") != std::string::npos);
  CHECK(run("mul(inv(s1@1), s1@1)").find("identity: yes") != std::string::npos);
  CHECK(run("sL(s1@1)").rfind("s2 @2", 0) == 0);
  // Equal braids print the same digest.
  const auto a = run("mul(s1 s2 s1@2, e@2)");
  const auto b = run("s2 s1 s2@2");
  CHECK(a.substr(a.find("artin:")) == b.substr(b.find("artin:")));
}

TEST_CASE("errors carry an offset") {
  CHECK(error_of("mul([1,0],[0,1,2])").find("level mismatch") != std::string::npos);
  CHECK(error_of("d_5([1,0])").find("at offset 0") != std::string::npos);
  CHECK(error_of("[1,0").find("at offset") != std::string::npos);
  CHECK(error_of("frob([1,0])").find("at offset 0") != std::string::npos);
  CHECK(error_of("mul([1,0], s1@1)").find("at offset") != std::string::npos);
  CHECK(error_of("[1,0] trailing").find("at offset 6") != std::string::npos);
  CHECK(error_of("mul([1,0],[0,1])x") != "");
}

TEST_CASE("json form") {
  const auto j = csg::describe_json(csg::evaluate("s1@1"));
  CHECK(j.find("\"perm\"") != std::string::npos);
  CHECK(csg::describe_json(csg::evaluate("[0]")).find("[0]") != std::string::npos);
}
