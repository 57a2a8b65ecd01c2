#include <doctest.h>

#include "csg/error.hpp"
#include "csg/perm.hpp"
#include "oracles.hpp"

using csg::Perm;

TEST_CASE("products compose right to left") {
  CHECK(Perm{1, 0} * Perm{1, 0} == Perm::identity(1));
  CHECK(Perm{1, 0, 2} * Perm{2, 0, 1} == Perm{2, 1, 0});
  for (const auto& g : csg::all_perms(3)) {
    CHECK(g * Perm::identity(3) == g);
    for (const auto& h : csg::all_perms(3)) {
      CHECK(oracle::table(g * h) == oracle::compose(oracle::table(g), oracle::table(h)));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(Perm{1, 2, 0}.inverse() == Perm{2, 0, 1});
  CHECK(Perm::identity(3).inverse() == Perm::identity(3));
  for (const auto& g : csg::all_perms(3)) CHECK((g.inverse() * g).is_identity());
}

TEST_CASE("enumeration covers every permutation once, in order") {
  std::size_t fact = 1;
  for (std::size_t n = 0; n <= 4; ++n) {
    fact *= n + 1;
    const auto all = csg::all_perms(n);
    CHECK(all.size() == fact);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("inversions") {
  CHECK(Perm::identity(4).inversions() == 0);
  CHECK(Perm{3, 2, 1, 0}.inversions() == 6);
  CHECK(Perm{1, 2, 0}.inversions() == 2);
}

TEST_CASE("text round trip and rejection of non-bijections") {
  CHECK(Perm::parse("[2, 0,1]") == Perm{2, 0, 1});
  CHECK(Perm{2, 0, 1}.to_string() == "[2,0,1]");
  CHECK_THROWS_AS(Perm::parse("[0,0]"), csg::Error);
  CHECK_THROWS_AS(Perm::parse("[0,2"), csg::Error);
  CHECK_THROWS_AS(Perm::parse("[]"), csg::Error);
  CHECK_THROWS_AS(Perm({1, 2}), csg::Error);
  try {
    Perm::parse("[0,0]");
  } catch (const csg::Error& e) {
    CHECK((e.kind() == csg::ErrorKind::Parse || e.kind() == csg::ErrorKind::InvalidElement));
  }
}

TEST_CASE("level mismatch is reported") {
  try {
    (void)(Perm{1, 0} * Perm{0, 1, 2});
    FAIL("expected an error");
  } catch (const csg::Error& e) {
    CHECK(e.kind() == csg::ErrorKind::LevelMismatch);
  }
}
