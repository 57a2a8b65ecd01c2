#include <doctest.h>

#include "csg/bar.hpp"
#include "csg/braid.hpp"
#include "csg/symmetric.hpp"

using csg::BarTuple;
using csg::FiniteMonoid;
using csg::Perm;

namespace {

// Brute-force count of associative tables on {0..n-1} with two-sided unit 0.
std::size_t count_monoids(std::size_t n) {
  if (n == 1) return 1;
  const std::size_t k = n - 1;
  std::vector<std::size_t> free(k * k, 0);
  std::size_t count = 0;
  while (true) {
    auto mul = [&](std::size_t a, std::size_t b) {
      if (a == 0) return b;
      if (b == 0) return a;
      return free[(a - 1) * k + (b - 1)];
    };
    bool assoc = true;
    for (std::size_t a = 1; a < n && assoc; ++a) {
      for (std::size_t b = 1; b < n && assoc; ++b) {
        for (std::size_t c = 1; c < n && assoc; ++c) assoc = mul(mul(a, b), c) == mul(a, mul(b, c));
      }
    }
    if (assoc) ++count;
    std::size_t pos = 0;
    while (pos < free.size() && ++free[pos] == n) free[pos++] = 0;
    if (pos == free.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("monoid validation") {
  const auto band = FiniteMonoid::left_zero_band();
  CHECK(band.size() == 3);
  CHECK_FALSE(band.is_commutative());
  CHECK(FiniteMonoid::cyclic_group(4).is_commutative());
  CHECK_THROWS_AS(FiniteMonoid({"e", "a"}, 0, {{0, 1}, {0, 1}}), csg::Error);
  // Not associative: (aa)a = b but a(aa) = a.
  CHECK_THROWS_AS(FiniteMonoid({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 2, 1}}), csg::Error);
  CHECK_THROWS_AS(FiniteMonoid({"e", "a"}, 0, {{0, 1}, {1, 2}}), csg::Error);
}

TEST_CASE("monoid JSON round trip") {
  const auto band = FiniteMonoid::left_zero_band();
  const auto again = FiniteMonoid::from_json(band.to_json());
  CHECK(again.names() == band.names());
  CHECK(again.unit() == band.unit());
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(again.mul(a, b) == band.mul(a, b));
  }
  const auto z2 = FiniteMonoid::from_json(R"({"elements":["1","g"],"unit":"1","table":[["1","g"],["g","1"]]})");
  CHECK(z2.mul(1, 1) == 0);
  CHECK_THROWS_AS(FiniteMonoid::from_json(R"({"elements":["1"],"unit":"z","table":[["1"]]})"), csg::Error);
  CHECK_THROWS_AS(FiniteMonoid::from_json("not json"), csg::Error);
}

TEST_CASE("monoid enumeration matches a brute-force count") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(csg::all_monoids(n).size() == count_monoids(n));
  CHECK(csg::all_monoids(3).size() == 11);
}

TEST_CASE("cyclic bar operators") {
  const auto z = FiniteMonoid::cyclic_group(5);
  CHECK(csg::bar_face(z, 0, BarTuple{{0, 1}}) == BarTuple{{1}});
  CHECK(csg::bar_face(z, 1, BarTuple{{0, 1, 2}}) == BarTuple{{0, 3}});
  CHECK(csg::bar_face(z, 2, BarTuple{{1, 2, 3}}) == BarTuple{{4, 2}});
  CHECK(csg::bar_degeneracy(z, 0, BarTuple{{1}}) == BarTuple{{1, 0}});
  CHECK(csg::bar_degeneracy(z, 1, BarTuple{{1, 2}}) == BarTuple{{1, 2, 0}});
  CHECK(csg::bar_action(Perm{1, 0}, BarTuple{{1, 2}}) == BarTuple{{2, 1}});
  CHECK(csg::bar_action(Perm{1, 2, 0}, BarTuple{{1, 2, 3}}) == BarTuple{{3, 1, 2}});
  CHECK(csg::bar_action(Perm{1, 2, 0}, BarTuple{{1, 2, 3}}, true) == BarTuple{{2, 3, 1}});

  const auto band = FiniteMonoid::left_zero_band();
  // Wrap order matters in a non-commutative monoid: y x = y, x y = x.
  CHECK(csg::bar_face(band, 1, BarTuple{{1, 2}}) == BarTuple{{2}});
  CHECK(csg::bar_face(band, 1, BarTuple{{1, 2}}, true) == BarTuple{{1}});
  CHECK(csg::to_string(band, BarTuple{{0, 1, 2}}) == "(e,x,y)");
}

TEST_CASE("bar identities") {
  const auto band = FiniteMonoid::left_zero_band();
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& t : csg::all_tuples(band, n)) {
      CHECK(csg::check_bar_simplicial(band, t).ok());
      CHECK(csg::check_bar_cosimplicial(band, t).ok());
    }
  }
  bool reversed_breaks = false;
  for (const auto& t : csg::all_tuples(band, 2)) reversed_breaks |= !csg::check_bar_simplicial(band, t, true).ok();
  CHECK(reversed_breaks);
}

TEST_CASE("calibration keeps only the covariant reading") {
  const auto band = FiniteMonoid::left_zero_band();
  std::vector<Perm> elements;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& g : csg::all_perms(n)) elements.push_back(g);
  }
  const auto cal = csg::calibrate_bar<csg::Symmetric>(band, elements);
  REQUIRE(cal.candidates.size() == csg::kBarConventions.size());
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK_FALSE(cal.candidates[r].holds);
    CHECK_FALSE(cal.candidates[r].counterexample.empty());
  }
  REQUIRE(cal.surviving().has_value());
  CHECK(cal.surviving()->variance == csg::BarVariance::Covariant);
  CHECK_FALSE(cal.surviving()->inverse_action);
}
