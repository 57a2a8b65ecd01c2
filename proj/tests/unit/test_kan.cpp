#include <doctest.h>

#include "csg/braid.hpp"
#include "csg/kan.hpp"
#include "csg/random.hpp"
#include "csg/symmetric.hpp"

using csg::Braid;
using csg::BraidWord;
using csg::Perm;
using csg::Symmetric;

TEST_CASE("decomposition into pure part and section") {
  const auto g = BraidWord::parse("s1 s1 s1", 1);
  const auto d = csg::decompose<Braid>(g);
  CHECK(csg::braids_equal(d.s, BraidWord::parse("s1", 1)));
  CHECK(csg::braids_equal(d.p, BraidWord::parse("s1 s1", 1)));
  CHECK(csg::is_pure<Braid>(d.p));
  CHECK(csg::braids_equal(csg::braid_mul(d.p, d.s), g));
  const auto e = csg::decompose<Symmetric>(Perm{2, 0, 1});
  CHECK(e.p.is_identity());
  CHECK(e.s == Perm{2, 0, 1});
}

TEST_CASE("the trivial horn lifts to the identity") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto h = csg::horn_from_filler<Braid>(Braid::one(n), k);
      const auto phi = csg::lift_horn<Braid>(h);
      CHECK(csg::braids_equal(phi, Braid::one(n)));
    }
  }
}

TEST_CASE("symmetric lifts are the base") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& s : csg::all_perms(n)) {
      for (std::size_t k = 0; k <= n; ++k) CHECK(csg::lift_horn<Symmetric>(csg::horn_from_filler<Symmetric>(s, k)) == s);
    }
  }
}

TEST_CASE("random braid horns lift") {
  csg::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.between(1, 3);
    const auto filler = rng.braid(n, 10);
    const std::size_t k = rng.below(n + 1);
    const auto h = csg::horn_from_filler<Braid>(filler, k);
    const auto phi = csg::lift_horn<Braid>(h);
    CHECK(csg::check_lift<Braid>(h, phi).ok());
  }
}

TEST_CASE("incompatible horns are rejected") {
  auto h = csg::horn_from_filler<Braid>(BraidWord::parse("s1 s2", 2), 1);
  h.faces[0] = BraidWord::parse("s1", 1);
  CHECK_FALSE(csg::horn_violation<Braid>(h).empty());
  try {
    (void)csg::lift_horn<Braid>(h);
    FAIL("expected an error");
  } catch (const csg::Error& e) {
    CHECK(e.kind() == csg::ErrorKind::IncompatibleHorn);
  }
  auto bad_k = csg::horn_from_filler<Braid>(Braid::one(2), 1);
  bad_k.k = 5;
  CHECK_FALSE(csg::horn_violation<Braid>(bad_k).empty());
}
