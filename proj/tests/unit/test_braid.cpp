#include <doctest.h>

#include "csg/braid.hpp"
#include "csg/error.hpp"
#include "csg/random.hpp"
#include "csg/symmetric.hpp"
#include "oracles.hpp"

using csg::BraidWord;
using csg::Perm;

namespace {

BraidWord w(const char* text, std::size_t level) { return BraidWord::parse(text, level); }

}  // namespace

TEST_CASE("Artin action of a single generator") {
  const auto images = csg::artin_act(w("s1", 1));
  REQUIRE(images.size() == 2);
  CHECK(images[0].to_string() == "x0 x1 x0^-1");
  CHECK(images[1].to_string() == "x0");
  const auto inv = csg::artin_act(w("s1^-1", 1));
  CHECK(inv[0].to_string() == "x1");
  CHECK(inv[1].to_string() == "x1^-1 x0 x1");
}

TEST_CASE("braid relations hold and the Burau oracle agrees") {
  const std::vector<std::pair<std::string, std::string>> equal = {
      {"s1 s2 s1", "s2 s1 s2"},
      {"s1 s3", "s3 s1"},
      {"s1 s1^-1", "e"},
      {"s2^-1 s1 s2", "s1 s2 s1^-1"},
  };
  for (const auto& [a, b] : equal) {
    CHECK(csg::braids_equal(w(a.c_str(), 3), w(b.c_str(), 3)));
    CHECK(oracle::burau(w(a.c_str(), 3)) == oracle::burau(w(b.c_str(), 3)));
    CHECK(csg::artin_digest(w(a.c_str(), 3)) == csg::artin_digest(w(b.c_str(), 3)));
  }
  const std::vector<std::pair<std::string, std::string>> distinct = {
      {"s1 s2", "s2 s1"},
      {"s1 s1", "e"},
      {"s1 s2 s1 s2 s1 s2", "e"},
      {"s1 s2 s1^-1", "s2^-1 s1 s2^-1"},
  };
  for (const auto& [a, b] : distinct) {
    CHECK_FALSE(csg::braids_equal(w(a.c_str(), 3), w(b.c_str(), 3)));
  }
}

TEST_CASE("equality decisions match the Burau oracle on three strands") {
  // Burau is faithful on three strands, so on level 2 it decides equality.
  csg::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = rng.braid(2, 8);
    // Respell g by inserting a random relator somewhere.
    auto letters = g.letters();
    const auto at = rng.below(letters.size() + 1);
    const std::vector<csg::Letter> relator = {{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}};
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(at), relator.begin(), relator.end());
    const BraidWord h(2, letters);
    CHECK(csg::braids_equal(g, h));
    CHECK(oracle::burau(g) == oracle::burau(h));
    const auto k = rng.braid(2, 8);
    CHECK(csg::braids_equal(g, k) == (oracle::burau(g) == oracle::burau(k)));
  }
}

TEST_CASE("underlying permutation is a transposition product") {
  csg::Rng rng(11);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = rng.braid(n, 10);
      const auto h = rng.braid(n, 10);
      CHECK(csg::braid_perm(g) == oracle::braid_perm(g));
      CHECK(csg::braid_perm(csg::braid_mul(g, h)) == csg::braid_perm(g) * csg::braid_perm(h));
      CHECK(csg::braid_perm(csg::braid_inv(g)) == csg::braid_perm(g).inverse());
    }
  }
}

TEST_CASE("faces and degeneracies cover the symmetric ones") {
  CHECK(csg::face_braid(0, w("s1", 1)).empty());
  CHECK(csg::face_braid(0, w("s1", 1)).level() == 0);
  CHECK(csg::face_braid(2, w("s1 s2", 2)) == w("s1", 1));
  CHECK(csg::braid_perm(csg::degeneracy_braid(0, w("s1", 1))) == Perm{2, 0, 1});
  csg::Rng rng(13);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = rng.braid(n, 10);
      const Perm p = oracle::braid_perm(g);
      for (std::size_t i = 0; i <= n; ++i) {
        CHECK(csg::braid_perm(csg::face_braid(i, g)) == csg::face_perm(i, p));
        CHECK(csg::braid_perm(csg::degeneracy_braid(i, g)) == csg::degeneracy_perm(i, p));
      }
    }
  }
}

TEST_CASE("contractions add an unbraided strand") {
  CHECK(csg::s_left_braid(w("s1", 1)) == w("s2", 2));
  CHECK(csg::s_right_braid(w("s1", 1)) == w("s1", 2));
  CHECK(csg::s_left_braid(w("e", 0)).level() == 1);
}

TEST_CASE("permutation braids") {
  CHECK(csg::braids_equal(csg::permutation_braid(Perm{2, 1, 0}), w("s1 s2 s1", 2)));
  CHECK(csg::permutation_braid(Perm::identity(3)).empty());
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& s : csg::all_perms(n)) {
      const auto b = csg::permutation_braid(s);
      CHECK(b.length() == s.inversions());
      CHECK(oracle::braid_perm(b) == s);
      for (const auto& l : b.letters()) CHECK(l.sign == 1);
    }
  }
}

TEST_CASE("powers and parsing") {
  CHECK(csg::braid_pow(w("s1", 1), 3) == w("s1 s1 s1", 1));
  CHECK(csg::braids_equal(csg::braid_pow(w("s1", 1), -2), w("s1^-1 s1^-1", 1)));
  CHECK(w("s1 s2^-1", 2).to_string() == "s1 s2^-1");
  CHECK(w("e", 2).to_string() == "e");
  CHECK_THROWS_AS(w("s3", 2), csg::Error);
  CHECK_THROWS_AS(w("s0", 2), csg::Error);
  CHECK_THROWS_AS(w("t1", 2), csg::Error);
  CHECK_THROWS_AS(csg::braid_mul(w("s1", 1), w("s1", 2)), csg::Error);
}
