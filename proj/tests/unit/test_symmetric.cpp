#include <doctest.h>

#include "csg/instance.hpp"
#include "csg/operad.hpp"
#include "csg/symmetric.hpp"
#include "oracles.hpp"

using csg::Perm;
using csg::Symmetric;

TEST_CASE("faces delete an arrow and renumber") {
  CHECK(csg::face_perm(0, Perm{1, 2, 0}) == Perm{0, 1});
  CHECK(csg::face_perm(2, Perm{1, 2, 0}) == Perm{1, 0});
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(csg::face_perm(0, Perm::identity(n)) == Perm::identity(n - 1));
    for (const auto& s : csg::all_perms(n)) {
      for (std::size_t i = 0; i <= n; ++i) {
        CHECK(oracle::table(csg::face_perm(i, s)) == oracle::face(static_cast<int>(i), oracle::table(s)));
      }
    }
  }
  CHECK_THROWS_AS(csg::face_perm(0, Perm::identity(0)), csg::Error);
  CHECK_THROWS_AS(csg::face_perm(3, Perm{1, 2, 0}), csg::Error);
}

TEST_CASE("degeneracies double an arrow") {
  CHECK(csg::degeneracy_perm(0, Perm{1, 0}) == Perm{2, 0, 1});
  CHECK(csg::degeneracy_perm(1, Perm{1, 0}) == Perm{1, 2, 0});
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(csg::degeneracy_perm(n, Perm::identity(n)) == Perm::identity(n + 1));
    for (const auto& s : csg::all_perms(n)) {
      for (std::size_t i = 0; i <= n; ++i) {
        CHECK(oracle::table(csg::degeneracy_perm(i, s)) == oracle::degeneracy(static_cast<int>(i), oracle::table(s)));
      }
    }
  }
}

TEST_CASE("contractions, padding and block sum") {
  CHECK(csg::s_right_perm(Perm{1, 0}) == Perm{1, 0, 2});
  CHECK(csg::s_left_perm(Perm{1, 0}) == Perm{0, 2, 1});
  CHECK(csg::s_left_perm(Perm::identity(2)) == Perm::identity(3));
  CHECK(csg::pad<Symmetric>(Perm{1, 0}, 0, 1) == Perm{1, 0, 2});
  CHECK(csg::pad<Symmetric>(Perm{1, 0}, 1, 1) == Perm{0, 2, 1, 3});
  CHECK(csg::pad<Symmetric>(Perm{2, 0, 1}, 0, 0) == Perm{2, 0, 1});
  CHECK(csg::boxplus<Symmetric>(Perm{1, 0}, Perm{0}) == Perm{1, 0, 2});
  CHECK(csg::boxplus<Symmetric>(Perm{0}, Perm{1, 0}) == Perm{0, 2, 1});
  CHECK(csg::boxplus<Symmetric>(Perm::identity(1), Perm::identity(2)) == Perm::identity(4));
  // Block sum as juxtaposition of tables.
  for (const auto& g : csg::all_perms(2)) {
    for (const auto& h : csg::all_perms(1)) {
      std::vector<int> t = oracle::table(g);
      for (int v : h.images()) t.push_back(v + 3);
      CHECK(oracle::table(csg::boxplus<Symmetric>(g, h)) == t);
    }
  }
}

TEST_CASE("block substitution") {
  CHECK(csg::block_substitute(Perm{1, 0}, 0, Perm{1, 0}) == Perm{2, 1, 0});
  CHECK(csg::block_substitute(Perm::identity(1), 0, Perm{1, 0}) == Perm{1, 0, 2});
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& s : csg::all_perms(n)) {
      for (std::size_t i = 0; i <= n; ++i) {
        CHECK(csg::block_substitute(s, i, Perm::identity(0)) == s);
        for (std::size_t m = 0; m <= 3; ++m) {
          for (const auto& t : csg::all_perms(m)) {
            CHECK(csg::circ_set<Symmetric>(s, i, t) == csg::block_substitute(s, i, t));
          }
        }
      }
    }
  }
}

TEST_CASE("inverse-image case splits hold exhaustively") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : csg::all_perms(n)) {
      for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          CHECK(csg::preimage_case1(s, i, j));
          CHECK(csg::preimage_case2(s, i, j));
          CHECK(csg::preimage_case3(s, i, j));
          CHECK(csg::preimage_case5(s, i, j));
        }
      }
    }
  }
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      for (const auto& s : csg::all_perms(n)) {
        for (const auto& t : csg::all_perms(m)) {
          for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= m; ++j) CHECK(csg::preimage_case4(s, t, i, j));
          }
        }
      }
    }
  }
}

TEST_CASE("symmetric instance satisfies the structural identities") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& g : csg::all_perms(n)) {
      CHECK(csg::check_simplicial_identities<Symmetric>(g).ok());
      CHECK(csg::check_extra_degeneracy<Symmetric>(g).ok());
      for (const auto& h : csg::all_perms(n)) {
        for (std::size_t i = 0; i <= n; ++i) CHECK(csg::check_crossed_identities<Symmetric>(g, h, i).ok());
      }
    }
  }
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 2; ++m) {
      for (const auto& g : csg::all_perms(n)) {
        for (const auto& h : csg::all_perms(m)) {
          CHECK(csg::check_monoidal<Symmetric>(g, h).ok());
          for (std::size_t i = 0; i <= n; ++i) CHECK(csg::check_operadic<Symmetric>(g, h, i).ok());
        }
      }
    }
  }
}
