#include <doctest.h>

#include "csg/braid.hpp"
#include "csg/groupoid.hpp"
#include "csg/random.hpp"
#include "csg/symmetric.hpp"

using csg::Braid;
using csg::Perm;
using csg::Symmetric;
using SArrow = csg::GroupoidArrow<Symmetric>;

namespace {

// Over the symmetric instance Gamma_n is the pair groupoid: exactly one arrow
// between any two objects.
SArrow unique_arrow(const Perm& from, const Perm& to) { return {from, to.inverse() * from}; }

}  // namespace

TEST_CASE("arrow endpoints and composition") {
  const SArrow a{Perm{1, 0, 2}, Perm{0, 2, 1}};
  CHECK(a.target() == Perm{1, 2, 0});
  const SArrow b{a.target(), Perm{2, 1, 0}};
  const auto ba = csg::compose_arrows<Symmetric>(b, a);
  CHECK(ba.source == a.source);
  CHECK(ba.target() == b.target());
  CHECK_THROWS_AS(csg::compose_arrows<Symmetric>(a, a), csg::Error);
  const auto inv = csg::inverse_arrow<Symmetric>(a);
  CHECK(csg::compose_arrows<Symmetric>(inv, a).f.is_identity());
}

TEST_CASE("faces and degeneracies agree with the pair groupoid") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& from : csg::all_perms(n)) {
      for (const auto& to : csg::all_perms(n)) {
        const auto a = unique_arrow(from, to);
        for (std::size_t i = 0; i <= n; ++i) {
          if (n >= 1) {
            const auto fa = csg::face_arrow<Symmetric>(i, a);
            CHECK(csg::arrows_equal<Symmetric>(fa, unique_arrow(csg::face_perm(i, from), csg::face_perm(i, to))));
          }
          const auto sa = csg::degeneracy_arrow<Symmetric>(i, a);
          CHECK(csg::arrows_equal<Symmetric>(sa,
                                             unique_arrow(csg::degeneracy_perm(i, from), csg::degeneracy_perm(i, to))));
        }
      }
    }
  }
}

TEST_CASE("braid arrows have matching endpoints after faces") {
  csg::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.between(1, 4);
    const csg::GroupoidArrow<Braid> a{rng.perm(n), rng.braid(n, 10)};
    for (std::size_t i = 0; i <= n; ++i) {
      const auto fa = csg::face_arrow<Braid>(i, a);
      CHECK(fa.source == csg::face_perm(i, a.source));
      CHECK(fa.target() == csg::face_perm(i, a.target()));
      const auto sa = csg::degeneracy_arrow<Braid>(i, a);
      CHECK(sa.target() == csg::degeneracy_perm(i, a.target()));
      CHECK(csg::check_gamma_simplicial<Braid>(a).ok());
    }
  }
}

TEST_CASE("connecting arrows and automorphisms") {
  const Perm from{2, 0, 1};
  const Perm to{0, 2, 1};
  const auto c = csg::connecting_arrow<Braid>(from, to);
  CHECK(c.source == from);
  CHECK(c.target() == to);
  CHECK(csg::is_automorphism<Braid>({from, Braid::one(2)}));
  CHECK(csg::is_automorphism<Braid>({from, csg::BraidWord::parse("s1 s1", 2)}));
  CHECK_FALSE(csg::is_automorphism<Braid>({from, csg::BraidWord::parse("s1", 2)}));
}

TEST_CASE("nerve inner face composes adjacent arrows") {
  const csg::NerveSimplex<Symmetric> s{Perm{1, 0, 2}, {Perm{0, 2, 1}, Perm{2, 1, 0}}};
  const auto objects = s.objects();
  REQUIRE(objects.size() == 3);
  const auto d1 = csg::nerve_face<Symmetric>(1, s);
  CHECK(d1.start == s.start);
  REQUIRE(d1.chain.size() == 1);
  CHECK(d1.chain[0] == Perm{2, 1, 0} * Perm{0, 2, 1});
  CHECK(d1.objects().back() == objects.back());
  const auto d0 = csg::nerve_face<Symmetric>(0, s);
  CHECK(d0.start == objects[1]);
  const auto d2 = csg::nerve_face<Symmetric>(2, s);
  CHECK(d2.objects().back() == objects[1]);
  CHECK(csg::check_nerve_simplicial<Symmetric>(s).ok());
  CHECK(csg::check_quotient_simplicial<Symmetric>(s).ok());
}

TEST_CASE("quotient forgets the start object") {
  const csg::NerveSimplex<Symmetric> s{Perm{1, 0}, {Perm{1, 0}, Perm{0, 1}}};
  const auto q = csg::quotient_map<Symmetric>(s);
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Perm{0, 1});
  CHECK(q[1] == Perm{1, 0});
  const auto moved = csg::nerve_n_action<Symmetric>(Perm{1, 0}, s);
  CHECK(csg::tuples_equal<Symmetric>(csg::quotient_map<Symmetric>(moved), q));
  CHECK(csg::same_orbit<Symmetric>(s, moved));
  const csg::NerveSimplex<Symmetric> other{Perm{1, 0}, {Perm{0, 1}, Perm{1, 0}}};
  CHECK_FALSE(csg::same_orbit<Symmetric>(s, other));
}
