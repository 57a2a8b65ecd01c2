#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "csg/perm.hpp"

namespace csg {

// Crossed simplicial structure on S_n = Bij([n]).
//
// face_perm(i, s) removes the source point s^{-1}(i) and the target point i
// and renumbers both gaps; degeneracy_perm(i, s) doubles s^{-1}(i) into two
// adjacent sources mapping to i and i + 1.

Perm face_perm(std::size_t i, const Perm& sigma);
Perm degeneracy_perm(std::size_t i, const Perm& sigma);

/// New fixed point 0, everything else shifted up by one.
Perm s_left_perm(const Perm& sigma);
/// New fixed point n + 1.
Perm s_right_perm(const Perm& sigma);

/// Substitutes tau as a block at source position sigma^{-1}(i), target i.
/// Written directly from the block picture, independently of the
/// pad/degeneracy route used by the operad module.
Perm block_substitute(const Perm& sigma, std::size_t i, const Perm& tau);

/// The five inverse-image case splits for faces, degeneracies and block
/// substitution on S_*. Each returns true iff the identity holds verbatim
/// for the given input; items 1, 2, 3 and 5 require i < j.
bool preimage_case1(const Perm& sigma, std::size_t i, std::size_t j);
bool preimage_case2(const Perm& sigma, std::size_t i, std::size_t j);
bool preimage_case3(const Perm& sigma, std::size_t i, std::size_t j);
bool preimage_case4(const Perm& sigma, const Perm& tau, std::size_t i, std::size_t j);
bool preimage_case5(const Perm& sigma, std::size_t i, std::size_t j);

/// The symmetric crossed simplicial group S_*.
struct Symmetric {
  using Element = Perm;

  static constexpr std::string_view name() { return "symm"; }

  static std::size_t level(const Perm& g) { return g.level(); }
  static Perm one(std::size_t n) { return Perm::identity(n); }
  static Perm mul(const Perm& g, const Perm& h) { return g * h; }
  static Perm inv(const Perm& g) { return g.inverse(); }
  static Perm face(std::size_t i, const Perm& g) { return face_perm(i, g); }
  static Perm degeneracy(std::size_t i, const Perm& g) { return degeneracy_perm(i, g); }
  static Perm s_left(const Perm& g) { return s_left_perm(g); }
  static Perm s_right(const Perm& g) { return s_right_perm(g); }
  static Perm underlying_perm(const Perm& g) { return g; }
  static Perm section(const Perm& sigma) { return sigma; }
  static bool equal(const Perm& g, const Perm& h) { return g == h; }
  static std::string to_string(const Perm& g) { return g.to_string(); }
};

}  // namespace csg
