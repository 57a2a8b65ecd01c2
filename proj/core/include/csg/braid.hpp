#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csg/perm.hpp"

namespace csg {

/// One Artin generator or its inverse. Generator k crosses the strands at
/// positions k and k + 1; a positive letter takes the strand at k over the
/// strand at k + 1.
struct Letter {
  std::uint32_t gen = 0;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the Artin generators of B_n = Br_{n+1}.
///
/// Letters are read left to right from the top of the braid to the bottom,
/// and the product g * h stacks g above h. The underlying permutation sends a
/// bottom position to the top position of the strand ending there, so that
/// underlying_perm is a homomorphism for (g * h)(x) = g(h(x)).
class BraidWord {
public:
  BraidWord() = default;
  /// Throws csg::Error(InvalidElement) if some generator index is >= level.
  explicit BraidWord(std::size_t level, std::vector<Letter> letters = {});

  std::size_t level() const noexcept { return level_; }
  std::size_t strands() const noexcept { return level_ + 1; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Syntactic equality. Use braids_equal for equality in the group.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

  /// Surface syntax, 1-indexed: "s1 s2^-1 s1"; the empty word prints as "e".
  std::string to_string() const;
  static BraidWord parse(std::string_view text, std::size_t level);

private:
  std::size_t level_ = 0;
  std::vector<Letter> letters_;
};

/// Freely reduced word in x_0, ..., x_n. Letter +(k+1) is x_k, -(k+1) is x_k^{-1}.
class FreeWord {
public:
  FreeWord() = default;
  static FreeWord generator(std::size_t k) { return FreeWord({static_cast<int>(k) + 1}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  FreeWord inverse() const;
  /// Concatenation followed by cancellation at the seam.
  friend FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::string to_string() const;

private:
  explicit FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

BraidWord braid_one(std::size_t level);
BraidWord braid_mul(const BraidWord& g, const BraidWord& h);
BraidWord braid_inv(const BraidWord& g);

/// Word power g^e for integer e (negative powers use the inverse).
BraidWord braid_pow(const BraidWord& g, int exponent);

Perm braid_perm(const BraidWord& g);

/// Images of x_0, ..., x_n under the automorphism of the free group induced
/// by g, where generator k sends x_k to x_k x_{k+1} x_k^{-1} and x_{k+1} to x_k.
std::vector<FreeWord> artin_act(const BraidWord& g);

/// Word problem via the faithful Artin action.
bool braids_equal(const BraidWord& g, const BraidWord& h);

/// Stable 64-bit digest of the Artin images; equal braids share it.
std::uint64_t artin_digest(const BraidWord& g);

/// Deletes the strand whose top endpoint is at position i.
BraidWord face_braid(std::size_t i, const BraidWord& g);
/// Replaces the strand whose top endpoint is at position i by two parallel strands.
BraidWord degeneracy_braid(std::size_t i, const BraidWord& g);
BraidWord s_left_braid(const BraidWord& g);
BraidWord s_right_braid(const BraidWord& g);

/// Positive braid in which exactly the inversion pairs of sigma cross, once each.
BraidWord permutation_braid(const Perm& sigma);

/// True iff the permutation-braid section commutes with the face d_i and the
/// degeneracy s_i at sigma.
bool section_is_simplicial(const Perm& sigma, std::size_t i);

/// The braid crossed simplicial group B_*.
struct Braid {
  using Element = BraidWord;

  static constexpr std::string_view name() { return "braid"; }

  static std::size_t level(const BraidWord& g) { return g.level(); }
  static BraidWord one(std::size_t n) { return braid_one(n); }
  static BraidWord mul(const BraidWord& g, const BraidWord& h) { return braid_mul(g, h); }
  static BraidWord inv(const BraidWord& g) { return braid_inv(g); }
  static BraidWord face(std::size_t i, const BraidWord& g) { return face_braid(i, g); }
  static BraidWord degeneracy(std::size_t i, const BraidWord& g) { return degeneracy_braid(i, g); }
  static BraidWord s_left(const BraidWord& g) { return s_left_braid(g); }
  static BraidWord s_right(const BraidWord& g) { return s_right_braid(g); }
  static Perm underlying_perm(const BraidWord& g) { return braid_perm(g); }
  static BraidWord section(const Perm& sigma) { return permutation_braid(sigma); }
  static bool equal(const BraidWord& g, const BraidWord& h) { return braids_equal(g, h); }
  static std::string to_string(const BraidWord& g) {
    return g.to_string() + " @" + std::to_string(g.level());
  }
};

}  // namespace csg
