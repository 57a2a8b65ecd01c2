#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csg {

/// A bijection of [n] = {0, ..., n}, stored in one-line notation.
///
/// The level of a permutation is n, so a Perm at level n moves n + 1 points.
/// Products compose right to left: (g * h)(x) = g(h(x)).
class Perm {
public:
  /// The unique permutation at level 0.
  Perm() : images_{0} {}

  /// Throws csg::Error(InvalidElement) unless `images` is a bijection of {0, ..., size-1}.
  explicit Perm(std::vector<int> images);
  Perm(std::initializer_list<int> images) : Perm(std::vector<int>(images)) {}

  static Perm identity(std::size_t level);

  std::size_t level() const noexcept { return images_.size() - 1; }
  std::size_t points() const noexcept { return images_.size(); }

  int operator()(std::size_t x) const { return images_[x]; }
  int operator[](std::size_t x) const { return images_[x]; }
  std::span<const int> images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;

  /// Number of pairs x < y with p(x) > p(y).
  std::size_t inversions() const noexcept;

  friend Perm operator*(const Perm& lhs, const Perm& rhs);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Bracketed one-line form, e.g. "[1,0,2]".
  std::string to_string() const;
  static Perm parse(std::string_view text);

private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend class PermBuilder;
};

/// Builds a Perm from an image table known to be a bijection. Used by the
/// structural formulas, which produce valid tables by construction.
class PermBuilder {
public:
  static Perm adopt(std::vector<int> images) { return Perm(Perm::Unchecked{}, std::move(images)); }
};

/// Every permutation at `level`, in lexicographic order of the one-line form.
std::vector<Perm> all_perms(std::size_t level);

}  // namespace csg
