#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csg/error.hpp"
#include "csg/perm.hpp"
#include "csg/symmetric.hpp"

namespace csg {

/// A concrete crossed simplicial group with structural projection onto S_*.
///
/// Instances are stateless tag types exposing the element algebra as static
/// functions. `face` and `degeneracy` satisfy the crossed identities
///   d_i(g h) = d_i(g) d_{g^{-1}(i)}(h),   s_i(g h) = s_i(g) s_{g^{-1}(i)}(h),
/// where g^{-1}(i) is read through underlying_perm.
template <class I>
concept CrossedSimplicialGroup = requires(const typename I::Element& g, std::size_t n) {
  { I::name() } -> std::convertible_to<std::string_view>;
  { I::level(g) } -> std::same_as<std::size_t>;
  { I::one(n) } -> std::same_as<typename I::Element>;
  { I::mul(g, g) } -> std::same_as<typename I::Element>;
  { I::inv(g) } -> std::same_as<typename I::Element>;
  { I::face(n, g) } -> std::same_as<typename I::Element>;
  { I::degeneracy(n, g) } -> std::same_as<typename I::Element>;
  { I::underlying_perm(g) } -> std::same_as<Perm>;
  { I::equal(g, g) } -> std::same_as<bool>;
  { I::to_string(g) } -> std::same_as<std::string>;
};

/// Adds the two contracting homotopies s_L (new fixed strand/point on the
/// left) and s_R (on the right).
template <class I>
concept AmbiContractible = CrossedSimplicialGroup<I> && requires(const typename I::Element& g) {
  { I::s_left(g) } -> std::same_as<typename I::Element>;
  { I::s_right(g) } -> std::same_as<typename I::Element>;
};

/// An instance whose projection has a simplicial-set section.
template <class I>
concept Sectioned = CrossedSimplicialGroup<I> && requires(const Perm& sigma) {
  { I::section(sigma) } -> std::same_as<typename I::Element>;
};

/// Outcome of an identity check: the labels of every identity that failed.
struct CheckReport {
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  void require(bool holds, std::string label) {
    if (!holds) failures.push_back(std::move(label));
  }
  void merge(const CheckReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

/// g^{-1}(i), computed through the structural projection.
template <CrossedSimplicialGroup I>
std::size_t act_inverse(const typename I::Element& g, std::size_t i) {
  return static_cast<std::size_t>(I::underlying_perm(g).inverse()(i));
}

/// m successive applications of s_i, always at the literal index i.
template <CrossedSimplicialGroup I>
typename I::Element iterate_degeneracy(std::size_t i, std::size_t m, typename I::Element g) {
  for (std::size_t r = 0; r < m; ++r) g = I::degeneracy(i, g);
  return g;
}

/// 1_left ⊞ g ⊞ 1_right, i.e. s_L^left s_R^right (g), at level n + left + right.
template <AmbiContractible I>
typename I::Element pad(typename I::Element g, std::size_t left, std::size_t right) {
  for (std::size_t r = 0; r < right; ++r) g = I::s_right(g);
  for (std::size_t r = 0; r < left; ++r) g = I::s_left(g);
  return g;
}

/// Block sum G_n x G_m -> G_{n+m+1}.
template <AmbiContractible I>
typename I::Element boxplus(const typename I::Element& g, const typename I::Element& h) {
  const std::size_t n = I::level(g);
  const std::size_t m = I::level(h);
  return I::mul(pad<I>(g, 0, m + 1), pad<I>(h, n + 1, 0));
}

template <CrossedSimplicialGroup I>
CheckReport check_crossed_identities(const typename I::Element& g, const typename I::Element& h,
                                     std::size_t i) {
  const std::size_t n = I::level(g);
  if (I::level(h) != n) throw_level_mismatch("check_crossed_identities", n, I::level(h));
  if (i > n) throw_index_out_of_range("check_crossed_identities", i, n);
  CheckReport report;
  const auto gh = I::mul(g, h);
  const std::size_t shifted = act_inverse<I>(g, i);
  if (n >= 1) {
    report.require(I::equal(I::face(i, gh), I::mul(I::face(i, g), I::face(shifted, h))),
                   "d_" + std::to_string(i) + "(gh) = d_i(g) d_{g^-1 i}(h)");
  }
  report.require(I::equal(I::degeneracy(i, gh), I::mul(I::degeneracy(i, g), I::degeneracy(shifted, h))),
                 "s_" + std::to_string(i) + "(gh) = s_i(g) s_{g^-1 i}(h)");
  return report;
}

/// All simplicial identities among faces and degeneracies that start at g.
template <CrossedSimplicialGroup I>
CheckReport check_simplicial_identities(const typename I::Element& g) {
  const std::size_t n = I::level(g);
  CheckReport report;
  auto label = [](const char* fmt, std::size_t i, std::size_t j) {
    return std::string(fmt) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  if (n >= 2) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        report.require(I::equal(I::face(i, I::face(j, g)), I::face(j - 1, I::face(i, g))),
                       label("d_i d_j = d_{j-1} d_i", i, j));
      }
    }
  }
  for (std::size_t j = 0; j <= n; ++j) {
    const auto sj = I::degeneracy(j, g);
    for (std::size_t i = 0; i <= n + 1; ++i) {
      const auto lhs = I::face(i, sj);
      if (i < j) {
        report.require(I::equal(lhs, I::degeneracy(j - 1, I::face(i, g))), label("d_i s_j = s_{j-1} d_i", i, j));
      } else if (i == j || i == j + 1) {
        report.require(I::equal(lhs, g), label("d_i s_j = id", i, j));
      } else {
        report.require(I::equal(lhs, I::degeneracy(j, I::face(i - 1, g))), label("d_i s_j = s_j d_{i-1}", i, j));
      }
    }
    for (std::size_t i = 0; i <= j; ++i) {
      report.require(I::equal(I::degeneracy(i, sj), I::degeneracy(j + 1, I::degeneracy(i, g))),
                     label("s_i s_j = s_{j+1} s_i", i, j));
    }
  }
  return report;
}

/// s_L behaves as an extra degeneracy s_{-1} and s_R as s_{n+1}; both commute
/// with the structural projection.
template <AmbiContractible I>
CheckReport check_extra_degeneracy(const typename I::Element& g) {
  const std::size_t n = I::level(g);
  CheckReport report;
  const auto left = I::s_left(g);
  const auto right = I::s_right(g);
  report.require(I::equal(I::face(0, left), g), "d_0 s_L = id");
  report.require(I::equal(I::face(n + 1, right), g), "d_{n+1} s_R = id");
  for (std::size_t i = 0; i <= n; ++i) {
    const std::string idx = " (i=" + std::to_string(i) + ")";
    if (n >= 1) {
      report.require(I::equal(I::face(i + 1, left), I::s_left(I::face(i, g))), "d_{i+1} s_L = s_L d_i" + idx);
      report.require(I::equal(I::face(i, right), I::s_right(I::face(i, g))), "d_i s_R = s_R d_i" + idx);
    }
    report.require(I::equal(I::degeneracy(i + 1, left), I::s_left(I::degeneracy(i, g))),
                   "s_{i+1} s_L = s_L s_i" + idx);
    report.require(I::equal(I::degeneracy(i, right), I::s_right(I::degeneracy(i, g))),
                   "s_i s_R = s_R s_i" + idx);
  }
  report.require(I::equal(I::s_left(right), I::s_right(left)), "s_L s_R = s_R s_L");
  const Perm base = I::underlying_perm(g);
  report.require(I::underlying_perm(left) == s_left_perm(base), "pi s_L = s_L pi");
  report.require(I::underlying_perm(right) == s_right_perm(base), "pi s_R = s_R pi");
  return report;
}

/// s_L and s_R are group homomorphisms.
template <AmbiContractible I>
CheckReport check_contraction_homomorphism(const typename I::Element& g, const typename I::Element& h) {
  CheckReport report;
  const auto gh = I::mul(g, h);
  report.require(I::equal(I::s_left(gh), I::mul(I::s_left(g), I::s_left(h))), "s_L(gh) = s_L(g) s_L(h)");
  report.require(I::equal(I::s_right(gh), I::mul(I::s_right(g), I::s_right(h))), "s_R(gh) = s_R(g) s_R(h)");
  return report;
}

/// s_R^{m+1}(g) and s_L^{n+1}(h) commute.
template <AmbiContractible I>
CheckReport check_monoidal(const typename I::Element& g, const typename I::Element& h) {
  const std::size_t n = I::level(g);
  const std::size_t m = I::level(h);
  const auto a = pad<I>(g, 0, m + 1);
  const auto b = pad<I>(h, n + 1, 0);
  CheckReport report;
  report.require(I::equal(I::mul(a, b), I::mul(b, a)), "s_R^{m+1}(g) s_L^{n+1}(h) = s_L^{n+1}(h) s_R^{m+1}(g)");
  return report;
}

/// (1_i ⊞ h ⊞ 1_{n-i}) s_i^m(g) = s_i^m(g) (1_a ⊞ h ⊞ 1_{n-a}) with a = g^{-1}(i).
template <AmbiContractible I>
CheckReport check_operadic(const typename I::Element& g, const typename I::Element& h, std::size_t i) {
  const std::size_t n = I::level(g);
  const std::size_t m = I::level(h);
  if (i > n) throw_index_out_of_range("check_operadic", i, n);
  const std::size_t a = act_inverse<I>(g, i);
  const auto lifted = iterate_degeneracy<I>(i, m, g);
  CheckReport report;
  report.require(I::equal(I::mul(pad<I>(h, i, n - i), lifted), I::mul(lifted, pad<I>(h, a, n - a))),
                 "operadic axiom (i=" + std::to_string(i) + ")");
  return report;
}

/// Group axioms for one triple at a common level.
template <CrossedSimplicialGroup I>
CheckReport check_group_axioms(const typename I::Element& g, const typename I::Element& h,
                               const typename I::Element& k) {
  CheckReport report;
  const auto one = I::one(I::level(g));
  report.require(I::equal(I::mul(I::mul(g, h), k), I::mul(g, I::mul(h, k))), "(gh)k = g(hk)");
  report.require(I::equal(I::mul(g, one), g) && I::equal(I::mul(one, g), g), "g 1 = 1 g = g");
  report.require(I::equal(I::mul(I::inv(g), g), one) && I::equal(I::mul(g, I::inv(g)), one), "g^-1 g = 1");
  return report;
}

/// The structural projection is a homomorphism and commutes with the
/// simplicial operators.
template <AmbiContractible I>
CheckReport check_projection(const typename I::Element& g, const typename I::Element& h) {
  CheckReport report;
  const std::size_t n = I::level(g);
  const Perm pg = I::underlying_perm(g);
  report.require(I::underlying_perm(I::mul(g, h)) == pg * I::underlying_perm(h), "pi(gh) = pi(g) pi(h)");
  for (std::size_t i = 0; i <= n; ++i) {
    const std::string idx = " (i=" + std::to_string(i) + ")";
    if (n >= 1) report.require(I::underlying_perm(I::face(i, g)) == face_perm(i, pg), "pi d_i = d_i pi" + idx);
    report.require(I::underlying_perm(I::degeneracy(i, g)) == degeneracy_perm(i, pg), "pi s_i = s_i pi" + idx);
  }
  report.require(I::underlying_perm(boxplus<I>(g, h)) == boxplus<Symmetric>(pg, I::underlying_perm(h)),
                 "pi(g ⊞ h) = pi(g) ⊞ pi(h)");
  return report;
}

/// Faces and degeneracies are homomorphisms on pure elements (the kernel of
/// the projection is a simplicial group).
template <CrossedSimplicialGroup I>
CheckReport check_kernel_homomorphism(const typename I::Element& p, const typename I::Element& q,
                                      std::size_t i) {
  CheckReport report;
  const auto pq = I::mul(p, q);
  if (I::level(p) >= 1) {
    report.require(I::equal(I::face(i, pq), I::mul(I::face(i, p), I::face(i, q))), "d_i(pq) = d_i(p) d_i(q)");
  }
  report.require(I::equal(I::degeneracy(i, pq), I::mul(I::degeneracy(i, p), I::degeneracy(i, q))),
                 "s_i(pq) = s_i(p) s_i(q)");
  return report;
}

}  // namespace csg
