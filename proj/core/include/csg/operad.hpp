#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csg/groupoid.hpp"
#include "csg/instance.hpp"

namespace csg {

// Partial compositions on G_* and on the action groupoids Gamma_*.
//
// Level n plays the role of arity n + 1 (shifted indexing), so
// circ_i : G_n x G_m -> G_{n+m} for 0 <= i <= n.

/// alpha o_i beta = (1_i ⊞ beta ⊞ 1_{n-i}) . s_i^m(alpha).
template <AmbiContractible I>
typename I::Element circ_set(const typename I::Element& alpha, std::size_t i, const typename I::Element& beta) {
  const std::size_t n = I::level(alpha);
  const std::size_t m = I::level(beta);
  if (i > n) throw_index_out_of_range("circ", i, n);
  return I::mul(pad<I>(beta, i, n - i), iterate_degeneracy<I>(i, m, alpha));
}

/// [sigma, f] o_i [tau, g] = [sigma o_i tau, (f^{-1} o_{sigma^{-1}(i)} g^{-1})^{-1}].
template <AmbiContractible I>
GroupoidArrow<I> circ_gpd(const GroupoidArrow<I>& a, std::size_t i, const GroupoidArrow<I>& b) {
  const std::size_t n = a.level();
  if (i > n) throw_index_out_of_range("circ_gpd", i, n);
  const auto at = static_cast<std::size_t>(a.source.inverse()(i));
  return {circ_set<Symmetric>(a.source, i, b.source), I::inv(circ_set<I>(I::inv(a.f), at, I::inv(b.f)))};
}

/// (alpha o_i beta)(alpha' o_{alpha^{-1}(i)} beta') = alpha alpha' o_i beta beta'.
template <AmbiContractible I>
CheckReport check_operadic_mult(const typename I::Element& alpha, const typename I::Element& alpha2, std::size_t i,
                                const typename I::Element& beta, const typename I::Element& beta2) {
  CheckReport report;
  const std::size_t at = act_inverse<I>(alpha, i);
  const auto lhs = I::mul(circ_set<I>(alpha, i, beta), circ_set<I>(alpha2, at, beta2));
  report.require(I::equal(lhs, circ_set<I>(I::mul(alpha, alpha2), i, I::mul(beta, beta2))),
                 "operadic-mult (i=" + std::to_string(i) + ")");
  return report;
}

/// circ_gpd is a functor in both variables: composable pairs go to composable
/// pairs, composites are preserved, identities go to identities, and the
/// target of the output is the composition of the targets.
template <AmbiContractible I>
CheckReport check_gpd_functoriality(const GroupoidArrow<I>& a2, const GroupoidArrow<I>& a1, std::size_t i,
                                    const GroupoidArrow<I>& b2, const GroupoidArrow<I>& b1) {
  CheckReport report;
  const std::string idx = " (i=" + std::to_string(i) + ")";
  const auto c1 = circ_gpd<I>(a1, i, b1);
  const auto c2 = circ_gpd<I>(a2, i, b2);
  report.require(c1.target() == circ_set<Symmetric>(a1.target(), i, b1.target()), "cod(a o_i b) = cod a o_i cod b" + idx);
  if (c1.target() != c2.source) {
    report.require(false, "o_i preserves composability" + idx);
    return report;
  }
  const auto whole = circ_gpd<I>(compose_arrows<I>(a2, a1), i, compose_arrows<I>(b2, b1));
  report.require(arrows_equal<I>(whole, compose_arrows<I>(c2, c1)), "(a2 a1) o_i (b2 b1) = (a2 o_i b2)(a1 o_i b1)" + idx);
  const auto ids = circ_gpd<I>(identity_arrow<I>(a1.source), i, identity_arrow<I>(b1.source));
  report.require(arrows_equal<I>(ids, identity_arrow<I>(c1.source)), "id o_i id = id" + idx);
  return report;
}

/// Carrier of a shifted operad: G_* as a set-valued operad.
template <AmbiContractible I>
struct SetCarrier {
  using Element = typename I::Element;
  static constexpr std::string_view name() { return "set"; }
  static std::size_t level(const Element& x) { return I::level(x); }
  static Element unit() { return I::one(0); }
  static Element circ(const Element& a, std::size_t i, const Element& b) { return circ_set<I>(a, i, b); }
  static Element face(std::size_t i, const Element& x) { return I::face(i, x); }
  static bool equal(const Element& a, const Element& b) { return I::equal(a, b); }
  static std::string to_string(const Element& x) { return I::to_string(x); }
};

/// Carrier of a shifted operad: the action groupoids Gamma_*.
template <AmbiContractible I>
struct GpdCarrier {
  using Element = GroupoidArrow<I>;
  static constexpr std::string_view name() { return "groupoid"; }
  static std::size_t level(const Element& x) { return x.level(); }
  static Element unit() { return identity_arrow<I>(Perm::identity(0)); }
  static Element circ(const Element& a, std::size_t i, const Element& b) { return circ_gpd<I>(a, i, b); }
  static Element face(std::size_t i, const Element& x) { return face_arrow<I>(i, x); }
  static bool equal(const Element& a, const Element& b) { return arrows_equal<I>(a, b); }
  static std::string to_string(const Element& x) { return x.to_string(); }
};

/// Axioms of a shifted operad on the given inputs, over every admissible
/// index combination:
///   (1) id o_0 v = v, u o_i id = u
///   (2) (l o_i u) o_{i+j} v = l o_i (u o_j v)
///   (3) (l o_i u) o_{k+m} v = (l o_k v) o_i u            for i < k
///   (4) d_{i+j}(l o_i u) = l o_i d_j(u)
///   (5) d_i(l o_k v) = d_i(l) o_{k-1} v,  d_{k+m}(l o_i u) = d_k(l) o_i u   for i < k
template <class C>
CheckReport check_shifted_axioms(const typename C::Element& lambda, const typename C::Element& mu,
                                 const typename C::Element& nu) {
  CheckReport report;
  const std::size_t l = C::level(lambda);
  const std::size_t m = C::level(mu);
  auto eq = [](const auto& a, const auto& b) { return C::equal(a, b); };
  auto tag = [](const char* what, std::size_t a, std::size_t b) {
    return std::string(what) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  const auto id = C::unit();
  report.require(eq(C::circ(id, 0, nu), nu), "(1) id o_0 v = v");
  for (std::size_t i = 0; i <= l; ++i) {
    report.require(eq(C::circ(lambda, i, id), lambda), tag("(1) u o_i id = u", i, 0));
  }
  for (std::size_t i = 0; i <= l; ++i) {
    const auto lm = C::circ(lambda, i, mu);
    for (std::size_t j = 0; j <= m; ++j) {
      report.require(eq(C::circ(lm, i + j, nu), C::circ(lambda, i, C::circ(mu, j, nu))), tag("(2) associativity", i, j));
      if (m >= 1) {
        report.require(eq(C::face(i + j, lm), C::circ(lambda, i, C::face(j, mu))), tag("(4) d_{i+j}(l o_i u)", i, j));
      }
    }
    for (std::size_t k = i + 1; k <= l; ++k) {
      report.require(eq(C::circ(lm, k + m, nu), C::circ(C::circ(lambda, k, nu), i, mu)), tag("(3) commutativity", i, k));
      report.require(eq(C::face(i, C::circ(lambda, k, nu)), C::circ(C::face(i, lambda), k - 1, nu)),
                     tag("(5) d_i(l o_k v)", i, k));
      report.require(eq(C::face(k + m, lm), C::circ(C::face(k, lambda), i, mu)), tag("(5) d_{k+m}(l o_i u)", i, k));
    }
  }
  return report;
}

/// Unshifted view O(n) = U(n - 1) with the single nullary element `*`.
/// Partial compositions are 1-based; composing with `*` in slot i is the face
/// d_{i-1}, and O(1) o_1 * = *.
template <class C>
struct Unshifted {
  std::optional<typename C::Element> value;

  static Unshifted star() { return {std::nullopt}; }
  static Unshifted of(typename C::Element x) { return {std::move(x)}; }
  static Unshifted identity() { return of(C::unit()); }

  bool is_star() const { return !value.has_value(); }
  std::size_t arity() const { return value ? C::level(*value) + 1 : 0; }

  std::string to_string() const { return value ? C::to_string(*value) : std::string("*"); }
};

template <class C>
Unshifted<C> unshifted_circ(const Unshifted<C>& a, std::size_t i, const Unshifted<C>& b) {
  if (a.is_star() || i == 0 || i > a.arity()) throw_index_out_of_range("unshifted circ", i, a.arity());
  if (!b.is_star()) return Unshifted<C>::of(C::circ(*a.value, i - 1, *b.value));
  if (a.arity() == 1) return Unshifted<C>::star();
  return Unshifted<C>::of(C::face(i - 1, *a.value));
}

template <class C>
bool unshifted_equal(const Unshifted<C>& a, const Unshifted<C>& b) {
  if (a.is_star() || b.is_star()) return a.is_star() && b.is_star();
  return C::equal(*a.value, *b.value);
}

/// Operad axioms in the classical 1-based form:
///   (2) id o_1 v = v, u o_i id = u
///   (3) (l o_i u) o_{i+j-1} v = l o_i (u o_j v)         1 <= i <= l, 1 <= j <= m
///   (4) (l o_i u) o_{k-1+m} v = (l o_k v) o_i u         1 <= i < k <= l
template <class C>
CheckReport check_unshifted_axioms(const Unshifted<C>& lambda, const Unshifted<C>& mu, const Unshifted<C>& nu) {
  CheckReport report;
  using U = Unshifted<C>;
  auto eq = [](const U& a, const U& b) { return unshifted_equal<C>(a, b); };
  auto tag = [](const char* what, std::size_t a, std::size_t b) {
    return std::string(what) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  const U id = U::identity();
  report.require(eq(unshifted_circ<C>(id, 1, nu), nu), "(2) id o_1 v = v");
  for (const U* x : {&lambda, &mu, &nu}) {
    for (std::size_t i = 1; i <= x->arity(); ++i) {
      report.require(eq(unshifted_circ<C>(*x, i, id), *x), tag("(2) u o_i id = u", i, 0));
    }
  }
  const std::size_t l = lambda.arity();
  const std::size_t m = mu.arity();
  for (std::size_t i = 1; i <= l; ++i) {
    const U lm = unshifted_circ<C>(lambda, i, mu);
    for (std::size_t j = 1; j <= m; ++j) {
      report.require(eq(unshifted_circ<C>(lm, i + j - 1, nu), unshifted_circ<C>(lambda, i, unshifted_circ<C>(mu, j, nu))),
                     tag("(3) associativity", i, j));
    }
    for (std::size_t k = i + 1; k <= l; ++k) {
      report.require(eq(unshifted_circ<C>(lm, k - 1 + m, nu), unshifted_circ<C>(unshifted_circ<C>(lambda, k, nu), i, mu)), tag("(4) commutativity", i, k));
    }
  }
  return report;
}

// Equivariance of G_*-like shifted operads.
//
// The right action x^beta is not pinned down by the definition, so it is a
// parameter:
//   RightMultiplication        x^beta = x beta  (on Gamma: [s pi(b), b^-1 f b])
//   InverseLeftMultiplication  x^beta = beta^-1 x  (on Gamma: [pi(b)^-1 s, f])
// Condition (1) is tested as written, with beta' = 1_i ⊞ beta ⊞ 1_{m-i}.
// Condition (2), mu^beta o_i nu = (mu o_? nu)^{beta''}, is tested for every
// pairing of a composition index in {i, sigma(i), sigma^{-1}(i)} with
// beta'' in {s_i^n(beta), s_{sigma(i)}^n(beta), s_{sigma^{-1}(i)}^n(beta)},
// sigma = pi(beta).

enum class RightAction { RightMultiplication, InverseLeftMultiplication };
enum class IndexReading { Literal, Sigma, SigmaInverse };

inline constexpr std::array<RightAction, 2> kRightActions{RightAction::RightMultiplication,
                                                          RightAction::InverseLeftMultiplication};
inline constexpr std::array<IndexReading, 3> kIndexReadings{IndexReading::Literal, IndexReading::Sigma,
                                                            IndexReading::SigmaInverse};

inline std::string_view to_string(RightAction a) {
  return a == RightAction::RightMultiplication ? "x*beta" : "beta^-1*x";
}

inline std::string_view to_string(IndexReading r) {
  switch (r) {
    case IndexReading::Literal: return "i";
    case IndexReading::Sigma: return "sigma(i)";
    case IndexReading::SigmaInverse: return "sigma^-1(i)";
  }
  return "?";
}

inline std::size_t read_index(IndexReading r, const Perm& sigma, std::size_t i) {
  switch (r) {
    case IndexReading::Literal: return i;
    case IndexReading::Sigma: return static_cast<std::size_t>(sigma(i));
    case IndexReading::SigmaInverse: return static_cast<std::size_t>(sigma.inverse()(i));
  }
  return i;
}

/// One reading of condition (2): composition index and beta'' degeneracy index.
struct Condition2Reading {
  IndexReading composition;
  IndexReading degeneracy;

  std::string label() const {
    return "mu o_" + std::string(to_string(composition)) + " nu, beta''=s_" + std::string(to_string(degeneracy)) +
           "^n(beta)";
  }
};

inline std::vector<Condition2Reading> all_condition2_readings() {
  std::vector<Condition2Reading> out;
  for (auto c : kIndexReadings) {
    for (auto d : kIndexReadings) out.push_back({c, d});
  }
  return out;
}

template <AmbiContractible I>
typename I::Element right_act(RightAction action, const typename I::Element& x, const typename I::Element& beta) {
  return action == RightAction::RightMultiplication ? I::mul(x, beta) : I::mul(I::inv(beta), x);
}

template <AmbiContractible I>
GroupoidArrow<I> right_act(RightAction action, const GroupoidArrow<I>& x, const typename I::Element& beta) {
  const Perm b = I::underlying_perm(beta);
  if (action == RightAction::RightMultiplication) {
    return {x.source * b, I::mul(I::mul(I::inv(beta), x.f), beta)};
  }
  return {b.inverse() * x.source, x.f};
}

template <class C, AmbiContractible I>
struct GLikeTraits;

template <AmbiContractible I>
struct GLikeTraits<SetCarrier<I>, I> {
  static auto act(RightAction a, const typename I::Element& x, const typename I::Element& b) {
    return right_act<I>(a, x, b);
  }
};

template <AmbiContractible I>
struct GLikeTraits<GpdCarrier<I>, I> {
  static auto act(RightAction a, const GroupoidArrow<I>& x, const typename I::Element& b) {
    return right_act<I>(a, x, b);
  }
};

/// Condition (1) for mu in U(m), nu in U(n), beta in G_n, slot i <= m.
template <class C, AmbiContractible I>
bool g_like_condition1(RightAction action, const typename C::Element& mu, std::size_t i,
                       const typename C::Element& nu, const typename I::Element& beta) {
  const std::size_t m = C::level(mu);
  const auto lhs = C::circ(mu, i, GLikeTraits<C, I>::act(action, nu, beta));
  const auto rhs = GLikeTraits<C, I>::act(action, C::circ(mu, i, nu), pad<I>(beta, i, m - i));
  return C::equal(lhs, rhs);
}

/// Condition (2) for mu in U(m), nu in U(n), beta in G_m, slot i <= m.
template <class C, AmbiContractible I>
bool g_like_condition2(RightAction action, Condition2Reading reading, const typename C::Element& mu, std::size_t i,
                       const typename C::Element& nu, const typename I::Element& beta) {
  const std::size_t n = C::level(nu);
  const Perm sigma = I::underlying_perm(beta);
  const auto lhs = C::circ(GLikeTraits<C, I>::act(action, mu, beta), i, nu);
  const auto beta2 = iterate_degeneracy<I>(read_index(reading.degeneracy, sigma, i), n, beta);
  const auto rhs = GLikeTraits<C, I>::act(action, C::circ(mu, read_index(reading.composition, sigma, i), nu), beta2);
  return C::equal(lhs, rhs);
}

/// Which readings hold on one input. condition1[a] and condition2[a][r] are
/// indexed like kRightActions and all_condition2_readings().
struct GLikeVerdict {
  std::array<bool, 2> condition1{true, true};
  std::array<std::vector<bool>, 2> condition2{std::vector<bool>(9, true), std::vector<bool>(9, true)};

  void merge(const GLikeVerdict& other) {
    for (std::size_t a = 0; a < 2; ++a) {
      condition1[a] = condition1[a] && other.condition1[a];
      for (std::size_t r = 0; r < condition2[a].size(); ++r) {
        condition2[a][r] = condition2[a][r] && other.condition2[a][r];
      }
    }
  }
};

/// Evaluates both conditions, under every action and reading, on
/// mu in U(m), nu in U(n), slot i, with beta1 in G_n for condition (1) and
/// beta2 in G_m for condition (2).
template <class C, AmbiContractible I>
GLikeVerdict check_g_like_equivariance(const typename C::Element& mu, const typename C::Element& nu, std::size_t i,
                                       const typename I::Element& beta1, const typename I::Element& beta2) {
  GLikeVerdict verdict;
  const auto readings = all_condition2_readings();
  for (std::size_t a = 0; a < kRightActions.size(); ++a) {
    verdict.condition1[a] = g_like_condition1<C, I>(kRightActions[a], mu, i, nu, beta1);
    for (std::size_t r = 0; r < readings.size(); ++r) {
      verdict.condition2[a][r] = g_like_condition2<C, I>(kRightActions[a], readings[r], mu, i, nu, beta2);
    }
  }
  return verdict;
}

}  // namespace csg
