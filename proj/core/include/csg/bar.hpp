#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csg/error.hpp"
#include "csg/instance.hpp"

namespace csg {

/// A finite monoid given by its multiplication table. Elements are indices.
class FiniteMonoid {
public:
  /// Throws csg::Error(InvalidElement) unless the table is associative with
  /// two-sided unit `unit`.
  FiniteMonoid(std::vector<std::string> names, std::size_t unit, std::vector<std::vector<std::size_t>> table);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Throws csg::Error(Parse) for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool is_commutative() const;

  /// {"elements": [...], "unit": "e", "table": [[...], ...]} with entries
  /// given by element name.
  static FiniteMonoid from_json(std::string_view text);
  std::string to_json() const;

  /// {e, x, y} with xy = x, yx = y, xx = x, yy = y.
  static FiniteMonoid left_zero_band();
  static FiniteMonoid cyclic_group(std::size_t order);

private:
  std::vector<std::string> names_;
  std::size_t unit_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Every monoid structure on {0, ..., order-1} with unit 0 (labelled, not up
/// to isomorphism).
std::vector<FiniteMonoid> all_monoids(std::size_t order);

/// A point (m_0, ..., m_n) of M^{n+1}.
struct BarTuple {
  std::vector<std::size_t> entries;

  std::size_t level() const { return entries.size() - 1; }
  friend bool operator==(const BarTuple&, const BarTuple&) = default;
  friend auto operator<=>(const BarTuple&, const BarTuple&) = default;
};

std::string to_string(const FiniteMonoid& m, const BarTuple& t);

/// Every tuple at `level`, lexicographically.
std::vector<BarTuple> all_tuples(const FiniteMonoid& m, std::size_t level);

// Cyclic bar operators. Face i < n multiplies m_i m_{i+1}; the last face
// wraps to m_n m_0 at the front, or to m_0 m_n when `reversed_wrap` is set.

BarTuple bar_face(const FiniteMonoid& m, std::size_t i, const BarTuple& t, bool reversed_wrap = false);
/// Inserts the unit after position i.
BarTuple bar_degeneracy(const FiniteMonoid& m, std::size_t i, const BarTuple& t);

/// Result entry i is the entry of t at sigma^{-1}(i); with `inverse` set it is
/// the entry at sigma(i).
BarTuple bar_action(const Perm& sigma, const BarTuple& t, bool inverse = false);

// Covariant operators [n] -> M^{n+1}: the monotone injection missing j
// inserts the unit at j, the surjection hitting j twice multiplies m_j m_{j+1}.

BarTuple bar_insert(const FiniteMonoid& m, std::size_t j, const BarTuple& t);
BarTuple bar_merge(const FiniteMonoid& m, std::size_t j, const BarTuple& t);

/// All simplicial identities among bar_face/bar_degeneracy starting at t.
CheckReport check_bar_simplicial(const FiniteMonoid& m, const BarTuple& t, bool reversed_wrap = false);
/// All cosimplicial identities among bar_insert/bar_merge starting at t.
CheckReport check_bar_cosimplicial(const FiniteMonoid& m, const BarTuple& t);

enum class BarVariance { Contravariant, Covariant };

/// One reading of the G_n-action on [n] -> M^{n+1}.
struct BarConvention {
  BarVariance variance = BarVariance::Contravariant;
  bool inverse_action = false;
  bool reversed_wrap = false;

  std::string label() const;
  friend bool operator==(const BarConvention&, const BarConvention&) = default;
};

/// Calibration order: the four contravariant flips, then the covariant
/// reading with either action.
inline constexpr std::array<BarConvention, 6> kBarConventions{{
    {BarVariance::Contravariant, false, false},
    {BarVariance::Contravariant, true, false},
    {BarVariance::Contravariant, false, true},
    {BarVariance::Contravariant, true, true},
    {BarVariance::Covariant, false, false},
    {BarVariance::Covariant, true, false},
}};

/// The crossed identities for the action of g on t.
///
/// Contravariant (t at the level n of g, any i <= n):
///   d_i(g t) = d_i(g) d_{g^{-1}(i)}(t),   s_i(g t) = s_i(g) s_{g^{-1}(i)}(t).
/// Covariant (i = j <= n; t at level n - 1 for the face identity and at
/// level n + 1 for the degeneracy identity):
///   g insert_{g^{-1}(j)}(t) = insert_j(d_j(g) t),
///   g merge_{g^{-1}(j)}(t) = merge_j(s_j(g) t).
template <CrossedSimplicialGroup I>
CheckReport check_delta_g_object(const FiniteMonoid& m, const typename I::Element& g, const BarTuple& t,
                                 std::size_t i, const BarConvention& conv) {
  const std::size_t n = I::level(g);
  if (i > n) throw_index_out_of_range("check_delta_g_object", i, n);
  const Perm sigma = I::underlying_perm(g);
  const std::size_t at = static_cast<std::size_t>(sigma.inverse()(i));
  const bool inv = conv.inverse_action;
  CheckReport report;
  const std::string idx = " (i=" + std::to_string(i) + ")";
  if (conv.variance == BarVariance::Contravariant) {
    if (t.level() != n) throw_level_mismatch("check_delta_g_object", n, t.level());
    const BarTuple gt = bar_action(sigma, t, inv);
    if (n >= 1) {
      const BarTuple lhs = bar_face(m, i, gt, conv.reversed_wrap);
      const BarTuple rhs = bar_action(I::underlying_perm(I::face(i, g)), bar_face(m, at, t, conv.reversed_wrap), inv);
      report.require(lhs == rhs, "d_i(g x) = d_i(g) d_{g^-1 i}(x)" + idx);
    }
    const BarTuple lhs = bar_degeneracy(m, i, gt);
    const BarTuple rhs = bar_action(I::underlying_perm(I::degeneracy(i, g)), bar_degeneracy(m, at, t), inv);
    report.require(lhs == rhs, "s_i(g x) = s_i(g) s_{g^-1 i}(x)" + idx);
    return report;
  }
  if (t.level() + 1 == n) {
    const BarTuple lhs = bar_action(sigma, bar_insert(m, at, t), inv);
    const BarTuple rhs = bar_insert(m, i, bar_action(I::underlying_perm(I::face(i, g)), t, inv));
    report.require(lhs == rhs, "g insert_{g^-1 j}(x) = insert_j(d_j(g) x)" + idx);
  } else if (t.level() == n + 1) {
    const BarTuple lhs = bar_action(sigma, bar_merge(m, at, t), inv);
    const BarTuple rhs = bar_merge(m, i, bar_action(I::underlying_perm(I::degeneracy(i, g)), t, inv));
    report.require(lhs == rhs, "g merge_{g^-1 j}(x) = merge_j(s_j(g) x)" + idx);
  } else {
    throw_level_mismatch("check_delta_g_object", n + 1, t.level());
  }
  return report;
}

/// g (h t) = (g h) t.
template <CrossedSimplicialGroup I>
CheckReport check_bar_action_axiom(const typename I::Element& g, const typename I::Element& h, const BarTuple& t,
                                   bool inverse_action) {
  CheckReport report;
  const Perm pg = I::underlying_perm(g);
  const Perm ph = I::underlying_perm(h);
  report.require(bar_action(pg, bar_action(ph, t, inverse_action), inverse_action) ==
                     bar_action(pg * ph, t, inverse_action),
                 "g (h x) = (g h) x");
  return report;
}

/// Outcome of one convention in the calibration run.
struct BarCandidate {
  BarConvention convention;
  bool holds = true;
  std::size_t checks = 0;
  std::string counterexample;
};

struct BarCalibration {
  std::vector<BarCandidate> candidates;

  /// The first convention with no counterexample, in calibration order.
  std::optional<BarConvention> surviving() const {
    for (const auto& c : candidates) {
      if (c.holds) return c.convention;
    }
    return std::nullopt;
  }
};

/// Tests every convention against each g and every tuple of the levels the
/// identities need, at every index.
template <CrossedSimplicialGroup I>
BarCalibration calibrate_bar(const FiniteMonoid& m, const std::vector<typename I::Element>& elements) {
  BarCalibration out;
  for (const auto& conv : kBarConventions) {
    BarCandidate cand{conv, true, 0, {}};
    for (const auto& g : elements) {
      const std::size_t n = I::level(g);
      std::vector<std::size_t> levels;
      if (conv.variance == BarVariance::Contravariant) {
        levels = {n};
      } else {
        if (n >= 1) levels.push_back(n - 1);
        levels.push_back(n + 1);
      }
      for (std::size_t lv : levels) {
        for (const auto& t : all_tuples(m, lv)) {
          for (std::size_t i = 0; i <= n; ++i) {
            ++cand.checks;
            const auto r = check_delta_g_object<I>(m, g, t, i, conv);
            if (!r.ok() && cand.holds) {
              cand.holds = false;
              cand.counterexample = r.failures.front() + " at g=" + I::to_string(g) + ", x=" + to_string(m, t);
            }
          }
        }
      }
      if (!cand.holds) break;
    }
    out.candidates.push_back(std::move(cand));
  }
  return out;
}

}  // namespace csg
