#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "csg/error.hpp"
#include "csg/instance.hpp"

namespace csg {

/// A horn over a base simplex: faces y_r at level n - 1 for every r != k,
/// and the base permutation at level n.
template <CrossedSimplicialGroup I>
struct Horn {
  std::size_t n = 0;
  std::size_t k = 0;
  std::map<std::size_t, typename I::Element> faces;
  Perm base;
};

/// g = p s with s = section(pi(g)) and p pure.
template <Sectioned I>
struct SectionedDecomposition {
  typename I::Element p;
  typename I::Element s;
};

template <CrossedSimplicialGroup I>
bool is_pure(const typename I::Element& g) {
  return I::underlying_perm(g).is_identity();
}

template <Sectioned I>
SectionedDecomposition<I> decompose(const typename I::Element& g) {
  auto s = I::section(I::underlying_perm(g));
  auto p = I::mul(g, I::inv(s));
  return {std::move(p), std::move(s)};
}

/// The horn obtained by deleting face k of a known filler.
template <CrossedSimplicialGroup I>
Horn<I> horn_from_filler(const typename I::Element& filler, std::size_t k) {
  const std::size_t n = I::level(filler);
  if (n == 0) throw_index_out_of_range("horn_from_filler", 0, 0);
  if (k > n) throw_index_out_of_range("horn_from_filler", k, n);
  Horn<I> h{n, k, {}, I::underlying_perm(filler)};
  for (std::size_t r = 0; r <= n; ++r) {
    if (r != k) h.faces.emplace(r, I::face(r, filler));
  }
  return h;
}

/// Returns an empty string when the horn is well formed, otherwise the first
/// violated equation.
template <CrossedSimplicialGroup I>
std::string horn_violation(const Horn<I>& h) {
  if (h.n == 0) return "horn level must be at least 1";
  if (h.k > h.n) return "missing index k=" + std::to_string(h.k) + " exceeds level " + std::to_string(h.n);
  if (h.base.level() != h.n) return "base has level " + std::to_string(h.base.level()) + ", expected " + std::to_string(h.n);
  for (std::size_t r = 0; r <= h.n; ++r) {
    if (r == h.k) continue;
    const auto it = h.faces.find(r);
    if (it == h.faces.end()) return "face y_" + std::to_string(r) + " is missing";
    if (I::level(it->second) + 1 != h.n) return "face y_" + std::to_string(r) + " has the wrong level";
  }
  if (h.faces.size() != h.n) return "horn has a face at the missing index";
  for (const auto& [r, y] : h.faces) {
    if (I::underlying_perm(y) != face_perm(r, h.base)) {
      return "pi(y_" + std::to_string(r) + ") = d_" + std::to_string(r) + "(base)";
    }
  }
  if (h.n >= 2) {
    for (const auto& [t, yt] : h.faces) {
      for (const auto& [r, yr] : h.faces) {
        if (r >= t) break;
        if (!I::equal(I::face(r, yt), I::face(t - 1, yr))) {
          return "d_" + std::to_string(r) + "(y_" + std::to_string(t) + ") = d_" + std::to_string(t - 1) + "(y_" +
                 std::to_string(r) + ")";
        }
      }
    }
  }
  return {};
}

template <CrossedSimplicialGroup I>
void validate_horn(const Horn<I>& h) {
  if (auto v = horn_violation<I>(h); !v.empty()) throw Error(ErrorKind::IncompatibleHorn, "incompatible horn: " + v);
}

/// Two-sweep degeneracy filler in the kernel simplicial group. The faces p_r
/// (r != k) must be pure and compatible; the result is checked against every
/// face equation before it is returned.
template <CrossedSimplicialGroup I>
typename I::Element moore_fill(const std::map<std::size_t, typename I::Element>& p, std::size_t n, std::size_t k) {
  if (n == 0) throw_index_out_of_range("moore_fill", 0, 0);
  if (k > n) throw_index_out_of_range("moore_fill", k, n);
  auto w = I::one(n);
  auto face_of = [&](std::size_t r) -> const typename I::Element& {
    const auto it = p.find(r);
    if (it == p.end()) throw Error(ErrorKind::IncompatibleHorn, "moore_fill: face " + std::to_string(r) + " missing");
    return it->second;
  };
  for (std::size_t r = 0; r < k; ++r) {
    w = I::mul(w, I::degeneracy(r, I::mul(I::inv(I::face(r, w)), face_of(r))));
  }
  for (std::size_t r = n; r > k; --r) {
    w = I::mul(w, I::degeneracy(r - 1, I::mul(I::inv(I::face(r, w)), face_of(r))));
  }
  if (!is_pure<I>(w)) throw Error(ErrorKind::FillerFailure, "moore_fill: filler is not pure");
  for (std::size_t r = 0; r <= n; ++r) {
    if (r != k && !I::equal(I::face(r, w), face_of(r))) {
      throw Error(ErrorKind::FillerFailure, "moore_fill: d_" + std::to_string(r) + "(p) != p_" + std::to_string(r));
    }
  }
  return w;
}

/// Phi = p . section(base), where p fills the horn of kernel parts
/// p_r = y_r . d_r(section(base))^{-1}.
template <Sectioned I>
typename I::Element lift_horn(const Horn<I>& h) {
  validate_horn<I>(h);
  const auto s = I::section(h.base);
  std::map<std::size_t, typename I::Element> kernel;
  for (const auto& [r, y] : h.faces) {
    auto pr = I::mul(y, I::inv(I::face(r, s)));
    if (!is_pure<I>(pr)) {
      throw Error(ErrorKind::IncompatibleHorn, "kernel part p_" + std::to_string(r) + " is not pure");
    }
    kernel.emplace(r, std::move(pr));
  }
  auto phi = I::mul(moore_fill<I>(kernel, h.n, h.k), s);
  for (const auto& [r, y] : h.faces) {
    if (!I::equal(I::face(r, phi), y)) {
      throw Error(ErrorKind::FillerFailure, "lift_horn: d_" + std::to_string(r) + "(Phi) != y_" + std::to_string(r));
    }
  }
  if (I::underlying_perm(phi) != h.base) throw Error(ErrorKind::FillerFailure, "lift_horn: pi(Phi) != base");
  return phi;
}

/// Every face equation and the projection equation for a candidate lift.
template <CrossedSimplicialGroup I>
CheckReport check_lift(const Horn<I>& h, const typename I::Element& phi) {
  CheckReport report;
  for (const auto& [r, y] : h.faces) {
    report.require(I::equal(I::face(r, phi), y), "d_" + std::to_string(r) + "(Phi) = y_" + std::to_string(r));
  }
  report.require(I::underlying_perm(phi) == h.base, "pi(Phi) = base");
  return report;
}

}  // namespace csg
