#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csg/instance.hpp"

namespace csg {

/// Arrow [sigma, f] of the action groupoid G_n // P_n, from sigma to
/// sigma * pi(f)^{-1}. Objects are permutations; only the source is stored.
template <CrossedSimplicialGroup I>
struct GroupoidArrow {
  Perm source;
  typename I::Element f;

  std::size_t level() const { return source.level(); }
  Perm target() const { return source * I::underlying_perm(f).inverse(); }
  std::string to_string() const { return "[" + source.to_string() + ", " + I::to_string(f) + "]"; }
};

template <CrossedSimplicialGroup I>
GroupoidArrow<I> make_arrow(Perm source, typename I::Element f) {
  if (source.level() != I::level(f)) throw_level_mismatch("arrow", source.level(), I::level(f));
  return {std::move(source), std::move(f)};
}

template <CrossedSimplicialGroup I>
GroupoidArrow<I> identity_arrow(const Perm& object) {
  return {object, I::one(object.level())};
}

template <CrossedSimplicialGroup I>
GroupoidArrow<I> inverse_arrow(const GroupoidArrow<I>& a) {
  return {a.target(), I::inv(a.f)};
}

template <CrossedSimplicialGroup I>
bool arrows_equal(const GroupoidArrow<I>& a, const GroupoidArrow<I>& b) {
  return a.source == b.source && I::equal(a.f, b.f);
}

/// b . a = [source(a), f_b f_a]; requires target(a) == source(b).
template <CrossedSimplicialGroup I>
GroupoidArrow<I> compose_arrows(const GroupoidArrow<I>& b, const GroupoidArrow<I>& a) {
  if (a.target() != b.source) {
    throw Error(ErrorKind::NotComposable,
                "compose: target " + a.target().to_string() + " != source " + b.source.to_string());
  }
  return {a.source, I::mul(b.f, a.f)};
}

/// d_i[sigma, f] = [d_i(sigma), d_{sigma^{-1}(i)}(f^{-1})^{-1}].
template <CrossedSimplicialGroup I>
GroupoidArrow<I> face_arrow(std::size_t i, const GroupoidArrow<I>& a) {
  const std::size_t n = a.level();
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "face: level 0 has no faces");
  if (i > n) throw_index_out_of_range("face_arrow", i, n);
  const auto at = static_cast<std::size_t>(a.source.inverse()(i));
  return {face_perm(i, a.source), I::inv(I::face(at, I::inv(a.f)))};
}

/// s_i[sigma, f] = [s_i(sigma), s_{sigma^{-1}(i)}(f^{-1})^{-1}].
template <CrossedSimplicialGroup I>
GroupoidArrow<I> degeneracy_arrow(std::size_t i, const GroupoidArrow<I>& a) {
  const std::size_t n = a.level();
  if (i > n) throw_index_out_of_range("degeneracy_arrow", i, n);
  const auto at = static_cast<std::size_t>(a.source.inverse()(i));
  return {degeneracy_perm(i, a.source), I::inv(I::degeneracy(at, I::inv(a.f)))};
}

/// tau . [sigma, f] = [tau sigma, f].
template <CrossedSimplicialGroup I>
GroupoidArrow<I> n_action(const Perm& tau, const GroupoidArrow<I>& a) {
  if (tau.level() != a.level()) throw_level_mismatch("n_action", tau.level(), a.level());
  return {tau * a.source, a.f};
}

/// An arrow is an automorphism of its source iff f is pure.
template <CrossedSimplicialGroup I>
bool is_automorphism(const GroupoidArrow<I>& a) {
  return I::underlying_perm(a.f).is_identity();
}

/// Some arrow from `from` to `to`, built from the section of the projection.
template <Sectioned I>
GroupoidArrow<I> connecting_arrow(const Perm& from, const Perm& to) {
  if (from.level() != to.level()) throw_level_mismatch("connecting_arrow", from.level(), to.level());
  return {from, I::section(to.inverse() * from)};
}

/// Face and degeneracy maps are functors: they preserve identities and the
/// composite b . a.
template <CrossedSimplicialGroup I>
CheckReport check_gamma_functoriality(const GroupoidArrow<I>& b, const GroupoidArrow<I>& a) {
  CheckReport report;
  const auto ba = compose_arrows<I>(b, a);
  const std::size_t n = a.level();
  for (std::size_t i = 0; i <= n; ++i) {
    const std::string idx = " (i=" + std::to_string(i) + ")";
    if (n >= 1) {
      const auto da = face_arrow<I>(i, a);
      const auto db = face_arrow<I>(i, b);
      report.require(da.target() == face_perm(i, a.target()), "cod d_i[s,f] = d_i cod" + idx);
      report.require(db.source == da.target() && arrows_equal<I>(face_arrow<I>(i, ba), compose_arrows<I>(db, da)),
                     "d_i(b a) = d_i(b) d_i(a)" + idx);
      report.require(arrows_equal<I>(face_arrow<I>(i, identity_arrow<I>(a.source)),
                                     identity_arrow<I>(face_perm(i, a.source))),
                     "d_i(id) = id" + idx);
    }
    const auto sa = degeneracy_arrow<I>(i, a);
    const auto sb = degeneracy_arrow<I>(i, b);
    report.require(sa.target() == degeneracy_perm(i, a.target()), "cod s_i[s,f] = s_i cod" + idx);
    report.require(sb.source == sa.target() && arrows_equal<I>(degeneracy_arrow<I>(i, ba), compose_arrows<I>(sb, sa)),
                   "s_i(b a) = s_i(b) s_i(a)" + idx);
    report.require(arrows_equal<I>(degeneracy_arrow<I>(i, identity_arrow<I>(a.source)),
                                   identity_arrow<I>(degeneracy_perm(i, a.source))),
                   "s_i(id) = id" + idx);
  }
  return report;
}

/// The five families of simplicial identities on Gamma_*, starting at a.
template <CrossedSimplicialGroup I>
CheckReport check_gamma_simplicial(const GroupoidArrow<I>& a) {
  const std::size_t n = a.level();
  CheckReport report;
  auto eq = [](const GroupoidArrow<I>& x, const GroupoidArrow<I>& y) { return arrows_equal<I>(x, y); };
  auto label = [](const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  if (n >= 2) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        report.require(eq(face_arrow<I>(i, face_arrow<I>(j, a)), face_arrow<I>(j - 1, face_arrow<I>(i, a))),
                       label("d_i d_j = d_{j-1} d_i", i, j));
      }
    }
  }
  for (std::size_t j = 0; j <= n; ++j) {
    const auto sj = degeneracy_arrow<I>(j, a);
    for (std::size_t i = 0; i <= n + 1; ++i) {
      const auto lhs = face_arrow<I>(i, sj);
      if (i < j) {
        report.require(eq(lhs, degeneracy_arrow<I>(j - 1, face_arrow<I>(i, a))), label("d_i s_j = s_{j-1} d_i", i, j));
      } else if (i == j || i == j + 1) {
        report.require(eq(lhs, a), label("d_i s_j = id", i, j));
      } else {
        report.require(eq(lhs, degeneracy_arrow<I>(j, face_arrow<I>(i - 1, a))), label("d_i s_j = s_j d_{i-1}", i, j));
      }
    }
    for (std::size_t i = 0; i <= j; ++i) {
      report.require(eq(degeneracy_arrow<I>(i, sj), degeneracy_arrow<I>(j + 1, degeneracy_arrow<I>(i, a))),
                     label("s_i s_j = s_{j+1} s_i", i, j));
    }
  }
  return report;
}

/// Face and degeneracy identities for the left N_n-action:
///   d_i(tau x) = d_i(tau) d_{tau^{-1}(i)}(x),  s_i(tau x) = s_i(tau) s_{tau^{-1}(i)}(x).
template <CrossedSimplicialGroup I>
CheckReport check_n_action(const Perm& tau, const GroupoidArrow<I>& a) {
  const std::size_t n = a.level();
  CheckReport report;
  const auto moved = n_action<I>(tau, a);
  report.require(arrows_equal<I>(n_action<I>(Perm::identity(n), a), a), "1 x = x");
  for (std::size_t i = 0; i <= n; ++i) {
    const auto at = static_cast<std::size_t>(tau.inverse()(i));
    const std::string idx = " (i=" + std::to_string(i) + ")";
    if (n >= 1) {
      report.require(arrows_equal<I>(face_arrow<I>(i, moved), n_action<I>(face_perm(i, tau), face_arrow<I>(at, a))),
                     "d_i(tau x) = d_i(tau) d_{tau^-1 i}(x)" + idx);
    }
    report.require(
        arrows_equal<I>(degeneracy_arrow<I>(i, moved), n_action<I>(degeneracy_perm(i, tau), degeneracy_arrow<I>(at, a))),
        "s_i(tau x) = s_i(tau) s_{tau^-1 i}(x)" + idx);
  }
  return report;
}

/// m-simplex of the nerve of Gamma_n: a start object and arrows f_1, ..., f_m,
/// representing [o_{m-1}, f_m] ... [o_1, f_2] [o_0, f_1] with o_0 = start.
template <CrossedSimplicialGroup I>
struct NerveSimplex {
  Perm start;
  std::vector<typename I::Element> chain;

  std::size_t dimension() const { return chain.size(); }

  /// o_0, ..., o_m.
  std::vector<Perm> objects() const {
    std::vector<Perm> out{start};
    for (const auto& f : chain) out.push_back(out.back() * I::underlying_perm(f).inverse());
    return out;
  }

  std::vector<GroupoidArrow<I>> arrows() const {
    std::vector<GroupoidArrow<I>> out;
    Perm at = start;
    for (const auto& f : chain) {
      out.push_back({at, f});
      at = out.back().target();
    }
    return out;
  }
};

template <CrossedSimplicialGroup I>
bool simplices_equal(const NerveSimplex<I>& a, const NerveSimplex<I>& b) {
  if (a.start != b.start || a.chain.size() != b.chain.size()) return false;
  for (std::size_t r = 0; r < a.chain.size(); ++r) {
    if (!I::equal(a.chain[r], b.chain[r])) return false;
  }
  return true;
}

template <CrossedSimplicialGroup I>
NerveSimplex<I> nerve_face(std::size_t i, const NerveSimplex<I>& s) {
  const std::size_t m = s.dimension();
  if (m == 0) throw Error(ErrorKind::IndexOutOfRange, "nerve_face: dimension 0 has no faces");
  if (i > m) throw_index_out_of_range("nerve_face", i, m);
  NerveSimplex<I> out{s.start, {}};
  if (i == 0) {
    out.start = s.objects()[1];
    out.chain.assign(s.chain.begin() + 1, s.chain.end());
  } else if (i == m) {
    out.chain.assign(s.chain.begin(), s.chain.end() - 1);
  } else {
    const auto arrows = s.arrows();
    for (std::size_t r = 0; r < m; ++r) {
      if (r + 1 == i) {
        out.chain.push_back(compose_arrows<I>(arrows[r + 1], arrows[r]).f);
        ++r;
      } else {
        out.chain.push_back(s.chain[r]);
      }
    }
  }
  return out;
}

template <CrossedSimplicialGroup I>
NerveSimplex<I> nerve_degeneracy(std::size_t i, const NerveSimplex<I>& s) {
  const std::size_t m = s.dimension();
  if (i > m) throw_index_out_of_range("nerve_degeneracy", i, m);
  NerveSimplex<I> out = s;
  out.chain.insert(out.chain.begin() + static_cast<std::ptrdiff_t>(i), I::one(s.start.level()));
  return out;
}

/// tau acting on every object of the chain.
template <CrossedSimplicialGroup I>
NerveSimplex<I> nerve_n_action(const Perm& tau, const NerveSimplex<I>& s) {
  return {tau * s.start, s.chain};
}

/// True iff tau . a = b for some tau; the only candidate is b.start a.start^{-1}.
template <CrossedSimplicialGroup I>
bool same_orbit(const NerveSimplex<I>& a, const NerveSimplex<I>& b) {
  if (a.start.level() != b.start.level()) return false;
  return simplices_equal<I>(nerve_n_action<I>(b.start * a.start.inverse(), a), b);
}

/// Forgets the start object: (f_m, ..., f_1).
template <CrossedSimplicialGroup I>
std::vector<typename I::Element> quotient_map(const NerveSimplex<I>& s) {
  return {s.chain.rbegin(), s.chain.rend()};
}

/// Nerve of the opposite group on tuples (h_1, ..., h_m): d_0 and d_m drop an
/// end entry, inner d_j replaces (h_j, h_{j+1}) by h_j h_{j+1}, s_j inserts 1
/// after h_j.
template <CrossedSimplicialGroup I>
std::vector<typename I::Element> op_nerve_face(std::size_t j, const std::vector<typename I::Element>& t) {
  const std::size_t m = t.size();
  if (m == 0) throw Error(ErrorKind::IndexOutOfRange, "op_nerve_face: dimension 0 has no faces");
  if (j > m) throw_index_out_of_range("op_nerve_face", j, m);
  if (j == 0) return {t.begin() + 1, t.end()};
  if (j == m) return {t.begin(), t.end() - 1};
  std::vector<typename I::Element> out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j - 1));
  out.push_back(I::mul(t[j - 1], t[j]));
  out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(j + 1), t.end());
  return out;
}

template <CrossedSimplicialGroup I>
std::vector<typename I::Element> op_nerve_degeneracy(std::size_t j, const std::vector<typename I::Element>& t,
                                                     std::size_t level) {
  if (j > t.size()) throw_index_out_of_range("op_nerve_degeneracy", j, t.size());
  std::vector<typename I::Element> out = t;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(j), I::one(level));
  return out;
}

template <CrossedSimplicialGroup I>
bool tuples_equal(const std::vector<typename I::Element>& a, const std::vector<typename I::Element>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!I::equal(a[r], b[r])) return false;
  }
  return true;
}

/// The quotient map intertwines the nerve operators of N(Gamma_n) with those
/// of N(G_n^op) under the order reversal j -> m - j that the reversed tuple
/// (f_m, ..., f_1) induces.
template <CrossedSimplicialGroup I>
CheckReport check_quotient_simplicial(const NerveSimplex<I>& s) {
  CheckReport report;
  const std::size_t m = s.dimension();
  const std::size_t n = s.start.level();
  const auto image = quotient_map<I>(s);
  for (std::size_t j = 0; j <= m; ++j) {
    const std::string idx = " (j=" + std::to_string(j) + ")";
    if (m >= 1) {
      report.require(tuples_equal<I>(quotient_map<I>(nerve_face<I>(j, s)), op_nerve_face<I>(m - j, image)),
                     "q d_j = d_{m-j} q" + idx);
    }
    report.require(tuples_equal<I>(quotient_map<I>(nerve_degeneracy<I>(j, s)), op_nerve_degeneracy<I>(m - j, image, n)),
                   "q s_j = s_{m-j} q" + idx);
  }
  return report;
}

/// Simplicial identities of the nerve of Gamma_n at s.
template <CrossedSimplicialGroup I>
CheckReport check_nerve_simplicial(const NerveSimplex<I>& s) {
  CheckReport report;
  const std::size_t m = s.dimension();
  auto eq = [](const NerveSimplex<I>& a, const NerveSimplex<I>& b) { return simplices_equal<I>(a, b); };
  auto label = [](const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  };
  if (m >= 2) {
    for (std::size_t j = 1; j <= m; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        report.require(eq(nerve_face<I>(i, nerve_face<I>(j, s)), nerve_face<I>(j - 1, nerve_face<I>(i, s))),
                       label("d_i d_j = d_{j-1} d_i", i, j));
      }
    }
  }
  for (std::size_t j = 0; j <= m; ++j) {
    const auto sj = nerve_degeneracy<I>(j, s);
    for (std::size_t i = 0; i <= m + 1; ++i) {
      const auto lhs = nerve_face<I>(i, sj);
      if (i < j) {
        report.require(eq(lhs, nerve_degeneracy<I>(j - 1, nerve_face<I>(i, s))), label("d_i s_j = s_{j-1} d_i", i, j));
      } else if (i == j || i == j + 1) {
        report.require(eq(lhs, s), label("d_i s_j = id", i, j));
      } else {
        report.require(eq(lhs, nerve_degeneracy<I>(j, nerve_face<I>(i - 1, s))), label("d_i s_j = s_j d_{i-1}", i, j));
      }
    }
    for (std::size_t i = 0; i <= j; ++i) {
      report.require(eq(nerve_degeneracy<I>(i, sj), nerve_degeneracy<I>(j + 1, nerve_degeneracy<I>(i, s))),
                     label("s_i s_j = s_{j+1} s_i", i, j));
    }
  }
  return report;
}

}  // namespace csg
