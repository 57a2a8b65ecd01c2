#include "csg/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "csg/braid.hpp"
#include "csg/groupoid.hpp"
#include "csg/kan.hpp"
#include "csg/random.hpp"
#include "csg/symmetric.hpp"

namespace csg {

namespace {

template <class I>
using Elem = typename I::Element;

// Element sources for the drivers: full enumeration for the symmetric
// instance, seeded draws for the braid instance.

template <class I>
struct Elements {
  using T = Elem<I>;
  static std::vector<T> all(std::size_t n) {
    if constexpr (std::is_same_v<I, Symmetric>) {
      return all_perms(n);
    } else {
      return {};
    }
  }
  static T draw(Rng& rng, std::size_t n, std::size_t len) { return RandomElement<I>::draw(rng, n, len); }
  static std::string show(const T& x) { return I::to_string(x); }
};

template <class I>
struct Arrows {
  using T = GroupoidArrow<I>;
  static std::vector<T> all(std::size_t n) {
    std::vector<T> out;
    for (const auto& s : all_perms(n)) {
      for (const auto& f : Elements<I>::all(n)) out.push_back({s, f});
    }
    return out;
  }
  static T draw(Rng& rng, std::size_t n, std::size_t len) {
    Perm s = rng.perm(n);
    return {std::move(s), RandomElement<I>::draw(rng, n, len)};
  }
  static std::string show(const T& x) { return x.to_string(); }
};

template <class I>
class Driver {
public:
  static constexpr bool kExhaustive = std::is_same_v<I, Symmetric>;

  Driver(const SuiteOptions& opt, SuiteReport& rep) : opt_(opt), rep_(rep), rng_(opt.seed) {}

  Rng& rng() { return rng_; }
  const SuiteOptions& options() const { return opt_; }
  std::size_t trials() const { return opt_.trials; }
  std::size_t word_length() const { return opt_.word_length; }

  void record(const CheckReport& r, const std::function<std::string()>& input) {
    ++rep_.checks;
    if (r.ok()) return;
    const std::string in = input();
    for (const auto& f : r.failures) rep_.counterexamples.push_back({f, in});
  }

  void note(std::string key, std::string value) { rep_.verdict.emplace_back(std::move(key), std::move(value)); }

  // Every x at levels lo..min(hi, cap) for the symmetric instance; `trials`
  // draws at levels lo..hi otherwise, or when hi exceeds the cap.
  template <class G, class F>
  void each1(std::size_t lo, std::size_t hi, std::size_t cap, F f) {
    if constexpr (kExhaustive) {
      for (std::size_t n = lo; n <= std::min(hi, cap); ++n) {
        for (const auto& x : G::all(n)) f(x);
      }
      if (hi <= cap) return;
    }
    for (std::size_t t = 0; t < opt_.trials; ++t) f(G::draw(rng_, rng_.between(lo, hi), opt_.word_length));
  }

  // Pairs at one common level.
  template <class G, class H, class F>
  void each2_same(std::size_t lo, std::size_t hi, std::size_t cap, F f) {
    if constexpr (kExhaustive) {
      for (std::size_t n = lo; n <= std::min(hi, cap); ++n) {
        const auto xs = G::all(n);
        const auto ys = H::all(n);
        for (const auto& x : xs) {
          for (const auto& y : ys) f(x, y);
        }
      }
      if (hi <= cap) return;
    }
    for (std::size_t t = 0; t < opt_.trials; ++t) {
      const std::size_t n = rng_.between(lo, hi);
      auto x = G::draw(rng_, n, opt_.word_length);
      auto y = H::draw(rng_, n, opt_.word_length);
      f(x, y);
    }
  }

  // Pairs at independent levels.
  template <class G, class H, class F>
  void each2(std::size_t lo, std::size_t hi, std::size_t cap, F f) {
    if constexpr (kExhaustive) {
      const std::size_t top = std::min(hi, cap);
      for (std::size_t n = lo; n <= top; ++n) {
        const auto xs = G::all(n);
        for (std::size_t m = lo; m <= top; ++m) {
          const auto ys = H::all(m);
          for (const auto& x : xs) {
            for (const auto& y : ys) f(x, y);
          }
        }
      }
      if (hi <= cap) return;
    }
    for (std::size_t t = 0; t < opt_.trials; ++t) {
      auto x = G::draw(rng_, rng_.between(lo, hi), opt_.word_length);
      auto y = H::draw(rng_, rng_.between(lo, hi), opt_.word_length);
      f(x, y);
    }
  }

  // Triples at independent levels.
  template <class G, class F>
  void each3(std::size_t lo, std::size_t hi, std::size_t cap, F f) {
    if constexpr (kExhaustive) {
      const std::size_t top = std::min(hi, cap);
      std::vector<typename G::T> pool;
      for (std::size_t n = lo; n <= top; ++n) {
        for (auto& x : G::all(n)) pool.push_back(std::move(x));
      }
      for (const auto& x : pool) {
        for (const auto& y : pool) {
          for (const auto& z : pool) f(x, y, z);
        }
      }
      if (hi <= cap) return;
    }
    for (std::size_t t = 0; t < opt_.trials; ++t) {
      auto x = G::draw(rng_, rng_.between(lo, hi), opt_.word_length);
      auto y = G::draw(rng_, rng_.between(lo, hi), opt_.word_length);
      auto z = G::draw(rng_, rng_.between(lo, hi), opt_.word_length);
      f(x, y, z);
    }
  }

  // Elements that pair with x: all of level n, or one draw.
  template <class G>
  std::vector<typename G::T> partners(std::size_t n) {
    if constexpr (kExhaustive) {
      return G::all(n);
    } else {
      return {G::draw(rng_, n, opt_.word_length)};
    }
  }

  std::vector<Perm> perms(std::size_t n) {
    if constexpr (kExhaustive) {
      return all_perms(n);
    } else {
      return {rng_.perm(n)};
    }
  }

private:
  const SuiteOptions& opt_;
  SuiteReport& rep_;
  Rng rng_;
};

template <class I>
std::string show(const Elem<I>& x) {
  return I::to_string(x);
}

std::string idx(std::size_t i) { return std::to_string(i); }

// Exhaustive caps for the symmetric instance, chosen so that every suite at
// its default level finishes in seconds.
constexpr std::size_t kPairCap = 3;
constexpr std::size_t kTripleCap = 3;
constexpr std::size_t kArrowCap = 3;
constexpr std::size_t kArrowPairCap = 2;
constexpr std::size_t kArrowTripleCap = 2;

template <class I>
void suite_crossed(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  d.template each2_same<Elements<I>, Elements<I>>(0, top, kPairCap, [&](const auto& g, const auto& h) {
    for (std::size_t i = 0; i <= I::level(g); ++i) {
      d.record(check_crossed_identities<I>(g, h, i),
               [&] { return "g=" + show<I>(g) + " h=" + show<I>(h) + " i=" + idx(i); });
    }
    d.record(check_group_axioms<I>(g, h, I::mul(h, g)), [&] { return "g=" + show<I>(g) + " h=" + show<I>(h); });
  });
  // Faces and degeneracies restricted to pure elements are homomorphisms.
  if constexpr (Sectioned<I>) {
    d.template each2_same<Elements<I>, Elements<I>>(0, top, kPairCap, [&](const auto& g, const auto& h) {
      const auto p = decompose<I>(g).p;
      const auto q = decompose<I>(h).p;
      for (std::size_t i = 0; i <= I::level(g); ++i) {
        d.record(check_kernel_homomorphism<I>(p, q, i),
                 [&] { return "p=" + show<I>(p) + " q=" + show<I>(q) + " i=" + idx(i); });
      }
    });
  }
}

template <class I>
void suite_simplicial(Driver<I>& d) {
  d.template each2_same<Elements<I>, Elements<I>>(0, d.options().max_level, kPairCap, [&](const auto& g, const auto& h) {
    d.record(check_simplicial_identities<I>(g), [&] { return "g=" + show<I>(g); });
    d.record(check_projection<I>(g, h), [&] { return "g=" + show<I>(g) + " h=" + show<I>(h); });
  });
}

template <class I>
void suite_extra_degeneracy(Driver<I>& d) {
  d.template each2_same<Elements<I>, Elements<I>>(0, d.options().max_level, kPairCap, [&](const auto& g, const auto& h) {
    d.record(check_extra_degeneracy<I>(g), [&] { return "g=" + show<I>(g); });
    d.record(check_contraction_homomorphism<I>(g, h), [&] { return "g=" + show<I>(g) + " h=" + show<I>(h); });
  });
}

template <class I>
void suite_monoidal(Driver<I>& d) {
  d.template each2<Elements<I>, Elements<I>>(0, d.options().max_level, kPairCap, [&](const auto& g, const auto& h) {
    d.record(check_monoidal<I>(g, h), [&] { return "g=" + show<I>(g) + " h=" + show<I>(h); });
  });
}

template <class I>
void suite_operadic(Driver<I>& d) {
  d.template each2<Elements<I>, Elements<I>>(0, d.options().max_level, kPairCap, [&](const auto& g, const auto& h) {
    for (std::size_t i = 0; i <= I::level(g); ++i) {
      d.record(check_operadic<I>(g, h, i), [&] { return "g=" + show<I>(g) + " h=" + show<I>(h) + " i=" + idx(i); });
    }
  });
}

// Case splits for inverse images in S_*; braid inputs are read through pi.
template <class I>
void suite_preimages(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  d.template each1<Elements<I>>(1, std::max<std::size_t>(top, 1), top, [&](const auto& g) {
    const Perm s = I::underlying_perm(g);
    const std::size_t n = s.level();
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        CheckReport r;
        r.require(preimage_case1(s, i, j), "item 1");
        r.require(preimage_case2(s, i, j), "item 2");
        r.require(preimage_case3(s, i, j), "item 3");
        r.require(preimage_case5(s, i, j), "item 5");
        d.record(r, [&] { return "sigma=" + s.to_string() + " i=" + idx(i) + " j=" + idx(j); });
      }
    }
  });
  const std::size_t top4 = std::min<std::size_t>(top, 2);
  d.template each2<Elements<I>, Elements<I>>(0, top4, top4, [&](const auto& g, const auto& h) {
    const Perm s = I::underlying_perm(g);
    const Perm t = I::underlying_perm(h);
    for (std::size_t i = 0; i <= s.level(); ++i) {
      for (std::size_t j = 0; j <= t.level(); ++j) {
        CheckReport r;
        r.require(preimage_case4(s, t, i, j), "item 4");
        d.record(r, [&] { return "sigma=" + s.to_string() + " tau=" + t.to_string() + " i=" + idx(i) + " j=" + idx(j); });
      }
    }
  });
}

template <class I>
void suite_gamma_simplicial(Driver<I>& d) {
  d.template each1<Arrows<I>>(0, d.options().max_level, kArrowCap, [&](const GroupoidArrow<I>& a) {
    const std::size_t n = a.level();
    d.record(check_gamma_simplicial<I>(a), [&] { return "a=" + a.to_string(); });
    for (const auto& f : d.template partners<Elements<I>>(n)) {
      const GroupoidArrow<I> b{a.target(), f};
      d.record(check_gamma_functoriality<I>(b, a), [&] { return "b=" + b.to_string() + " a=" + a.to_string(); });
    }
    for (const auto& tau : d.perms(n)) {
      CheckReport r = check_n_action<I>(tau, a);
      const Perm tau2 = d.rng().perm(n);
      r.require(arrows_equal<I>(n_action<I>(tau2, n_action<I>(tau, a)), n_action<I>(tau2 * tau, a)),
                "tau'(tau x) = (tau' tau) x");
      d.record(r, [&] { return "tau=" + tau.to_string() + " tau'=" + tau2.to_string() + " a=" + a.to_string(); });
    }
  });
}

template <class I>
void suite_shifted_operad(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  // Oracle comparison with the block picture.
  d.template each2<Elements<I>, Elements<I>>(0, top, kPairCap, [&](const auto& a, const auto& b) {
    for (std::size_t i = 0; i <= I::level(a); ++i) {
      CheckReport r;
      const Perm pa = I::underlying_perm(a);
      const Perm pb = I::underlying_perm(b);
      r.require(I::underlying_perm(circ_set<I>(a, i, b)) == block_substitute(pa, i, pb), "pi(a o_i b) = block_substitute");
      const std::size_t m = pb.level();
      for (std::size_t j = 0; j <= m; ++j) {
        r.require(static_cast<std::size_t>(I::underlying_perm(circ_set<I>(a, i, b)).inverse()(i + j)) ==
                      static_cast<std::size_t>(pa.inverse()(i) + pb.inverse()(j)),
                  "(a o_i b)^-1(i+j) = a^-1(i) + b^-1(j)");
      }
      d.record(r, [&] { return "a=" + show<I>(a) + " b=" + show<I>(b) + " i=" + idx(i); });
    }
  });
  d.template each3<Elements<I>>(0, top, kTripleCap, [&](const auto& l, const auto& m, const auto& n) {
    d.record(check_shifted_axioms<SetCarrier<I>>(l, m, n),
             [&] { return "set: l=" + show<I>(l) + " m=" + show<I>(m) + " n=" + show<I>(n); });
  });
  d.template each3<Arrows<I>>(0, top, kArrowTripleCap, [&](const auto& l, const auto& m, const auto& n) {
    d.record(check_shifted_axioms<GpdCarrier<I>>(l, m, n),
             [&] { return "groupoid: l=" + l.to_string() + " m=" + m.to_string() + " n=" + n.to_string(); });
  });
}

template <class C, class G, class I>
void unshifted_on(Driver<I>& d, std::size_t top, std::size_t cap, const char* tag) {
  using U = Unshifted<C>;
  auto lift = [](const typename G::T& x) { return U::of(x); };
  d.template each3<G>(0, top, cap, [&](const auto& l, const auto& m, const auto& n) {
    const U ul = lift(l), um = lift(m), un = lift(n);
    auto in = [&] { return std::string(tag) + ": l=" + ul.to_string() + " m=" + um.to_string() + " n=" + un.to_string(); };
    d.record(check_unshifted_axioms<C>(ul, um, un), in);
    d.record(check_unshifted_axioms<C>(ul, U::star(), un), in);
    d.record(check_unshifted_axioms<C>(ul, um, U::star()), in);
  });
}

template <class I>
void suite_unshifted_operad(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  unshifted_on<SetCarrier<I>, Elements<I>>(d, top, kTripleCap, "set");
  unshifted_on<GpdCarrier<I>, Arrows<I>>(d, top, kArrowTripleCap, "groupoid");
}

template <class I>
void suite_operadic_mult(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  d.template each2<Elements<I>, Elements<I>>(0, top, std::min<std::size_t>(kPairCap, 2), [&](const auto& a, const auto& b) {
    const std::size_t n = I::level(a);
    const std::size_t m = I::level(b);
    const auto a2s = d.template partners<Elements<I>>(n);
    const auto b2s = d.template partners<Elements<I>>(m);
    for (const auto& a2 : a2s) {
      for (const auto& b2 : b2s) {
        for (std::size_t i = 0; i <= n; ++i) {
          d.record(check_operadic_mult<I>(a, a2, i, b, b2), [&] {
            return "a=" + show<I>(a) + " a'=" + show<I>(a2) + " b=" + show<I>(b) + " b'=" + show<I>(b2) + " i=" + idx(i);
          });
        }
      }
    }
  });
  // Functoriality of o_i on composable pairs a2 a1 and b2 b1.
  d.template each2<Arrows<I>, Arrows<I>>(0, top, kArrowPairCap, [&](const auto& a1, const auto& b1) {
    const auto fa = d.template partners<Elements<I>>(a1.level());
    const auto fb = d.template partners<Elements<I>>(b1.level());
    for (const auto& f : fa) {
      const GroupoidArrow<I> a2{a1.target(), f};
      for (const auto& g : fb) {
        const GroupoidArrow<I> b2{b1.target(), g};
        for (std::size_t i = 0; i <= a1.level(); ++i) {
          d.record(check_gpd_functoriality<I>(a2, a1, i, b2, b1), [&] {
            return "a2=" + a2.to_string() + " a1=" + a1.to_string() + " b2=" + b2.to_string() + " b1=" + b1.to_string() +
                   " i=" + idx(i);
          });
        }
      }
    }
  });
}

template <class C, class G, class I>
void g_like_on(Driver<I>& d, std::size_t top, std::size_t cap, const char* tag, GLikeVerdict& all,
               std::map<std::string, std::string>& first_failure) {
  const auto readings = all_condition2_readings();
  const auto& opt = d.options();
  const std::size_t chosen_action = opt.g_like_action == RightAction::RightMultiplication ? 0 : 1;
  std::size_t chosen_reading = 0;
  for (std::size_t r = 0; r < readings.size(); ++r) {
    if (readings[r].composition == opt.g_like_reading.composition &&
        readings[r].degeneracy == opt.g_like_reading.degeneracy) {
      chosen_reading = r;
    }
  }
  d.template each2<G, G>(0, top, cap, [&](const auto& mu, const auto& nu) {
    const std::size_t m = C::level(mu);
    const std::size_t n = C::level(nu);
    const auto b1s = d.template partners<Elements<I>>(n);
    const auto b2s = d.template partners<Elements<I>>(m);
    for (std::size_t k = 0; k < std::max(b1s.size(), b2s.size()); ++k) {
      const auto& b1 = b1s[k % b1s.size()];
      const auto& b2 = b2s[k % b2s.size()];
      for (std::size_t i = 0; i <= m; ++i) {
        const auto v = check_g_like_equivariance<C, I>(mu, nu, i, b1, b2);
        auto in = [&] {
          return std::string(tag) + ": mu=" + C::to_string(mu) + " nu=" + C::to_string(nu) + " i=" + idx(i) +
                 " beta=" + show<I>(b1) + " beta2=" + show<I>(b2);
        };
        for (std::size_t a = 0; a < 2; ++a) {
          const std::string act(to_string(kRightActions[a]));
          if (!v.condition1[a]) first_failure.try_emplace("condition1 [" + act + "]", in());
          for (std::size_t r = 0; r < readings.size(); ++r) {
            if (!v.condition2[a][r]) first_failure.try_emplace("condition2 [" + act + "; " + readings[r].label() + "]", in());
          }
        }
        CheckReport rep;
        rep.require(v.condition1[chosen_action], "condition (1)");
        rep.require(v.condition2[chosen_action][chosen_reading], "condition (2) " + readings[chosen_reading].label());
        d.record(rep, in);
        all.merge(v);
      }
    }
  });
}

template <class I>
void suite_g_like(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  GLikeVerdict verdict;
  std::map<std::string, std::string> first_failure;
  g_like_on<SetCarrier<I>, Elements<I>>(d, top, kPairCap, "set", verdict, first_failure);
  g_like_on<GpdCarrier<I>, Arrows<I>>(d, top, kArrowPairCap, "groupoid", verdict, first_failure);
  const auto readings = all_condition2_readings();
  for (std::size_t a = 0; a < 2; ++a) {
    const std::string act(to_string(kRightActions[a]));
    d.note("condition1 [" + act + "]", verdict.condition1[a] ? "holds" : "fails");
    for (std::size_t r = 0; r < readings.size(); ++r) {
      d.note("condition2 [" + act + "; " + readings[r].label() + "]", verdict.condition2[a][r] ? "holds" : "fails");
    }
  }
  for (const auto& [key, input] : first_failure) d.note("first failure of " + key, input);
  d.note("tested action", std::string(to_string(d.options().g_like_action)));
  d.note("tested reading", d.options().g_like_reading.label());
}

template <class I>
void suite_section(Driver<I>& d) {
  const std::size_t top = d.options().max_level;
  std::size_t exhaustive = 0;
  for (std::size_t n = 0; n <= top; ++n) {
    for (const auto& s : all_perms(n)) {
      ++exhaustive;
      for (std::size_t i = 0; i <= n; ++i) {
        CheckReport r;
        r.require(section_is_simplicial(s, i), "section commutes with d_i and s_i");
        d.record(r, [&] { return "sigma=" + s.to_string() + " i=" + idx(i); });
      }
    }
  }
  for (std::size_t n = top + 1; n <= top + 2; ++n) {
    for (std::size_t t = 0; t < d.trials(); ++t) {
      const Perm s = d.rng().perm(n);
      for (std::size_t i = 0; i <= n; ++i) {
        CheckReport r;
        r.require(section_is_simplicial(s, i), "section commutes with d_i and s_i");
        d.record(r, [&] { return "sigma=" + s.to_string() + " i=" + idx(i); });
      }
    }
  }
  // Positive permutation braids: inversion count, projection, one crossing per pair.
  d.template each1<Elements<I>>(0, top, kPairCap, [&](const auto& g) {
    const auto dec = decompose<I>(g);
    CheckReport r;
    const Perm s = I::underlying_perm(g);
    const BraidWord pb = permutation_braid(s);
    r.require(pb.length() == s.inversions(), "|section(sigma)| = inv(sigma)");
    r.require(braid_perm(pb) == s, "pi(section(sigma)) = sigma");
    r.require(std::all_of(pb.letters().begin(), pb.letters().end(), [](const Letter& l) { return l.sign > 0; }),
              "section(sigma) is positive");
    r.require(is_pure<I>(dec.p), "decompose: p is pure");
    r.require(I::equal(I::mul(dec.p, dec.s), g), "decompose: p s = g");
    r.require(I::equal(decompose<I>(dec.p).p, dec.p), "decompose: pure elements decompose to themselves");
    d.record(r, [&] { return "g=" + show<I>(g); });
  });
  d.note("exhaustive permutations", std::to_string(exhaustive));
  d.note("random levels", std::to_string(top + 1) + ".." + std::to_string(top + 2));
}

template <class I>
void suite_kan(Driver<I>& d) {
  const std::size_t top = std::max<std::size_t>(d.options().max_level, 1);
  const std::size_t lo = top >= 2 ? 2 : 1;
  std::size_t lifted = 0;
  std::size_t index = 0;
  d.template each1<Elements<I>>(lo, top, top, [&](const auto& filler) {
    const std::size_t n = I::level(filler);
    std::vector<std::size_t> ks;
    if constexpr (Driver<I>::kExhaustive) {
      for (std::size_t k = 0; k <= n; ++k) ks.push_back(k);
    } else {
      ks.push_back(index++ % (n + 1));
    }
    for (std::size_t k : ks) {
      const auto h = horn_from_filler<I>(filler, k);
      CheckReport r;
      try {
        const auto phi = lift_horn<I>(h);
        r.merge(check_lift<I>(h, phi));
        if constexpr (Driver<I>::kExhaustive) r.require(I::equal(phi, I::section(h.base)), "Phi = section(base)");
        ++lifted;
      } catch (const Error& e) {
        r.require(false, e.what());
      }
      d.record(r, [&] { return "filler=" + show<I>(filler) + " k=" + idx(k); });
    }
  });
  d.note("horns lifted", std::to_string(lifted));
}

template <class I>
void suite_quotient(Driver<I>& d) {
  const std::size_t top = std::min<std::size_t>(d.options().max_level, 2);
  constexpr std::size_t kMaxDim = 3;
  using S = NerveSimplex<I>;
  std::vector<S> sample;
  if constexpr (Driver<I>::kExhaustive) {
    for (std::size_t n = 0; n <= top; ++n) {
      const auto objs = all_perms(n);
      std::vector<std::vector<Elem<I>>> chains{{}};
      for (std::size_t m = 0; m <= kMaxDim; ++m) {
        for (const auto& o : objs) {
          for (const auto& c : chains) sample.push_back({o, c});
        }
        std::vector<std::vector<Elem<I>>> next;
        for (const auto& c : chains) {
          for (const auto& f : objs) {
            auto e = c;
            e.push_back(f);
            next.push_back(std::move(e));
          }
        }
        chains = std::move(next);
      }
    }
  } else {
    for (std::size_t t = 0; t < d.trials(); ++t) {
      const std::size_t n = d.rng().between(0, top);
      const std::size_t m = d.rng().between(0, kMaxDim);
      S s{d.rng().perm(n), {}};
      for (std::size_t r = 0; r < m; ++r) s.chain.push_back(RandomElement<I>::draw(d.rng(), n, d.word_length()));
      sample.push_back(std::move(s));
    }
  }
  auto show_s = [](const S& s) {
    std::string out = "start=" + s.start.to_string() + " chain=(";
    for (std::size_t r = 0; r < s.chain.size(); ++r) out += (r ? "; " : "") + I::to_string(s.chain[r]);
    return out + ")";
  };
  for (const auto& s : sample) {
    const std::size_t n = s.start.level();
    CheckReport r;
    const auto q = quotient_map<I>(s);
    for (const auto& tau : all_perms(n)) {
      r.require(tuples_equal<I>(quotient_map<I>(nerve_n_action<I>(tau, s)), q), "q(tau x) = q(x)");
    }
    r.merge(check_quotient_simplicial<I>(s));
    r.merge(check_nerve_simplicial<I>(s));
    d.record(r, [&] { return show_s(s); });
  }
  // Injectivity across orbits: equal images force a common orbit.
  std::size_t pairs = 0;
  if constexpr (Driver<I>::kExhaustive) {
    std::map<std::string, const S*> first;
    for (const auto& s : sample) {
      std::string key = std::to_string(s.start.level()) + "|";
      for (const auto& f : quotient_map<I>(s)) key += I::to_string(f) + ";";
      const auto [it, fresh] = first.try_emplace(key, &s);
      if (fresh) continue;
      ++pairs;
      CheckReport r;
      r.require(same_orbit<I>(*it->second, s), "q(x) = q(y) implies y in N x");
      d.record(r, [&] { return show_s(*it->second) + " vs " + show_s(s); });
    }
  } else {
    for (std::size_t t = 0; t + 1 < sample.size(); ++t) {
      const S& a = sample[t];
      const S& b = sample[t + 1];
      // A partner in the orbit of a, with the chain respelled.
      S c = nerve_n_action<I>(d.rng().perm(a.start.level()), a);
      for (auto& f : c.chain) {
        const auto x = RandomElement<I>::draw(d.rng(), I::level(f), d.word_length());
        f = I::mul(I::mul(f, x), I::inv(x));
      }
      CheckReport r;
      r.require(same_orbit<I>(a, c) && tuples_equal<I>(quotient_map<I>(a), quotient_map<I>(c)),
                "orbit partner has the same image");
      if (a.start.level() == b.start.level() && a.chain.size() == b.chain.size()) {
        ++pairs;
        r.require(same_orbit<I>(a, b) == tuples_equal<I>(quotient_map<I>(a), quotient_map<I>(b)),
                  "q(x) = q(y) iff y in N x");
      }
      d.record(r, [&] { return show_s(a) + " vs " + show_s(b); });
    }
  }
  d.note("simplices", std::to_string(sample.size()));
  d.note("orbit comparisons", std::to_string(pairs));
}

template <class I>
void suite_bar(Driver<I>& d) {
  const std::size_t top = std::min<std::size_t>(d.options().max_level, 3);
  std::size_t monoids = 0;
  for (std::size_t order = 1; order <= 4; ++order) {
    for (const auto& m : all_monoids(order)) {
      ++monoids;
      for (std::size_t n = 0; n <= top; ++n) {
        for (const auto& t : all_tuples(m, n)) {
          CheckReport r = check_bar_simplicial(m, t);
          r.merge(check_bar_cosimplicial(m, t));
          d.record(r, [&] { return "monoid=" + m.to_json() + " x=" + to_string(m, t); });
        }
      }
    }
  }
  d.note("monoids checked", std::to_string(monoids));

  const FiniteMonoid monoid = d.options().monoid.value_or(FiniteMonoid::left_zero_band());
  std::vector<Elem<I>> elements;
  d.template each1<Elements<I>>(0, top, top, [&](const auto& g) { elements.push_back(g); });
  const BarCalibration cal = calibrate_bar<I>(monoid, elements);
  for (const auto& c : cal.candidates) {
    d.note("convention [" + c.convention.label() + "]",
           c.holds ? "holds (" + std::to_string(c.checks) + " checks)" : "fails: " + c.counterexample);
  }
  const auto surviving = cal.surviving();
  d.note("monoid", monoid.to_json());
  d.note("monoid commutative", monoid.is_commutative() ? "yes" : "no");
  d.note("surviving convention", surviving ? surviving->label() : "none");
  CheckReport r;
  r.require(surviving.has_value(), "some convention satisfies the crossed identities");
  d.record(r, [&] { return "monoid=" + monoid.to_json(); });
  if (surviving) {
    for (const auto& g : elements) {
      for (const auto& h : d.template partners<Elements<I>>(I::level(g))) {
        for (const auto& t : all_tuples(monoid, I::level(g))) {
          d.record(check_bar_action_axiom<I>(g, h, t, surviving->inverse_action),
                   [&] { return "g=" + show<I>(g) + " h=" + show<I>(h) + " x=" + to_string(monoid, t); });
        }
      }
    }
  }
}

// Braid relations, far commutation and a few distinctions the Artin action
// must make; for the symmetric instance the same relations hold in S_n.
template <class I>
void suite_word_problem(Driver<I>& d) {
  const std::size_t top = std::max<std::size_t>(d.options().max_level, 2);
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const BraidWord ga(n, {{static_cast<std::uint32_t>(a), 1}});
        const BraidWord gb(n, {{static_cast<std::uint32_t>(b), 1}});
        CheckReport r;
        if (a + 1 == b) {
          r.require(braids_equal(braid_mul(braid_mul(ga, gb), ga), braid_mul(braid_mul(gb, ga), gb)), "s_a s_b s_a = s_b s_a s_b");
        } else if (a > b + 1 || b > a + 1) {
          r.require(braids_equal(braid_mul(ga, gb), braid_mul(gb, ga)), "far generators commute");
        } else if (a != b) {
          r.require(!braids_equal(braid_mul(ga, gb), braid_mul(gb, ga)), "adjacent generators do not commute");
        }
        r.require(!braids_equal(ga, braid_inv(ga)), "s_a != s_a^-1");
        r.require(braids_equal(braid_mul(ga, braid_inv(ga)), braid_one(n)), "s_a s_a^-1 = e");
        r.require(!braids_equal(braid_mul(ga, ga), braid_one(n)), "s_a^2 != e");
        d.record(r, [&] { return "level=" + idx(n) + " a=" + idx(a) + " b=" + idx(b); });
      }
    }
  }
  // Random words: g g^-1 = e, digests agree on equal braids, and inserting a
  // relator anywhere leaves the braid unchanged.
  d.template each1<Elements<I>>(1, top, kPairCap, [&](const auto& g) {
    CheckReport r;
    r.require(I::equal(I::mul(g, I::inv(g)), I::one(I::level(g))), "g g^-1 = e");
    if constexpr (std::is_same_v<I, Braid>) {
      const std::size_t n = g.level();
      const auto& letters = g.letters();
      const std::size_t cut = d.rng().below(letters.size() + 1);
      const auto k = static_cast<std::uint32_t>(d.rng().below(n));
      std::vector<Letter> rel{{k, 1}, {k, -1}};
      if (k + 1 < n) rel = {{k, 1}, {k + 1, 1}, {k, 1}, {k + 1, -1}, {k, -1}, {k + 1, -1}};
      std::vector<Letter> w(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(cut));
      w.insert(w.end(), rel.begin(), rel.end());
      w.insert(w.end(), letters.begin() + static_cast<std::ptrdiff_t>(cut), letters.end());
      const BraidWord h(n, std::move(w));
      r.require(braids_equal(g, h), "relator insertion preserves the braid");
      r.require(artin_digest(g) == artin_digest(h), "equal braids share a digest");
    }
    d.record(r, [&] { return "g=" + show<I>(g); });
  });
}

template <class I>
void dispatch(const std::string& suite, Driver<I>& d) {
  static const std::map<std::string, void (*)(Driver<I>&)> table{
      {"crossed", &suite_crossed<I>},
      {"simplicial", &suite_simplicial<I>},
      {"extra-degeneracy", &suite_extra_degeneracy<I>},
      {"monoidal", &suite_monoidal<I>},
      {"operadic", &suite_operadic<I>},
      {"lemma-a1", &suite_preimages<I>},
      {"gamma-simplicial", &suite_gamma_simplicial<I>},
      {"shifted-operad", &suite_shifted_operad<I>},
      {"unshifted-operad", &suite_unshifted_operad<I>},
      {"operadic-mult", &suite_operadic_mult<I>},
      {"g-like", &suite_g_like<I>},
      {"section", &suite_section<I>},
      {"bar", &suite_bar<I>},
      {"quotient", &suite_quotient<I>},
      {"kan", &suite_kan<I>},
      {"word-problem", &suite_word_problem<I>},
  };
  const auto it = table.find(suite);
  if (it == table.end()) throw Error(ErrorKind::Parse, "unknown suite '" + suite + "'");
  it->second(d);
}

}  // namespace

std::vector<std::string_view> suite_names() {
  return {"crossed",          "simplicial", "extra-degeneracy", "monoidal", "operadic", "lemma-a1",
          "gamma-simplicial", "shifted-operad", "unshifted-operad", "operadic-mult", "g-like", "section",
          "bar",              "quotient",   "kan",              "word-problem"};
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport rep;
  rep.suite = options.suite;
  rep.instance = options.instance;
  rep.max_level = options.max_level;
  rep.trials = options.trials;
  rep.seed = options.seed;
  rep.word_length = options.word_length;
  if (options.instance == Symmetric::name()) {
    Driver<Symmetric> d(options, rep);
    dispatch(options.suite, d);
  } else if (options.instance == Braid::name()) {
    Driver<Braid> d(options, rep);
    dispatch(options.suite, d);
  } else {
    throw Error(ErrorKind::Parse, "unknown instance '" + options.instance + "'");
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
  rep.failures = rep.counterexamples.size();
  if (rep.counterexamples.size() > SuiteReport::kMaxListed) rep.counterexamples.resize(SuiteReport::kMaxListed);
  return rep;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["instance"] = instance;
  j["parameters"] = {{"max_level", max_level}, {"trials", trials}, {"seed", seed}, {"word_length", word_length}};
  j["outcome"] = pass() ? "pass" : "fail";
  j["checks"] = checks;
  j["failures"] = failures;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples) list.push_back({{"identity", c.identity}, {"input", c.input}});
  j["counterexamples"] = std::move(list);
  auto v = nlohmann::ordered_json::object();
  for (const auto& [key, value] : verdict) v[key] = value;
  j["verdict"] = std::move(v);
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " on " << instance << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  out << "  max_level=" << max_level << " trials=" << trials << " seed=" << seed << " word_length=" << word_length
      << "\n";
  out << "  checks=" << checks << " failures=" << failures << "\n";
  for (const auto& c : counterexamples) out << "  counterexample: " << c.identity << " at " << c.input << "\n";
  if (failures > counterexamples.size()) out << "  (" << failures - counterexamples.size() << " more)\n";
  for (const auto& [key, value] : verdict) out << "  " << key << ": " << value << "\n";
  return out.str();
}

std::optional<RightAction> parse_right_action(std::string_view text) {
  if (text == "right" || text == "x*beta") return RightAction::RightMultiplication;
  if (text == "inverse-left" || text == "beta^-1*x") return RightAction::InverseLeftMultiplication;
  return std::nullopt;
}

std::optional<IndexReading> parse_index_reading(std::string_view text) {
  if (text == "i") return IndexReading::Literal;
  if (text == "sigma") return IndexReading::Sigma;
  if (text == "sigma-inv") return IndexReading::SigmaInverse;
  return std::nullopt;
}

}  // namespace csg
