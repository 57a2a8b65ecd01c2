// Runs the property suites at the sizes the acceptance criteria ask for and
// prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "csg/braid.hpp"
#include "csg/error.hpp"
#include "csg/suites.hpp"
#include "csg/symmetric.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;
};

csg::SuiteReport run(const std::string& suite, const std::string& instance, std::size_t max_level,
                     std::size_t trials = 1000, std::size_t word_length = 12) {
  csg::SuiteOptions opt;
  opt.suite = suite;
  opt.instance = instance;
  opt.max_level = max_level;
  opt.trials = trials;
  opt.word_length = word_length;
  return csg::run_suite(opt);
}

void absorb(Outcome& out, const csg::SuiteReport& rep) {
  out.checks += rep.checks;
  out.failures += rep.failures;
  if (!rep.pass()) {
    out.pass = false;
    if (out.detail.empty() && !rep.counterexamples.empty()) {
      out.detail = rep.suite + "/" + rep.instance + ": " + rep.counterexamples.front().identity + " at " +
                   rep.counterexamples.front().input;
    }
  }
}

std::string verdict(const csg::SuiteReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.verdict) {
    if (k == key) return v;
  }
  return {};
}

Outcome c1() {
  Outcome o;
  absorb(o, run("lemma-a1", "symm", 4));
  return o;
}

Outcome c2() {
  Outcome o;
  for (const char* s : {"crossed", "simplicial", "extra-degeneracy"}) {
    absorb(o, run(s, "symm", 3));
    absorb(o, run(s, "braid", 5, 1000, 12));
  }
  return o;
}

Outcome c3() {
  Outcome o;
  for (const char* s : {"monoidal", "operadic"}) {
    absorb(o, run(s, "symm", 2));
    absorb(o, run(s, "braid", 4, 500));
  }
  return o;
}

Outcome c4() {
  Outcome o;
  for (const char* s : {"shifted-operad", "unshifted-operad"}) {
    absorb(o, run(s, "symm", 3));
    absorb(o, run(s, "braid", 3, 300));
  }
  return o;
}

Outcome c5() {
  Outcome o;
  absorb(o, run("operadic-mult", "symm", 2));
  absorb(o, run("operadic-mult", "braid", 3, 300));
  return o;
}

Outcome c6() {
  Outcome o;
  absorb(o, run("gamma-simplicial", "symm", 3));
  absorb(o, run("gamma-simplicial", "braid", 4, 300));
  return o;
}

Outcome c7() {
  Outcome o;
  absorb(o, run("quotient", "symm", 2));
  absorb(o, run("quotient", "braid", 2, 300));
  return o;
}

Outcome c8() {
  Outcome o;
  absorb(o, run("section", "symm", 3, 200));
  absorb(o, run("kan", "symm", 3));
  const auto kan = run("kan", "braid", 3, 200);
  absorb(o, kan);
  const std::string lifted = verdict(kan, "horns lifted");
  if (lifted.empty() || std::stoul(lifted) < 200) {
    o.pass = false;
    o.detail = "only " + lifted + " braid horns lifted";
  }
  return o;
}

Outcome c9() {
  Outcome o;
  absorb(o, run("word-problem", "braid", 4, 500));
  absorb(o, run("word-problem", "symm", 3));
  const auto g0 = csg::BraidWord::parse("s1", 2);
  const auto g1 = csg::BraidWord::parse("s2", 2);
  o.checks += 2;
  if (csg::braids_equal(g0, csg::braid_inv(g0)) || csg::braids_equal(csg::braid_mul(g0, g1), csg::braid_mul(g1, g0))) {
    o.pass = false;
    ++o.failures;
    o.detail = "Artin action failed to separate g0 from g0^-1 or g0 g1 from g1 g0";
  }
  return o;
}

Outcome c10() {
  Outcome o;
  const auto rep = run("bar", "symm", 3);
  absorb(o, rep);
  absorb(o, run("bar", "braid", 2, 100));
  const std::string surviving = verdict(rep, "surviving convention");
  if (surviving.empty() || surviving == "none") {
    o.pass = false;
    o.detail = "no surviving convention";
  } else if (o.pass) {
    std::size_t refuted = 0;
    for (const auto& [k, v] : rep.verdict) refuted += k.rfind("convention [", 0) == 0 && v.rfind("fails", 0) == 0;
    o.detail = "surviving convention: " + surviving + " (" + std::to_string(refuted) + " refuted)";
  }
  if (verdict(rep, "monoid commutative") != "no") {
    o.pass = false;
    o.detail = "calibration monoid is commutative";
  }
  return o;
}

Outcome c11() {
  Outcome o;
  const auto symm = run("g-like", "symm", 2);
  const auto braid = run("g-like", "braid", 2, 300);
  absorb(o, symm);
  absorb(o, braid);
  const std::string act(csg::to_string(csg::RightAction::InverseLeftMultiplication));
  for (const auto* rep : {&symm, &braid}) {
    if (verdict(*rep, "condition1 [" + act + "]") != "holds") {
      o.pass = false;
      o.detail = "condition (1) fails on " + rep->instance;
    }
  }
  std::vector<std::string> both;
  for (const auto& r : csg::all_condition2_readings()) {
    const std::string key = "condition2 [" + act + "; " + r.label() + "]";
    if (verdict(symm, key) == "holds" && verdict(braid, key) == "holds") both.push_back(r.label());
  }
  if (both.empty()) {
    o.pass = false;
    if (o.detail.empty()) o.detail = "no condition (2) reading holds on both instances";
  } else if (o.pass) {
    o.detail = "action " + act + "; condition (2) holds on both for: ";
    for (std::size_t r = 0; r < both.size(); ++r) o.detail += (r ? "; " : "") + both[r];
    const std::string right(csg::to_string(csg::RightAction::RightMultiplication));
    o.detail += "; condition (1) under " + right + ": " + verdict(symm, "condition1 [" + right + "]") + " on symm, " +
                verdict(braid, "condition1 [" + right + "]") + " on braid";
  }
  return o;
}

Outcome c12() {
  Outcome o;
  for (const auto& name : csg::suite_names()) {
    for (const char* instance : {"symm", "braid"}) {
      const auto a = run(std::string(name), instance, 2, 50).to_json();
      const auto b = run(std::string(name), instance, 2, 50).to_json();
      ++o.checks;
      if (a != b) {
        o.pass = false;
        ++o.failures;
        if (o.detail.empty()) o.detail = std::string(name) + "/" + instance + " differs between runs";
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "inverse-image case splits, S_n for n <= 4", c1},
      {2, "crossed, simplicial and extra-degeneracy identities", c2},
      {3, "monoidal and operadic axioms", c3},
      {4, "set composition oracle and operad axioms", c4},
      {5, "operadic multiplicativity and functoriality of groupoid composition", c5},
      {6, "groupoid simplicial structure and N-action", c6},
      {7, "quotient of the nerve", c7},
      {8, "simplicial section and horn lifting", c8},
      {9, "braid word problem", c9},
      {10, "cyclic bar construction", c10},
      {11, "G-like equivariance", c11},
      {12, "determinism of reports", c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const csg::Error& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s  %s (checks=%zu, failures=%zu, %.1fs)%s%s\n", c.number, o.pass ? "PASS" : "FAIL",
                c.title, o.checks, o.failures, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
