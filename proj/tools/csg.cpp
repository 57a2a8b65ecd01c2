#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csg/expr.hpp"
#include "csg/io.hpp"
#include "csg/kan.hpp"
#include "csg/random.hpp"
#include "csg/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw csg::Error(csg::ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class I>
int lift_and_report(const csg::Horn<I>& h, bool json) {
  if (const auto violation = csg::horn_violation<I>(h); !violation.empty()) {
    std::cerr << "incompatible horn: " << violation << "\n";
    return kCounterexample;
  }
  typename I::Element phi;
  try {
    phi = csg::lift_horn<I>(h);
  } catch (const csg::Error& e) {
    std::cerr << e.what() << "\n";
    return kCounterexample;
  }
  const auto checks = csg::check_lift<I>(h, phi);
  if (json) {
    nlohmann::ordered_json j;
    j["instance"] = std::string(I::name());
    j["level"] = h.n;
    j["k"] = h.k;
    j["phi"] = I::to_string(phi);
    auto faces = nlohmann::ordered_json::array();
    for (const auto& [r, y] : h.faces) {
      faces.push_back({{"r", r}, {"face", I::to_string(I::face(r, phi))}, {"holds", I::equal(I::face(r, phi), y)}});
    }
    j["faces"] = std::move(faces);
    j["projection"] = {{"perm", I::underlying_perm(phi).to_string()}, {"holds", I::underlying_perm(phi) == h.base}};
    j["outcome"] = checks.ok() ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Phi = " << I::to_string(phi) << "\n";
    for (const auto& [r, y] : h.faces) {
      std::cout << "d_" << r << "(Phi) = y_" << r << ": " << (I::equal(I::face(r, phi), y) ? "ok" : "FAILED") << "\n";
    }
    std::cout << "pi(Phi) = " << I::underlying_perm(phi).to_string() << " = base: "
              << (I::underlying_perm(phi) == h.base ? "ok" : "FAILED") << "\n";
  }
  return checks.ok() ? kPass : kCounterexample;
}

template <class I>
std::vector<csg::NerveSimplex<I>> random_simplices(csg::Rng& rng, std::size_t level, std::size_t dimension,
                                                   std::size_t count, std::size_t word_length) {
  std::vector<csg::NerveSimplex<I>> out;
  for (std::size_t c = 0; c < count; ++c) {
    csg::NerveSimplex<I> s{rng.perm(level), {}};
    const std::size_t m = rng.between(0, dimension);
    for (std::size_t r = 0; r < m; ++r) s.chain.push_back(csg::RandomElement<I>::draw(rng, level, word_length));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed simplicial groups: evaluation, identity suites, nerves and Kan lifts"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  std::string expression;
  eval->add_option("expression", expression, "e.g. circ_0([1,0],[1,0]) or mul(inv(s1@1), s1@1)")->required();
  add_format(eval);

  csg::SuiteOptions opt;
  auto* check = app.add_subcommand("check", "Run an identity suite");
  std::vector<std::string> names;
  for (auto n : csg::suite_names()) names.emplace_back(n);
  check->add_option("suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(names));
  check->add_option("--instance", opt.instance, "symm or braid")->check(CLI::IsMember({"symm", "braid"}));
  check->add_option("--max-level", opt.max_level, "Largest level");
  check->add_option("--trials", opt.trials, "Random trials (braid instance, and beyond exhaustive caps)");
  check->add_option("--seed", opt.seed, "PRNG seed");
  check->add_option("--word-length", opt.word_length, "Maximum random braid word length");
  std::string monoid_file;
  check->add_option("--monoid", monoid_file, "Monoid JSON file for the bar suite");
  std::string action = "inverse-left";
  check->add_option("--g-like-action", action, "Right action for the g-like suite")
      ->check(CLI::IsMember({"right", "inverse-left"}));
  std::string comp_index = "sigma";
  std::string deg_index = "sigma";
  check->add_option("--g-like-index", comp_index, "Composition index in condition (2)")
      ->check(CLI::IsMember({"i", "sigma", "sigma-inv"}));
  check->add_option("--g-like-degeneracy", deg_index, "Degeneracy index of beta'' in condition (2)")
      ->check(CLI::IsMember({"i", "sigma", "sigma-inv"}));
  add_format(check);

  auto* nerve = app.add_subcommand("nerve", "Emit random nerve simplices of Gamma_level");
  std::string nerve_instance = "symm";
  std::size_t level = 2;
  std::size_t dimension = 2;
  std::size_t count = 3;
  std::uint64_t seed = 42;
  std::size_t word_length = 12;
  std::string nerve_format = "json";
  nerve->add_option("--instance", nerve_instance, "symm or braid")->check(CLI::IsMember({"symm", "braid"}));
  nerve->add_option("--level", level, "Groupoid level");
  nerve->add_option("--dimension", dimension, "Largest simplex dimension");
  nerve->add_option("--count", count, "Number of simplices");
  nerve->add_option("--seed", seed, "PRNG seed");
  nerve->add_option("--word-length", word_length, "Maximum random braid word length");
  nerve->add_option("--format", nerve_format, "json, or dot for the symmetric 1-skeleton")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* kan = app.add_subcommand("kan-lift", "Lift a horn read from a JSON file ('-' for stdin)");
  std::string horn_file;
  kan->add_option("horn", horn_file, "Horn JSON file")->required();
  add_format(kan);

  auto* horn = app.add_subcommand("horn", "Print the horn obtained by deleting face k of a filler");
  std::string horn_instance = "braid";
  std::string filler;
  std::size_t horn_level = 2;
  std::size_t k = 0;
  horn->add_option("--instance", horn_instance, "symm or braid")->check(CLI::IsMember({"symm", "braid"}));
  horn->add_option("--filler", filler, "Braid word or permutation literal")->required();
  horn->add_option("--level", horn_level, "Level of a braid filler");
  horn->add_option("-k", k, "Missing face");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*eval) {
      const auto v = csg::evaluate(expression);
      std::cout << (format == "json" ? csg::describe_json(v) : csg::describe(v));
      return kPass;
    }
    if (*check) {
      if (!monoid_file.empty()) opt.monoid = csg::FiniteMonoid::from_json(slurp(monoid_file));
      opt.g_like_action = *csg::parse_right_action(action);
      opt.g_like_reading = {*csg::parse_index_reading(comp_index), *csg::parse_index_reading(deg_index)};
      const auto report = csg::run_suite(opt);
      std::cout << (format == "json" ? report.to_json() : report.to_text());
      return report.pass() ? kPass : kCounterexample;
    }
    if (*nerve) {
      csg::Rng rng(seed);
      if (nerve_format == "dot") {
        if (nerve_instance != "symm") {
          std::cerr << "dot output is available for the symmetric instance only\n";
          return kUsage;
        }
        std::cout << csg::gamma_skeleton_dot(level);
      } else if (nerve_instance == "symm") {
        std::cout << csg::nerve_to_json(random_simplices<csg::Symmetric>(rng, level, dimension, count, word_length));
      } else {
        std::cout << csg::nerve_to_json(random_simplices<csg::Braid>(rng, level, dimension, count, word_length));
      }
      return kPass;
    }
    if (*kan) {
      const auto parsed = csg::parse_horn_json(slurp(horn_file));
      return std::visit([&](const auto& h) { return lift_and_report(h, format == "json"); }, parsed);
    }
    if (*horn) {
      if (horn_instance == "symm") {
        std::cout << csg::horn_to_json(csg::horn_from_filler<csg::Symmetric>(csg::Perm::parse(filler), k));
      } else {
        std::cout << csg::horn_to_json(csg::horn_from_filler<csg::Braid>(csg::BraidWord::parse(filler, horn_level), k));
      }
      return kPass;
    }
  } catch (const csg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
