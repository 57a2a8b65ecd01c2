#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csg/bar.hpp"
#include "csg/operad.hpp"

namespace csg {

struct SuiteOptions {
  std::string suite;
  std::string instance = "symm";
  std::size_t max_level = 3;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t word_length = 12;

  /// g-like: the right action and the condition (2) reading under test.
  RightAction g_like_action = RightAction::InverseLeftMultiplication;
  Condition2Reading g_like_reading{IndexReading::Sigma, IndexReading::Sigma};

  /// bar: monoid for the action identities (default: the left-zero band).
  std::optional<FiniteMonoid> monoid;
};

struct Counterexample {
  std::string identity;
  std::string input;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SuiteReport {
  std::string suite;
  std::string instance;
  std::size_t max_level = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t word_length = 0;

  std::size_t checks = 0;
  /// Total number of failed identities; `counterexamples` holds the first
  /// kMaxListed of them in canonical order.
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;
  /// Ordered key/value findings (calibration outcomes, verdicts).
  std::vector<std::pair<std::string, std::string>> verdict;

  static constexpr std::size_t kMaxListed = 20;

  bool pass() const noexcept { return failures == 0; }
  std::string to_json() const;
  std::string to_text() const;
};

std::vector<std::string_view> suite_names();

/// Throws csg::Error(Parse) for an unknown suite or instance.
SuiteReport run_suite(const SuiteOptions& options);

/// Parses "symm" / "braid" style names used by the CLI; nullopt if unknown.
std::optional<RightAction> parse_right_action(std::string_view text);
std::optional<IndexReading> parse_index_reading(std::string_view text);

}  // namespace csg
