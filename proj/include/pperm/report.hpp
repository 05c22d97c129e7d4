#pragma once

// Outcome of a verification suite: a pass flag, the number of individual
// checks, the first few failures with detail, and free-form info lines.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pperm/exact.hpp"

namespace pperm {

struct Report {
  static constexpr std::size_t kMaxStoredFailures = 20;

  std::string name;
  bool pass = true;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> info;

  explicit Report(std::string suite = {}) : name(std::move(suite)) {}

  /// Records one check; detail() is only evaluated on failure.
  template <class Detail>
  bool check(bool ok, Detail&& detail) {
    ++checks;
    if (!ok) fail(std::string(detail()));
    return ok;
  }
  void fail(std::string detail);
  void add_info(std::string key, std::string value);
  /// Folds another report's checks, failures and info into this one.
  void merge(const Report& other);
};

std::string to_text(const Report& r);
nlohmann::json to_json(const Report& r);

/// JSON number when |v| <= 2^53 - 1, decimal string otherwise.
nlohmann::json exact_json(const ExactInt& v);

}  // namespace pperm
