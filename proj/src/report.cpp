#include "pperm/report.hpp"

#include <sstream>

namespace pperm {

void Report::fail(std::string detail) {
  pass = false;
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(detail));
}

void Report::add_info(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }

void Report::merge(const Report& other) {
  pass = pass && other.pass;
  checks += other.checks;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxStoredFailures) failures.push_back(f);
  }
  info.insert(info.end(), other.info.begin(), other.info.end());
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks << " checks";
  if (r.failure_count) os << ", " << r.failure_count << " failed";
  os << ")\n";
  for (const auto& [k, v] : r.info) os << "  " << k << ": " << v << '\n';
  for (const auto& f : r.failures) os << "  failure: " << f << '\n';
  if (r.failure_count > r.failures.size()) {
    os << "  ... " << (r.failure_count - r.failures.size()) << " more failures\n";
  }
  return os.str();
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json info = nlohmann::json::array();
  for (const auto& [k, v] : r.info) info.push_back({{"key", k}, {"value", v}});
  return {{"suite", r.name},
          {"pass", r.pass},
          {"checks", exact_json(r.checks)},
          {"failure_count", exact_json(r.failure_count)},
          {"failures", r.failures},
          {"info", info}};
}

nlohmann::json exact_json(const ExactInt& v) {
  static const ExactInt kMaxSafe = (ExactInt(1) << 53) - 1;
  if (abs(v) <= kMaxSafe) return static_cast<std::int64_t>(v);
  return to_string(v);
}

}  // namespace pperm
