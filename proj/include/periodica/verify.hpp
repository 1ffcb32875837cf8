#ifndef PERIODICA_VERIFY_HPP_
#define PERIODICA_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace periodica {

struct VerifyEntry {
  std::string theorem_id;
  std::string fixture;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_passed = 0;
  std::optional<std::string> counterexample;  // first failing input
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool passed = true;
  double wall_time_ms = 0;
};

struct VerifyOptions {
  // Caps every exhaustive scope; PERIODICA_MAX_N lowers it further.
  std::size_t max_n = 16;
  std::uint64_t seed = 1;
  std::size_t random_cases = 100;
};

std::vector<std::string> suite_names();

// `name` is one of suite_names() or "all". Throws InvalidInput otherwise.
VerifyReport run_suite(const std::string& name, const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerifyReport& r, bool with_time);
std::string report_to_text(const VerifyReport& r, bool with_time);

}  // namespace periodica

#endif  // PERIODICA_VERIFY_HPP_
