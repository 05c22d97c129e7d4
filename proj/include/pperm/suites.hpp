#pragma once

// Named verification suites shared by the CLI and the acceptance runner.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pperm/bfs.hpp"
#include "pperm/report.hpp"

namespace pperm {

struct SuiteOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultStateCap;
  bool allow_large = false;
};

struct SuiteInfo {
  std::string name;
  /// Largest N accepted without allow_large.
  int default_limit;
  /// Hard ceiling even with allow_large.
  int hard_limit;
  std::string summary;
};

const std::vector<SuiteInfo>& suites();

/// Runs suite `name` for sizes up to n. Throws DomainError for an unknown
/// suite and CapExceeded when n is above the allowed limit.
Report run_suite(std::string_view name, int n, const SuiteOptions& opt = {});

// Distance oracles, all sizes 1..n.

/// bid equals BFS block-interchange distance (n <= bfs_max), bid_sort
/// replays to the identity in bid(s) Case 2/c/e steps, and the distance
/// histogram matches bid_count.
Report verify_bid_oracle(int n, int bfs_max, std::size_t cap = kDefaultStateCap);
/// td_lower_bound never exceeds BFS transposition distance.
Report verify_td_oracle(int n, std::size_t cap = kDefaultStateCap);
/// rev_lower_bound never exceeds BFS reversal distance; find_2_reversal
/// finds a 2-reversal exactly when one exists. Equality rates, breakpoint
/// agreement and greedy-sort success are reported, not asserted.
Report verify_rev_oracle(int n, std::size_t cap = kDefaultStateCap);
/// Closed form vs brute force: every alpha for sizes <= exhaustive_max,
/// then `samples` random alpha of size sample_n.
Report verify_max_gap(int exhaustive_max, int sample_n, std::size_t samples, std::uint64_t seed);
/// Exhaustive conjecture scans for sizes 1..n.
Report verify_conjectures(int n, unsigned jobs = 1);

}  // namespace pperm
