#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pperm/exact.hpp"
#include "pperm/permutation.hpp"

namespace pperm {

/// Integer partition stored as non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; sorted on construction. Throws on non-positive parts.
  explicit Partition(std::vector<int> parts);

  /// 1^n
  static Partition ones(int n);
  /// n^1
  static Partition single(int n);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// a_i = number of parts equal to i, for i = 0..n (index 0 unused).
  std::vector<int> multiplicities() const;

  /// "6+2"
  std::string to_string() const;
  /// "1^2 2^1" (ascending part sizes)
  std::string to_exponent_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Accepts "6+2", "6 2", or exponent form "1^2 2^1".
Partition parse_partition(std::string_view text);

/// All partitions of n, in reverse lexicographic order (n^1 first, 1^n last).
std::vector<Partition> partitions_of(int n);
/// Partitions of n with exactly k parts.
std::vector<Partition> partitions_with_length(int n, int k);

Partition cycle_type(const Permutation& f);

/// A canonical permutation on {1..n} of the given cycle type: consecutive
/// runs of labels form the cycles, largest parts first.
Permutation canonical_of_type(const Partition& lambda);

/// Number of permutations of cycle type lambda: n! / prod(i^{a_i} a_i!).
ExactInt q_lambda(const Partition& lambda);

/// Number of ways to pick l(mu)-l(eta)+1 of mu's (distinguishable) parts
/// whose merge into one part turns mu into eta. When l(mu) == l(eta) the
/// result is 1 if mu == eta and 0 otherwise.
ExactInt kappa(const Partition& mu, const Partition& eta);

/// All distinct mu obtained by splitting one part of eta into `pieces`
/// positive parts, sorted ascending. pieces must be odd and >= 3.
std::vector<Partition> splits(const Partition& eta, int pieces);

}  // namespace pperm
