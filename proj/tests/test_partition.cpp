#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pperm/partition.hpp"

using namespace pperm;

namespace {

// Oracle: try every subset of mu's parts of the right size.
ExactInt kappa_oracle(const Partition& mu, const Partition& eta) {
  const int m = mu.length();
  const int pick = mu.length() - eta.length() + 1;
  if (pick == 1) return mu == eta ? 1 : 0;
  if (pick < 1) return 0;
  ExactInt count = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != pick) continue;
    std::vector<int> rest;
    int merged = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) merged += mu.parts()[i];
      else rest.push_back(mu.parts()[i]);
    }
    rest.push_back(merged);
    if (Partition(rest) == eta) count += 1;
  }
  return count;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p({1, 6, 2});
  CHECK(p.parts() == std::vector<int>{6, 2, 1});
  CHECK(p.n() == 9);
  CHECK(p.length() == 3);
  CHECK(p.to_string() == "6+2+1");
  CHECK(parse_partition("6+2+1") == p);
  CHECK(parse_partition("6 2 1") == p);
  CHECK(parse_partition("1^2 2^1") == Partition({2, 1, 1}));
  CHECK(Partition({2, 1, 1}).to_exponent_string() == "1^2 2^1");
  CHECK(Partition::ones(3) == Partition({1, 1, 1}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK_THROWS(parse_partition("2+x"));
  auto mult = Partition({3, 1, 1}).multiplicities();
  CHECK(mult[1] == 2);
  CHECK(mult[3] == 1);
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
  auto p4 = partitions_of(4);
  CHECK(p4.front() == Partition::single(4));
  CHECK(p4.back() == Partition::ones(4));
  CHECK(partitions_with_length(6, 3).size() == 3);
}

TEST_CASE("class sizes") {
  CHECK(q_lambda(Partition({2, 1})) == 3);
  CHECK(q_lambda(Partition({3})) == 2);
  CHECK(q_lambda(Partition({2, 2})) == 3);
  CHECK(q_lambda(Partition::ones(5)) == 1);
  for (int n = 1; n <= 12; ++n) {
    ExactInt sum = 0;
    for (const auto& l : partitions_of(n)) sum += q_lambda(l);
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("canonical representative has the requested type") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) CHECK(cycle_type(canonical_of_type(l)) == l);
  CHECK(cycle_type(parse_cycles("(3 8 4 5 6 1)(2 7)")) == Partition({6, 2}));
}

TEST_CASE("merge multiplicity") {
  CHECK(kappa(Partition({3, 1}), Partition({3, 1})) == 1);
  CHECK(kappa(Partition({3, 1}), Partition({2, 2})) == 0);
  CHECK(kappa(Partition({1, 1, 1}), Partition({3})) == 1);
  CHECK(kappa(Partition({2, 1, 1, 1}), Partition({4, 1})) == 3);
  // Merging three of a_1 + 3 ones: C(a_1 + 3, 3) choices.
  for (int a1 = 0; a1 <= 5; ++a1) {
    std::vector<int> mu(a1 + 3, 1);
    std::vector<int> eta(a1, 1);
    eta.push_back(3);
    CHECK(kappa(Partition(mu), Partition(eta)) == binomial(a1 + 3, 3));
  }
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& eta : partitions_of(n)) CHECK(kappa(mu, eta) == kappa_oracle(mu, eta));
}

TEST_CASE("splits") {
  CHECK(splits(Partition({3, 1}), 3) == std::vector<Partition>{Partition::ones(4)});
  CHECK(splits(Partition::ones(5), 3).empty());
  auto s = splits(Partition({5}), 3);
  std::set<Partition> got(s.begin(), s.end());
  CHECK(got == std::set<Partition>{Partition({3, 1, 1}), Partition({2, 2, 1})});
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK_THROWS(splits(Partition({5}), 2));
  // Duality: mu is a split of eta exactly when kappa(mu, eta) > 0.
  for (int n = 3; n <= 8; ++n)
    for (const auto& eta : partitions_of(n))
      for (int pieces = 3; pieces <= n; pieces += 2) {
        auto sp = splits(eta, pieces);
        std::set<Partition> set(sp.begin(), sp.end());
        for (const auto& mu : partitions_with_length(n, eta.length() + pieces - 1))
          CHECK((set.count(mu) == 1) == (kappa(mu, eta) > 0));
      }
}
