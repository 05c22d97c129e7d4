#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "pperm/exact.hpp"
#include "pperm/permutation.hpp"

using namespace pperm;

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == ExactInt("2432902008176640000"));
  CHECK(factorial(25) == ExactInt("15511210043330985984000000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  // binom(-m, r) = (-1)^r binom(m+r-1, r)
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(-3, 3) == -10);
  for (int n = 0; n <= 30; ++n) {
    ExactInt row = 0;
    for (int r = 0; r <= n; ++r) row += binomial(n, r);
    CHECK(row == (ExactInt(1) << n));
  }
}

TEST_CASE("stirling numbers match cycle counts of S_n") {
  // Independent oracle: count cycles of every permutation of [n].
  for (int n = 1; n <= 7; ++n) {
    std::vector<ExactInt> counts(n + 1, 0);
    std::vector<Label> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      std::vector<bool> seen(n, false);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++c;
        for (int j = i; !seen[j]; j = static_cast<int>(p[j]) - 1) seen[j] = true;
      }
      counts[c] += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    for (int k = 0; k <= n; ++k) CHECK(stirling_first(n, k) == counts[k]);
  }
  CHECK(stirling_first(5, 2) == 50);
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(4, 5) == 0);
  CHECK(stirling_first(4, -1) == 0);
  for (int n = 0; n <= 20; ++n) {
    auto row = stirling_row(n);
    REQUIRE(row.size() == static_cast<std::size_t>(n + 1));
    ExactInt sum = 0;
    for (const auto& v : row) sum += v;
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(ExactInt(120), ExactInt(6), "t") == 20);
  CHECK_THROWS_AS(exact_div(ExactInt(7), ExactInt(2), "t"), InvariantBreach);
  CHECK(to_string(factorial(22)) == "1124000727777607680000");
}
