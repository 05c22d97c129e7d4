#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "pperm/plane_perm.hpp"

using namespace pperm;

namespace {

PlanePermutation worked_example() {
  return PlanePermutation({3, 5, 1, 4, 8, 7, 2, 6}, parse_cycles("(3 8 4 5 6 1)(2 7)"));
}

// Oracle: exceedance count straight from positions in s.
std::size_t exc_oracle(const std::vector<Label>& s, const Permutation& pi) {
  std::size_t count = 0;
  auto pos = [&](Label x) { return std::find(s.begin(), s.end(), x) - s.begin(); };
  for (Label x : s)
    if (pos(x) < pos(pi(x))) ++count;
  return count;
}

}  // namespace

TEST_CASE("two-row form of the worked example") {
  auto p = worked_example();
  CHECK(p.bottom_row() == std::vector<Label>{8, 6, 3, 5, 4, 2, 7, 1});
  CHECK(to_two_row_string(p) == "3 5 1 4 8 7 2 6\n8 6 3 5 4 2 7 1");
  // D(pi(s_{i-1})) = s_i
  auto D = p.diagonal();
  for (std::size_t i = 0; i < p.n(); ++i) CHECK(D(p.pi()(p.s()[i])) == p.s()[(i + 1) % p.n()]);
  CHECK(PlanePermutation::with_diagonal(p.s(), D) == p);
  CHECK(exc_count(p) == exc_oracle(p.s(), p.pi()));
  CHECK(cycle_minima(p) == std::vector<Label>{3, 7});
  CHECK(cycle_minimum(p, 6) == 3);
  CHECK(ntaes(p) == std::vector<Label>{4, 8, 6});
  CHECK(exceedances(p).size() + anti_exceedances(p).size() == p.n());
  CHECK(exc_count_invariance_check(p));
}

TEST_CASE("transposes in the worked example") {
  auto p = worked_example();
  BlockInterchange h1{1, 3, 4, 4};
  auto q1 = apply(p, h1);
  CHECK(q1.s() == std::vector<Label>{3, 8, 5, 1, 4, 7, 2, 6});
  CHECK(q1.pi() == parse_cycles("(3 5 6 1)(8)(4)(2 7)"));
  CHECK(q1.diagonal() == p.diagonal());
  CHECK(classify(p, h1) == TransposeCase::Case2);
  CHECK(expected_cycle_delta(TransposeCase::Case2) == 2);

  BlockInterchange h2{1, 2, 3, 3};
  auto q2 = apply(p, h2);
  CHECK(q2.s() == std::vector<Label>{3, 4, 5, 1, 8, 7, 2, 6});
  CHECK(q2.pi() == parse_cycles("(3)(4 8)(5 6 1)(2 7)"));
  CHECK(classify(p, h2) == TransposeCase::Case2);

  CHECK(apply(q1, inverse_of(h1)) == p);
  CHECK(apply(q2, inverse_of(h2)) == p);
}

TEST_CASE("slice and glue on the worked example") {
  auto p = worked_example();
  auto s8 = slice(p, 8);
  CHECK(s8.transpose == BlockInterchange{1, 3, 4, 4});
  CHECK(s8.result.s() == std::vector<Label>{3, 8, 5, 1, 4, 7, 2, 6});
  CHECK(s8.labeled_minima == std::array<Label, 3>{3, 8, 4});
  CHECK_FALSE(s8.distinguished.has_value());
  auto g8 = glue(s8.result, 3, 8, 4);
  CHECK(g8.result == p);
  CHECK(g8.ntae == 8);

  auto s6 = slice(p, 6);
  CHECK(s6.transpose == BlockInterchange{1, 2, 3, 3});
  CHECK(s6.labeled_minima == std::array<Label, 3>{3, 4, 5});
  REQUIRE(s6.distinguished.has_value());
  CHECK(*s6.distinguished == 6);
  auto g6 = glue(s6.result, 3, 4, 5, 6);
  CHECK(g6.result == p);
  CHECK(g6.ntae == 6);

  CHECK_THROWS_AS(slice(p, 3), DomainError);
  // Minima out of <_s order.
  CHECK_THROWS_AS(glue(s8.result, 8, 3, 4), DomainError);
}

TEST_CASE("block interchange validation and swap") {
  CHECK_NOTHROW(validate(BlockInterchange{1, 2, 3, 4}, 5));
  CHECK_THROWS_AS(validate(BlockInterchange{0, 1, 2, 3}, 5), DomainError);
  CHECK_THROWS_AS(validate(BlockInterchange{1, 3, 3, 4}, 5), DomainError);
  CHECK_THROWS_AS(validate(BlockInterchange{1, 2, 3, 5}, 5), DomainError);
  std::vector<Label> seq{0, 1, 2, 3, 4, 5};
  CHECK(swap_blocks(seq, BlockInterchange{1, 1, 4, 5}) == std::vector<Label>{0, 4, 5, 2, 3, 1});
  CHECK(BlockInterchange{1, 2, 3, 3}.is_transpose());
  CHECK_FALSE(BlockInterchange{1, 1, 3, 3}.is_transpose());
}

TEST_CASE("classification agrees with the observed cycle change") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Label> s(n);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin() + 1, s.end(), rng);
    auto img = s;
    std::shuffle(img.begin(), img.end(), rng);
    PlanePermutation p(s, Permutation::from_map(s, img));
    std::size_t i = 1 + rng() % (n - 1), j = 1 + rng() % (n - 1), k = 1 + rng() % (n - 1),
                l = 1 + rng() % (n - 1);
    std::array<std::size_t, 4> v{i, j, k, l};
    std::sort(v.begin(), v.end());
    if (v[1] >= v[2]) continue;
    BlockInterchange h{v[0], v[1], v[2], v[3]};
    auto q = apply(p, h);
    const int delta = static_cast<int>(cycle_count(q.pi())) - static_cast<int>(cycle_count(p.pi()));
    auto c = classify(p, h);
    if (auto e = expected_cycle_delta(c)) {
      CHECK(*e == delta);
    } else {
      CHECK((delta == 0 || delta == -2));
    }
    CHECK(q.diagonal() == p.diagonal());
  }
}

TEST_CASE("exceedance count is invariant under conjugation and rotation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Label> s(n);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    auto img = s;
    std::shuffle(img.begin(), img.end(), rng);
    PlanePermutation p(s, Permutation::from_map(s, img));
    auto a_img = s;
    std::shuffle(a_img.begin(), a_img.end(), rng);
    auto alpha = Permutation::from_map(s, a_img);
    auto c = conjugate(p, alpha);
    CHECK(exc_count(c) == exc_count(p));
    CHECK(exc_count(p) == exc_oracle(p.s(), p.pi()));
    CHECK(exc_count(p.rotated(rng() % n)) == exc_count(p));
    // Exc = AEx(D) - 1
    CHECK(exc_count(p) + 1 == anti_exceedance_count(p.diagonal(), p));
  }
}

TEST_CASE("json round trip") {
  auto p = worked_example();
  auto j = to_json(p);
  CHECK(plane_from_json(j) == p);
  CHECK(plane_from_json(nlohmann::json::parse(j.dump())) == p);
  CHECK_THROWS(plane_from_json(nlohmann::json::parse(R"({"s":[1,2]})")));
}
