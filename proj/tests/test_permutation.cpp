#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "pperm/permutation.hpp"

using namespace pperm;

namespace {

// Table-lookup oracle for f(g(x)), independent of the slot machinery.
std::map<Label, Label> table_compose(const std::map<Label, Label>& f, const std::map<Label, Label>& g) {
  std::map<Label, Label> out;
  for (auto [x, gx] : g) out[x] = f.at(gx);
  return out;
}

std::map<Label, Label> as_table(const Permutation& p) {
  std::map<Label, Label> out;
  for (Label x : p.domain()) out[x] = p(x);
  return out;
}

Permutation random_perm(std::mt19937_64& rng, std::vector<Label> dom) {
  auto img = dom;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_map(dom, img);
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  // p_t = (3 2 1 0), s-bar of "3 2 1" = (0 3 2 1)
  auto pt = parse_cycles("(3 2 1 0)");
  auto sbar = parse_cycles("(0 3 2 1)");
  auto prod = compose(pt, sbar);
  CHECK(as_table(prod) == table_compose(as_table(pt), as_table(sbar)));
  CHECK(to_cycle_string(prod) == "(0 2)(1 3)");
  CHECK(prod == parse_cycles("(0 2)(1 3)"));

  auto f = parse_cycles("(1 2)(3)");
  auto g = parse_cycles("(1)(2 3)");
  CHECK(compose(f, g)(2) == 3);
  CHECK(compose(f, g)(3) == 1);
  CHECK_THROWS_AS(compose(parse_cycles("(1 2)"), parse_cycles("(1 3)")), DomainError);
}

TEST_CASE("inverse, associativity and conjugation on random permutations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Label> dom;
    for (Label x = -4; x <= 5; ++x) dom.push_back(x);
    auto a = random_perm(rng, dom);
    auto b = random_perm(rng, dom);
    auto c = random_perm(rng, dom);
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(as_table(compose(a, b)) == table_compose(as_table(a), as_table(b)));
    auto conj = conjugate(b, a);
    CHECK(conj == compose(a, compose(b, inverse(a))));
    CHECK(cycle_count(conj) == cycle_count(b));
  }
}

TEST_CASE("cycle decomposition") {
  auto pi = parse_cycles("(3 8 4 5 6 1)(2 7)");
  auto cd = cycles(pi);
  REQUIRE(cd.count() == 2);
  CHECK(cd.cycles[0] == std::vector<Label>{1, 3, 8, 4, 5, 6});
  CHECK(cd.cycles[1] == std::vector<Label>{2, 7});
  CHECK(cd.odd_count() == 0);
  CHECK(cd.even_count() == 2);
  auto cc = cycle_counts(pi);
  CHECK(cc.total == 2);
  CHECK(cc.odd == 0);
  CHECK(cc.even == 2);
  CHECK(to_cycle_string(pi) == "(1 3 8 4 5 6)(2 7)");

  auto fixed = parse_cycles("(0)(1)(2 3 4)");
  CHECK(cycle_counts(fixed).total == 3);
  CHECK(cycle_counts(fixed).odd == 3);
  CHECK(cycle_counts(fixed).even == 0);
}

TEST_CASE("parsing round trips") {
  auto p = parse_one_line("3 1 2");
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
  CHECK(to_one_line_string(p) == "3 1 2");
  CHECK(parse_cycles(to_cycle_string(p)) == p);
  CHECK(parse_labels("-3, 1 2") == std::vector<Label>{-3, 1, 2});
  CHECK_THROWS_AS(parse_one_line("1 1 2"), ParseError);
  CHECK_THROWS_AS(parse_one_line("1 x"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
  auto id = Permutation::identity_range(-2, 2);
  CHECK(id.is_identity());
  CHECK(id.size() == 5);
  CHECK_THROWS_AS(id.slot_of(9), DomainError);
}
