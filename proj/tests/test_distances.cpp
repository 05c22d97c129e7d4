#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pperm/bfs.hpp"
#include "pperm/distances.hpp"

using namespace pperm;

TEST_CASE("sequence helpers") {
  CHECK(identity_sequence(3) == Sequence{1, 2, 3});
  CHECK_THROWS_AS(validate_sequence(Sequence{1, 3}), DomainError);
  CHECK(apply_transposition(Sequence{1, 2, 3, 4}, 1, 1, 3) == Sequence{2, 3, 1, 4});
  CHECK(apply_block_interchange(Sequence{1, 2, 3, 4}, BlockInterchange{1, 1, 4, 4}) == Sequence{4, 2, 3, 1});
  CHECK(all_sequences(4).size() == 24);
  CHECK(all_signed_permutations(3).size() == 48);
}

TEST_CASE("cycle graph permutation") {
  CHECK(bar_cycle(Sequence{3, 2, 1}) == parse_cycles("(0 3 2 1)"));
  CHECK(p_t(3) == parse_cycles("(3 2 1 0)"));
  CHECK(cycle_graph_permutation(Sequence{3, 2, 1}) == parse_cycles("(0 2)(1 3)"));
  CHECK(cycle_graph_permutation(Sequence{1, 2, 4, 3}) == parse_cycles("(0)(1)(2 3 4)"));
  CHECK(cycle_graph_permutation(identity_sequence(5)).is_identity());
  auto tp = transposition_plane(Sequence{3, 2, 1});
  CHECK(tp.diagonal() == inverse(p_t(3)));
}

TEST_CASE("even-cycle gap beyond the default gammas") {
  Sequence s{1, 2, 4, 3};
  auto a = cycle_graph_permutation(s);
  auto gamma = parse_cycles("(0)(1 3)(2 4)");
  auto prod = compose(a, gamma);
  CHECK(prod == parse_cycles("(0)(1 4 3)(2)"));
  CHECK(cycle_counts(gamma).even == 2);
  CHECK(cycle_counts(prod).even == 0);
  for (const auto& g : default_gammas(s)) CHECK(cycle_counts(compose(a, g)).even == cycle_counts(g).even);
  std::vector<Permutation> gammas{gamma};
  CHECK(td_lower_bound(s, gammas) == 1);
  CHECK(td_lower_bound(s) == 1);
  CHECK(bfs_distance(s, identity_sequence(4), Generators::Transpositions) == 1);
}

TEST_CASE("block-interchange distance and sorting") {
  CHECK(bid(Sequence{3, 2, 1}) == 1);
  auto steps = bid_sort(Sequence{3, 2, 1});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].h == BlockInterchange{1, 1, 3, 3});
  CHECK(bid(identity_sequence(6)) == 0);
  CHECK(bid_sort(identity_sequence(6)).empty());
  for (const auto& s : all_sequences(5)) {
    auto cur = s;
    for (const auto& st : bid_sort(s)) cur = apply_block_interchange(cur, st.h);
    CHECK(cur == identity_sequence(5));
  }
  CHECK(bid_count(3, 0) == 1);
  CHECK(bid_count(3, 1) == 5);
  CHECK_THROWS_AS(bid_count(3, 2), DomainError);
  for (int n = 1; n <= 12; ++n) {
    ExactInt sum = 0;
    for (int k = 0; 2 * k <= n; ++k) sum += bid_count(n, k);
    CHECK(sum == factorial(n));
  }
  DistanceTable t(5, Generators::BlockInterchanges);
  auto h = t.histogram();
  for (std::size_t k = 0; k < h.size(); ++k) CHECK(bid_count(5, static_cast<int>(k)) == h[k]);
}

TEST_CASE("maximum cycle gap") {
  auto a = parse_cycles("(1 2 3)(4 5)");
  CHECK(max_cycle_gap(a) == 3);
  CHECK(brute_max_cycle_gap(a) == 3);
  CHECK(max_cycle_gap(Permutation::identity_range(1, 4)) == 0);
}

TEST_CASE("signed permutation parsing") {
  auto a = parse_signed("-3 +1 +2 -4");
  CHECK(a.values() == std::vector<Label>{-3, 1, 2, -4});
  CHECK(a.signs() == "-++-");
  CHECK(a.magnitudes() == std::vector<Label>{3, 1, 2, 4});
  CHECK(to_string(a) == "-3 +1 +2 -4");
  CHECK(parse_signed(to_string(a)) == a);
  CHECK_THROWS_AS(parse_signed("-3 1 +2"), ParseError);
  CHECK_THROWS(parse_signed("+1 +1"));
  CHECK(SignedPermutation::identity(3).is_identity());
}

TEST_CASE("reversals") {
  auto a = parse_signed("+1 +2 +3 +4");
  auto r = apply_reversal(a, Reversal{2, 3});
  CHECK(r == parse_signed("+1 -3 -2 +4"));
  CHECK(apply_reversal(r, Reversal{2, 3}) == a);
  CHECK(Reversal{2, 3}.as_block_interchange(4) == BlockInterchange{2, 3, 6, 7});
  for (const auto& b : all_signed_permutations(3)) {
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = i; j <= 3; ++j) {
        auto once = apply_reversal(b, Reversal{i, j});
        CHECK(apply_reversal(once, Reversal{i, j}) == b);
        // The restricted block interchange on s(a) realizes the reversal.
        auto s = skew_seq(b).seq;
        auto swapped = swap_blocks(s, Reversal{i, j}.as_block_interchange(3));
        CHECK(signed_from_skew(swapped) == once);
      }
  }
}

TEST_CASE("skew-symmetric planes of the critical examples") {
  auto a = parse_signed("-3 +1 +2 -4");
  auto sk = skew_seq(a);
  CHECK(sk.seq == std::vector<Label>{0, -3, 1, 2, -4, 4, -2, -1, 3});
  CHECK_NOTHROW(validate_skew(sk.seq));
  CHECK_THROWS_AS(validate_skew(std::vector<Label>{0, 1, 2, -1, -2}), DomainError);
  auto p = reversal_plane(a);
  CHECK(p.pi() == parse_cycles("(0 -4 3 -1 2 4 -3)(1)(-2)"));
  CHECK(p.bottom_row() == std::vector<Label>{-4, 0, 1, 4, 3, -3, -2, 2, -1});
  CHECK(p.diagonal() == inverse(p_r(4)));
  CHECK(critical_hypothesis(a));
  CHECK(n_and_sn_same_cycle(a));
  CHECK(find_2_reversal(p).has_value());

  auto b = parse_signed("+2 -4 -1 +3");
  auto q = reversal_plane(b);
  CHECK(q.pi() == parse_cycles("(0 1 3 -4 -2 -1 2 4 -3)"));
  CHECK(q.bottom_row() == std::vector<Label>{1, 4, -2, 2, -4, 0, 3, -3, -1});
  CHECK(critical_hypothesis(b));
  CHECK(n_and_sn_same_cycle(b));
  CHECK(find_2_reversal(q).has_value());

  auto scan = conjecture_scan(4, Conjecture::SameCycleAll);
  CHECK(scan.scanned == 384);
  CHECK(scan.counterexamples.empty());
}

TEST_CASE("reversal bounds") {
  auto a = parse_signed("-1");
  CHECK(rev_lower_bound(a) == 1);
  CHECK(breakpoint_bound(a) == 1);
  CHECK(breakpoint_graph(a).cycle_count() == 1);
  CHECK(rev_lower_bound(SignedPermutation::identity(5)) == 0);
  CHECK(breakpoint_bound(SignedPermutation::identity(5)) == 0);
  DistanceTable t(4, Generators::Reversals);
  for (const auto& b : all_signed_permutations(4)) {
    CHECK(rev_lower_bound(b) <= t.distance(b.values()));
    CHECK(rev_lower_bound(b) == breakpoint_bound(b));
  }
}

TEST_CASE("greedy reversal sort") {
  auto res = greedy_reversal_sort(parse_signed("-1"));
  CHECK(res.sorted);
  CHECK(res.steps.size() == 1);
  for (const auto& b : all_signed_permutations(3)) {
    auto g = greedy_reversal_sort(b);
    auto cur = b;
    for (const auto& r : g.steps) cur = apply_reversal(cur, r);
    CHECK(cur == g.final_state);
    CHECK(g.sorted == g.final_state.is_identity());
    if (g.sorted) CHECK(static_cast<int>(g.steps.size()) == rev_lower_bound(b));
  }
}

TEST_CASE("bfs oracle") {
  CHECK(bfs_distance(Sequence{3, 2, 1}, identity_sequence(3), Generators::BlockInterchanges) == 1);
  CHECK(bfs_distance(Sequence{3, 2, 1}, identity_sequence(3), Generators::Transpositions) == 2);
  CHECK(bfs_distance(std::vector<Label>{-1}, std::vector<Label>{1}, Generators::Reversals) == 1);
  CHECK_THROWS_AS(DistanceTable(8, Generators::Transpositions, 100), CapExceeded);
  auto key = pack_state(std::vector<Label>{-3, 1, 2});
  CHECK(unpack_state(key, 3) == std::vector<Label>{-3, 1, 2});
  CHECK(DistanceTable(4, Generators::Transpositions).size() == 24);
  CHECK(DistanceTable(3, Generators::Reversals).size() == 48);
}
