#include "pperm/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pperm/distances.hpp"
#include "pperm/enumeration.hpp"

namespace pperm {

namespace {

std::string ratio(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "/" + std::to_string(b); }

std::string seq_string(std::span<const Label> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

Report verify_bid_oracle(int n, int bfs_max, std::size_t cap) {
  Report r("bid-oracle n<=" + std::to_string(n));
  for (int m = 1; m <= n; ++m) {
    std::optional<DistanceTable> table;
    if (m <= bfs_max) table.emplace(m, Generators::BlockInterchanges, cap);
    std::vector<std::uint64_t> hist;
    for (const auto& s : all_sequences(m)) {
      const int d = bid(s);
      if (hist.size() <= static_cast<std::size_t>(d)) hist.resize(d + 1, 0);
      ++hist[d];
      if (table) {
        const int bfs = table->distance(s);
        r.check(d == bfs, [&] { return seq_string(s) + ": bid " + std::to_string(d) + " != BFS " + std::to_string(bfs); });
      }
      const auto steps = bid_sort(s);
      Sequence cur = s;
      bool kinds = true;
      for (const auto& st : steps) {
        cur = apply_block_interchange(cur, st.h);
        kinds = kinds && (st.kind == TransposeCase::Case2 || st.kind == TransposeCase::CaseC ||
                          st.kind == TransposeCase::CaseE);
      }
      r.check(static_cast<int>(steps.size()) == d && cur == identity_sequence(m),
              [&] { return seq_string(s) + ": bid_sort does not replay to the identity in bid(s) steps"; });
      r.check(kinds, [&] { return seq_string(s) + ": bid_sort step outside Case 2, c, e"; });
    }
    if (table) {
      const auto bfs_hist = table->histogram();
      r.check(bfs_hist == hist, [&] { return "n " + std::to_string(m) + ": BFS histogram differs from bid histogram"; });
    }
    for (int k = 0; 2 * k <= m; ++k) {
      const ExactInt expected = bid_count(m, k);
      const ExactInt seen = static_cast<std::size_t>(k) < hist.size() ? ExactInt(hist[k]) : ExactInt(0);
      r.check(seen == expected, [&] {
        return "n " + std::to_string(m) + " k " + std::to_string(k) + ": " + to_string(seen) + " != bid_count " +
               to_string(expected);
      });
    }
  }
  return r;
}

Report verify_td_oracle(int n, std::size_t cap) {
  Report r("td-oracle n<=" + std::to_string(n));
  for (int m = 1; m <= n; ++m) {
    DistanceTable table(m, Generators::Transpositions, cap);
    std::uint64_t exact = 0, total = 0;
    for (const auto& s : all_sequences(m)) {
      const int lb = td_lower_bound(s), d = table.distance(s);
      ++total;
      exact += lb == d;
      r.check(lb <= d, [&] { return seq_string(s) + ": bound " + std::to_string(lb) + " > td " + std::to_string(d); });
    }
    r.add_info("n=" + std::to_string(m) + " bound exact", ratio(exact, total));
  }
  return r;
}

Report verify_rev_oracle(int n, std::size_t cap) {
  Report r("rev-oracle n<=" + std::to_string(n));
  for (int m = 1; m <= n; ++m) {
    const std::size_t mm = static_cast<std::size_t>(m);
    DistanceTable table(mm, Generators::Reversals, cap);
    std::uint64_t total = 0, exact = 0, bp_agree = 0, greedy = 0, two_rev = 0;
    for (const auto& a : all_signed_permutations(mm)) {
      ++total;
      const std::string tag = to_string(a);
      const int lb = rev_lower_bound(a), d = table.distance(a.values());
      r.check(lb <= d, [&] { return tag + ": bound " + std::to_string(lb) + " > d_r " + std::to_string(d); });
      exact += lb == d;
      bp_agree += breakpoint_bound(a) == lb;
      greedy += greedy_reversal_sort(a).sorted;

      const PlanePermutation p = reversal_plane(a);
      const std::size_t base = cycle_count(p.pi());
      bool exists = false;
      for (std::size_t i = 1; i <= mm; ++i) {
        for (std::size_t j = i; j <= mm; ++j) {
          const Reversal rv{i, j};
          const PlanePermutation q = apply(p, rv.as_block_interchange(mm));
          exists = exists || cycle_count(q.pi()) == base + 2;
          r.check(q.s() == skew_seq(apply_reversal(a, rv)).seq,
                  [&] { return tag + ": reversal and restricted block interchange disagree"; });
        }
      }
      const auto found = find_2_reversal(p);
      two_rev += exists;
      r.check(found.has_value() == exists, [&] { return tag + ": find_2_reversal disagrees with exhaustive search"; });
      if (found) {
        r.check(cycle_count(apply(p, found->as_block_interchange(mm)).pi()) == base + 2,
                [&] { return tag + ": returned reversal is not a 2-reversal"; });
      }
    }
    const std::string key = "n=" + std::to_string(m);
    r.add_info(key + " bound exact", ratio(exact, total));
    r.add_info(key + " breakpoint agreement", ratio(bp_agree, total));
    r.add_info(key + " 2-reversal exists", ratio(two_rev, total));
    r.add_info(key + " greedy 2-reversal sort reaches identity", ratio(greedy, total));
  }
  return r;
}

Report verify_max_gap(int exhaustive_max, int sample_n, std::size_t samples, std::uint64_t seed) {
  Report r("max-gap");
  for (int m = 1; m <= exhaustive_max; ++m) {
    for (const auto& s : all_sequences(m)) {
      const Permutation alpha = Permutation::from_one_line(s);
      const int closed = max_cycle_gap(alpha), brute = brute_max_cycle_gap(alpha);
      r.check(closed == brute, [&] {
        return to_cycle_string(alpha) + ": " + std::to_string(closed) + " != brute " + std::to_string(brute);
      });
    }
  }
  if (samples > 0 && sample_n >= 1) {
    std::mt19937_64 rng(seed);
    Sequence s = identity_sequence(sample_n);
    for (std::size_t c = 0; c < samples; ++c) {
      std::shuffle(s.begin(), s.end(), rng);
      const Permutation alpha = Permutation::from_one_line(s);
      const int closed = max_cycle_gap(alpha), brute = brute_max_cycle_gap(alpha);
      r.check(closed == brute, [&] {
        return to_cycle_string(alpha) + ": " + std::to_string(closed) + " != brute " + std::to_string(brute);
      });
    }
    r.add_info("random alpha at n=" + std::to_string(sample_n), std::to_string(samples));
  }
  return r;
}

Report verify_conjectures(int n, unsigned jobs) {
  Report r("conjectures n<=" + std::to_string(n));
  for (int m = 1; m <= n; ++m) {
    for (Conjecture c : {Conjecture::SameCycleExact, Conjecture::SameCycleAll}) {
      const auto rep = conjecture_scan(static_cast<std::size_t>(m), c, jobs);
      const std::string name = c == Conjecture::SameCycleExact ? "7.1" : "7.2";
      r.check(rep.counterexamples.empty(), [&] {
        return name + " n=" + std::to_string(m) + ": counterexample " + to_string(rep.counterexamples.front());
      });
      r.add_info(name + " n=" + std::to_string(m) + " scanned", std::to_string(rep.scanned));
    }
  }
  return r;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {"eq3.3", 8, 10, "NTAE totals over U_D against higher cycle counts"},
      {"f-rec", 7, 9, "f recurrence, its claims, reflection, parity, representative independence"},
      {"cor4.2", 8, 10, "p_k^lambda recurrence over splits of lambda"},
      {"stirling", 200, 2000, "Stirling recurrence from exceedance totals"},
      {"zagier-stanley", 10, 12, "xi_{1,k}(n) brute force vs closed form and recurrence"},
      {"trisection", 4, 5, "one-face maps: |NTAE| = 2g"},
      {"bijection", 6, 7, "slice/glue bijection |Y1| = |Y2| + |Y3|"},
      {"exceedance", 8, 10, "exceedance totals and diagonal classification of S_n"},
      {"p1", 8, 10, "p_1^lambda: closed forms, Stanley's sum, recurrence, enumeration"},
      {"w-identities", 6, 8, "factorization counts W: symmetry and exchange"},
      {"bid-oracle", 8, 9, "block-interchange distance vs BFS, sorter replay, bid_k"},
      {"rev-oracle", 6, 7, "reversal bounds vs BFS, 2-reversal search"},
      {"td-oracle", 7, 9, "transposition lower bound vs BFS"},
      {"max-gap", 6, 7, "max over gamma of |C(alpha gamma) - C(gamma)|"},
  };
  return all;
}

Report run_suite(std::string_view name, int n, const SuiteOptions& opt) {
  auto it = std::find_if(suites().begin(), suites().end(), [&](const SuiteInfo& s) { return s.name == name; });
  if (it == suites().end()) throw DomainError("unknown suite: " + std::string(name));
  if (n < 1) throw DomainError("suite size must be at least 1");
  const int limit = opt.allow_large ? it->hard_limit : it->default_limit;
  if (n > limit) {
    throw CapExceeded("suite " + it->name + ": n = " + std::to_string(n) + " exceeds the limit " +
                      std::to_string(limit) + (opt.allow_large ? "" : " (use --allow-large)"));
  }
  const unsigned jobs = opt.jobs;
  Report r(std::string(name) + " n<=" + std::to_string(n));
  auto each_table = [&](auto&& fn) {
    for (int m = 1; m <= n; ++m) fn(tabulate_all(m, jobs, limit));
  };
  if (name == "eq3.3") {
    each_table([&](const CountTable& t) { r.merge(verify_k_sum_identity(t)); });
  } else if (name == "f-rec") {
    each_table([&](const CountTable& t) {
      r.merge(verify_f_recurrence(t));
      r.merge(verify_parity(t));
    });
    for (int m = 1; m <= n; ++m) r.merge(verify_representative_independence(m, jobs));
  } else if (name == "cor4.2") {
    each_table([&](const CountTable& t) { r.merge(verify_split_recurrence(t)); });
  } else if (name == "stirling") {
    r.merge(verify_stirling_recurrence(n));
  } else if (name == "zagier-stanley") {
    r.merge(zagier_stanley_check(n, jobs));
  } else if (name == "trisection") {
    for (int m = 1; m <= n; ++m) r.merge(verify_trisection(m, jobs));
  } else if (name == "bijection") {
    for (int m = 1; m <= n; ++m) r.merge(verify_bijection_all(m, jobs));
  } else if (name == "exceedance") {
    for (int m = 1; m <= n; ++m) {
      r.merge(verify_exceedance(m));
      r.merge(verify_hat_classification(tabulate_all(m, jobs, limit)));
    }
  } else if (name == "p1") {
    each_table([&](const CountTable& t) { r.merge(verify_p1(t)); });
  } else if (name == "w-identities") {
    for (int m = 1; m <= n; ++m) r.merge(verify_w_identities(m));
  } else if (name == "bid-oracle") {
    r.merge(verify_bid_oracle(n, n, opt.cap));
  } else if (name == "rev-oracle") {
    r.merge(verify_rev_oracle(n, opt.cap));
  } else if (name == "td-oracle") {
    r.merge(verify_td_oracle(n, opt.cap));
  } else if (name == "max-gap") {
    r.merge(verify_max_gap(std::min(n, 5), n >= 6 ? n : 0, n >= 6 ? 10'000 : 0, opt.seed));
  }
  return r;
}

}  // namespace pperm
