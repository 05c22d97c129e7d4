#include "pperm/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pperm/parallel.hpp"

namespace pperm {

void validate_sequence(std::span<const Label> s) {
  std::vector<char> seen(s.size() + 1, 0);
  for (Label x : s) {
    if (x < 1 || x > static_cast<Label>(s.size()) || seen[x]) {
      throw DomainError("not a permutation of 1..n");
    }
    seen[x] = 1;
  }
}

Sequence identity_sequence(std::size_t n) {
  Sequence s(n);
  std::iota(s.begin(), s.end(), Label{1});
  return s;
}

Sequence apply_transposition(std::span<const Label> s, std::size_t i, std::size_t j, std::size_t k) {
  return apply_block_interchange(s, BlockInterchange{i, j, j + 1, k});
}

Sequence apply_block_interchange(std::span<const Label> s, const BlockInterchange& h) {
  if (!(1 <= h.i && h.i <= h.j && h.j < h.k && h.k <= h.l && h.l <= s.size())) {
    throw DomainError("invalid block interchange " + to_string(h) + " for a sequence of length " +
                      std::to_string(s.size()));
  }
  std::vector<Label> bar{0};
  bar.insert(bar.end(), s.begin(), s.end());
  auto swapped = swap_blocks(bar, h);
  return Sequence(swapped.begin() + 1, swapped.end());
}

Permutation bar_cycle(std::span<const Label> s) {
  validate_sequence(s);
  std::vector<Label> bar{0};
  bar.insert(bar.end(), s.begin(), s.end());
  return Permutation::cycle(bar);
}

Permutation p_t(std::size_t n) {
  std::vector<Label> c;
  for (Label x = static_cast<Label>(n); x >= 0; --x) c.push_back(x);
  return Permutation::cycle(c);
}

Permutation cycle_graph_permutation(std::span<const Label> s) { return compose(p_t(s.size()), bar_cycle(s)); }

PlanePermutation transposition_plane(std::span<const Label> s) {
  validate_sequence(s);
  std::vector<Label> bar{0};
  bar.insert(bar.end(), s.begin(), s.end());
  return PlanePermutation(std::move(bar), cycle_graph_permutation(s));
}

std::vector<Permutation> default_gammas(std::span<const Label> s) {
  Permutation pi = cycle_graph_permutation(s);
  return {inverse(pi), Permutation::identity(pi.domain())};
}

int td_lower_bound(std::span<const Label> s, std::span<const Permutation> gammas) {
  Permutation pi = cycle_graph_permutation(s);
  int best = 0;
  for (const auto& g : gammas) {
    if (!g.same_domain(pi)) throw DomainError("td_lower_bound: gamma must act on {0..n}");
    auto a = cycle_counts(compose(pi, g));
    auto b = cycle_counts(g);
    auto gap = [](std::size_t x, std::size_t y) { return x > y ? x - y : y - x; };
    std::size_t m = std::max({gap(a.total, b.total), gap(a.odd, b.odd), gap(a.even, b.even)});
    best = std::max(best, static_cast<int>((m + 1) / 2));
  }
  return best;
}

int td_lower_bound(std::span<const Label> s) {
  auto g = default_gammas(s);
  return td_lower_bound(s, g);
}

int bid(std::span<const Label> s) {
  const std::size_t c = cycle_count(cycle_graph_permutation(s));
  const std::size_t gap = s.size() + 1 - c;
  if (gap % 2 != 0) throw InvariantBreach("bid: n + 1 - C(p_t s-bar) is odd");
  return static_cast<int>(gap / 2);
}

std::vector<BidStep> bid_sort(std::span<const Label> s) {
  PlanePermutation p = transposition_plane(s);
  const std::size_t n = s.size();
  std::vector<BidStep> steps;
  for (;;) {
    const auto& bar = p.s();
    // Largest x in [1, n-1] with x+1 before x.
    std::optional<Label> x;
    for (Label v = static_cast<Label>(n) - 1; v >= 1; --v) {
      if (p.position(v + 1) < p.position(v)) {
        x = v;
        break;
      }
    }
    if (!x) break;
    const std::size_t k = p.position(*x) + 1;  // s_{k-1} = x
    const std::size_t i = p.position(*x + 1);  // s_i = x + 1
    Label y = *x + 1;
    for (std::size_t t = i; t + 1 < k; ++t) y = std::max(y, bar[t]);
    const std::size_t j = p.position(y);
    const std::size_t l = (y == static_cast<Label>(n)) ? n : p.position(y + 1) - 1;
    BlockInterchange h = (l + 1 == k) ? BlockInterchange{i, j, j + 1, l} : BlockInterchange{i, j, k, l};
    const TransposeCase kind = classify(p, h);
    const std::size_t before = cycle_count(p.pi());
    p = apply(p, h);
    if (cycle_count(p.pi()) != before + 2) throw InvariantBreach("bid_sort: step did not add two cycles");
    steps.push_back({h, kind});
  }
  return steps;
}

ExactInt bid_count(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n) throw DomainError("bid_count requires 0 <= 2k <= n");
  ExactInt num = 2 * stirling_first(n + 2, n + 1 - 2 * k);
  return exact_div(num, ExactInt(n + 1) * (n + 2), "bid_count");
}

int max_cycle_gap(const Permutation& alpha) {
  return static_cast<int>(alpha.size() - cycle_count(alpha));
}

int brute_max_cycle_gap(const Permutation& alpha) {
  const std::size_t n = alpha.size();
  if (n > 8) throw DomainError("brute_max_cycle_gap: n too large");
  std::vector<Slot> g(n), prod(n);
  std::iota(g.begin(), g.end(), Slot{0});
  const auto& a = alpha.slots();
  long best = 0;
  do {
    for (std::size_t x = 0; x < n; ++x) prod[x] = a[g[x]];
    long d = static_cast<long>(cycle_count(prod)) - static_cast<long>(cycle_count(g));
    best = std::max(best, std::labs(d));
  } while (std::next_permutation(g.begin(), g.end()));
  return static_cast<int>(best);
}

// --- signed --------------------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<Label> values) : values_(std::move(values)) {
  std::vector<Label> mags = magnitudes();
  validate_sequence(mags);
}

SignedPermutation::SignedPermutation(std::span<const Label> magnitudes, std::string_view signs) {
  if (magnitudes.size() != signs.size()) throw DomainError("sign word length differs from n");
  validate_sequence(magnitudes);
  for (std::size_t t = 0; t < signs.size(); ++t) {
    if (signs[t] != '+' && signs[t] != '-') throw DomainError("sign word must be over {+,-}");
    values_.push_back(signs[t] == '-' ? -magnitudes[t] : magnitudes[t]);
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) { return SignedPermutation(identity_sequence(n)); }

std::vector<Label> SignedPermutation::magnitudes() const {
  std::vector<Label> m;
  for (Label v : values_) m.push_back(std::llabs(v));
  return m;
}

std::string SignedPermutation::signs() const {
  std::string w;
  for (Label v : values_) w.push_back(v < 0 ? '-' : '+');
  return w;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (values_[t] != static_cast<Label>(t + 1)) return false;
  }
  return true;
}

SignedPermutation parse_signed(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<Label> vals;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
      throw ParseError("signed entries need an explicit sign: '" + tok + "'");
    }
    auto v = parse_labels(tok.substr(1));
    if (v.size() != 1 || v[0] <= 0) throw ParseError("bad signed entry: '" + tok + "'");
    vals.push_back(tok[0] == '-' ? -v[0] : v[0]);
  }
  if (vals.empty()) throw ParseError("empty signed permutation");
  try {
    return SignedPermutation(std::move(vals));
  } catch (const DomainError& e) {
    throw ParseError(std::string("not a signed permutation: ") + e.what());
  }
}

std::string to_string(const SignedPermutation& a) {
  std::ostringstream os;
  for (std::size_t t = 0; t < a.n(); ++t) {
    Label v = a.values()[t];
    os << (t ? " " : "") << (v < 0 ? '-' : '+') << std::llabs(v);
  }
  return os.str();
}

BlockInterchange Reversal::as_block_interchange(std::size_t n) const {
  if (!(1 <= i && i <= j && j <= n)) throw DomainError("invalid reversal");
  return BlockInterchange{i, j, 2 * n + 1 - j, 2 * n + 1 - i};
}

SignedPermutation apply_reversal(const SignedPermutation& a, const Reversal& r) {
  if (!(1 <= r.i && r.i <= r.j && r.j <= a.n())) throw DomainError("invalid reversal");
  std::vector<Label> v = a.values();
  for (std::size_t t = 0; t <= r.j - r.i; ++t) v[r.i - 1 + t] = -a.values()[r.j - 1 - t];
  return SignedPermutation(std::move(v));
}

SkewSymmetricSeq skew_seq(const SignedPermutation& a) {
  SkewSymmetricSeq out;
  out.seq.push_back(0);
  for (Label v : a.values()) out.seq.push_back(v);
  for (std::size_t t = a.n(); t-- > 0;) out.seq.push_back(-a.values()[t]);
  out.exact = std::any_of(a.values().begin(), a.values().end(), [](Label v) { return v < 0; });
  return out;
}

void validate_skew(std::span<const Label> seq) {
  if (seq.empty() || seq.size() % 2 == 0 || seq[0] != 0) throw DomainError("not a skew-symmetric sequence");
  const std::size_t n = (seq.size() - 1) / 2;
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    if (seq[k] != -seq[2 * n + 1 - k]) throw DomainError("not a skew-symmetric sequence");
  }
  std::vector<Label> first(seq.begin() + 1, seq.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  for (Label& x : first) x = std::llabs(x);
  validate_sequence(first);
}

SignedPermutation signed_from_skew(std::span<const Label> seq) {
  validate_skew(seq);
  const std::size_t n = (seq.size() - 1) / 2;
  return SignedPermutation(std::vector<Label>(seq.begin() + 1, seq.begin() + 1 + static_cast<std::ptrdiff_t>(n)));
}

Permutation p_r(std::size_t n) {
  std::vector<Label> c;
  const Label m = static_cast<Label>(n);
  for (Label x = 1; x <= m; ++x) c.push_back(-x);
  for (Label x = m; x >= 0; --x) c.push_back(x);
  return Permutation::cycle(c);
}

PlanePermutation reversal_plane(const SignedPermutation& a) {
  auto sk = skew_seq(a);
  return PlanePermutation::with_diagonal(sk.seq, inverse(p_r(a.n())));
}

int rev_lower_bound(const SignedPermutation& a) {
  auto p = reversal_plane(a);
  const std::size_t c = cycle_count(p.pi());
  const std::size_t gap = 2 * a.n() + 1 - c;
  return static_cast<int>((gap + 1) / 2);
}

std::size_t BreakpointGraph::cycle_count() const {
  const std::size_t c = pperm::cycle_count(compose(theta1, theta2));
  if (c % 2 != 0) throw InvariantBreach("breakpoint graph: C(theta1 theta2) is odd");
  return c / 2;
}

BreakpointGraph breakpoint_graph(const SignedPermutation& a) {
  const Label n = static_cast<Label>(a.n());
  std::vector<Label> b{0};
  for (Label v : a.values()) {
    b.push_back(-v);
    b.push_back(v);
  }
  b.push_back(-(n + 1));
  std::vector<std::vector<Label>> black, grey;
  for (std::size_t t = 0; t + 1 < b.size(); t += 2) black.push_back({b[t], b[t + 1]});
  for (Label x = 0; x <= n; ++x) grey.push_back({x, -(x + 1)});
  return BreakpointGraph{b, Permutation::from_cycles(black), Permutation::from_cycles(grey)};
}

int breakpoint_bound(const SignedPermutation& a) {
  auto g = breakpoint_graph(a);
  const long n = static_cast<long>(a.n());
  const long via_bg = n + 1 - static_cast<long>(g.cycle_count());
  const long c = static_cast<long>(pperm::cycle_count(compose(g.theta1, g.theta2)));
  if ((2 * n + 2 - c) % 2 != 0 || (2 * n + 2 - c) / 2 != via_bg) {
    throw InvariantBreach("breakpoint bound: the two forms disagree");
  }
  return static_cast<int>(via_bg);
}

std::optional<Reversal> find_2_reversal(const PlanePermutation& p) {
  validate_skew(p.s());
  const std::size_t n = (p.n() - 1) / 2;
  if (!(p.diagonal() == inverse(p_r(n)))) throw DomainError("find_2_reversal: diagonal must be p_r^{-1}");
  const auto& s = p.s();
  const std::size_t base = cycle_count(p.pi());

  std::vector<Reversal> candidates;
  for (std::size_t q = 0; q < n; ++q) {  // q = i - 1
    const std::size_t target = p.position(p.pi()(s[q]));
    if (target < n + 1) continue;
    const std::size_t i = q + 1;
    const std::size_t j = 2 * n - target;
    if (j + 1 == i) {
      candidates.push_back({i, n});  // critical: Case-2 transpose through s_{i-1}, s_n and n
    } else if (i <= j) {
      candidates.push_back({i, j});
    } else {
      candidates.push_back({j + 1, i - 1});
    }
  }
  for (const auto& r : candidates) {
    if (cycle_count(apply(p, r.as_block_interchange(n)).pi()) == base + 2) return r;
  }
  return std::nullopt;
}

GreedyReversalResult greedy_reversal_sort(const SignedPermutation& a) {
  GreedyReversalResult out{{}, a, a.is_identity()};
  while (!out.sorted) {
    auto r = find_2_reversal(reversal_plane(out.final_state));
    if (!r) break;
    out.steps.push_back(*r);
    out.final_state = apply_reversal(out.final_state, *r);
    out.sorted = out.final_state.is_identity();
  }
  return out;
}

bool n_and_sn_same_cycle(const SignedPermutation& a) {
  auto p = reversal_plane(a);
  const Label n = static_cast<Label>(a.n());
  const Label sn = p.s()[a.n()];
  for (Label y = p.pi()(n);; y = p.pi()(y)) {
    if (y == sn) return true;
    if (y == n) return false;
  }
}

bool critical_hypothesis(const SignedPermutation& a) {
  auto p = reversal_plane(a);
  const std::size_t n = a.n();
  for (std::size_t i = 1; i <= n; ++i) {
    if (p.pi()(p.s()[i - 1]) == p.s()[2 * n + 1 - i]) return true;
  }
  return false;
}

std::vector<Sequence> all_sequences(std::size_t n) {
  std::vector<Sequence> out;
  Sequence s = identity_sequence(n);
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  for (const auto& m : all_sequences(n)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Label> v = m;
      for (std::size_t t = 0; t < n; ++t) {
        if ((mask >> t) & 1) v[t] = -v[t];
      }
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

ConjectureReport conjecture_scan(std::size_t n, Conjecture which, unsigned jobs) {
  auto all = all_signed_permutations(n);
  // Partition by the magnitude of the first entry.
  struct Part {
    std::size_t scanned = 0;
    std::vector<SignedPermutation> bad;
  };
  auto parts = run_partitioned<Part>(n, jobs, [&](std::size_t part) {
    Part out;
    for (const auto& a : all) {
      if (static_cast<std::size_t>(std::llabs(a.values()[0])) != part + 1) continue;
      if (which == Conjecture::SameCycleExact) {
        if (!skew_seq(a).exact || !critical_hypothesis(a)) continue;
      }
      ++out.scanned;
      if (!n_and_sn_same_cycle(a)) out.bad.push_back(a);
    }
    return out;
  });
  ConjectureReport rep{n, which, 0, {}};
  for (auto& p : parts) {
    rep.scanned += p.scanned;
    rep.counterexamples.insert(rep.counterexamples.end(), p.bad.begin(), p.bad.end());
  }
  return rep;
}

}  // namespace pperm
