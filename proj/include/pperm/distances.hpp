#pragma once

// Transposition, block-interchange and signed-reversal distances expressed
// through plane permutations.
//
// For a sequence s = a_1 ... a_n on [n]:
//   s-bar = (0 a_1 ... a_n)           an (n+1)-cycle on [n]* = {0..n}
//   p_t   = (n n-1 ... 1 0)
// and (s-bar, p_t s-bar) is the plane permutation with diagonal p_t^{-1}.
// For a signed permutation a:
//   s~    = (0 a_1 ... a_n -a_n ... -a_1)  on {-n..n}
//   p_r   = (-1 -2 ... -n n n-1 ... 1 0)

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pperm/bfs.hpp"
#include "pperm/exact.hpp"
#include "pperm/plane_perm.hpp"

namespace pperm {

using Sequence = std::vector<Label>;

/// Throws DomainError unless s is a permutation of 1..n.
void validate_sequence(std::span<const Label> s);

/// Identity sequence 1 2 ... n.
Sequence identity_sequence(std::size_t n);

/// Swap [a_i..a_j] and [a_{j+1}..a_k], 1 <= i <= j < k <= n.
Sequence apply_transposition(std::span<const Label> s, std::size_t i, std::size_t j, std::size_t k);
/// Swap [a_i..a_j] and [a_k..a_l] (1-based; equal to positions in s-bar).
Sequence apply_block_interchange(std::span<const Label> s, const BlockInterchange& h);

Permutation bar_cycle(std::span<const Label> s);
Permutation p_t(std::size_t n);
/// p_t s-bar, whose cycles are those of the Bafna-Pevzner cycle graph.
Permutation cycle_graph_permutation(std::span<const Label> s);
/// (s-bar, p_t s-bar); its diagonal is p_t^{-1}.
PlanePermutation transposition_plane(std::span<const Label> s);

/// {(p_t s-bar)^{-1}, identity}: reproduces the Bafna-Pevzner bounds.
std::vector<Permutation> default_gammas(std::span<const Label> s);
/// max over gamma of ceil(max(|dC|, |dC_odd|, |dC_ev|) / 2), where the
/// differences compare p_t s-bar gamma with gamma.
int td_lower_bound(std::span<const Label> s, std::span<const Permutation> gammas);
int td_lower_bound(std::span<const Label> s);

/// Exact block-interchange distance (n + 1 - C(p_t s-bar)) / 2.
int bid(std::span<const Label> s);

struct BidStep {
  BlockInterchange h;
  TransposeCase kind;
};

/// Greedy sorter: each step raises C(p_t s-bar) by two, so the scenario
/// has exactly bid(s) steps.
std::vector<BidStep> bid_sort(std::span<const Label> s);

/// Number of sequences on [n] at block-interchange distance k.
ExactInt bid_count(int n, int k);

/// max over gamma in S_n of |C(alpha gamma) - C(gamma)| = n - C(alpha).
int max_cycle_gap(const Permutation& alpha);
/// Same maximum by trying every gamma (n <= 8).
int brute_max_cycle_gap(const Permutation& alpha);

// --- signed permutations -------------------------------------------------

class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Signed entries; magnitudes must form a permutation of 1..n.
  explicit SignedPermutation(std::vector<Label> values);
  SignedPermutation(std::span<const Label> magnitudes, std::string_view signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t n() const { return values_.size(); }
  const std::vector<Label>& values() const { return values_; }
  std::vector<Label> magnitudes() const;
  /// Word over {+,-}.
  std::string signs() const;
  bool is_identity() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<Label> values_;
};

/// "-3 +1 +2"; every entry must carry an explicit sign.
SignedPermutation parse_signed(std::string_view text);
std::string to_string(const SignedPermutation& a);

struct Reversal {
  std::size_t i = 0;
  std::size_t j = 0;

  /// The restricted block interchange (i, j, 2n+1-j, 2n+1-i) on s(a).
  BlockInterchange as_block_interchange(std::size_t n) const;
  friend bool operator==(const Reversal&, const Reversal&) = default;
};

SignedPermutation apply_reversal(const SignedPermutation& a, const Reversal& r);

struct SkewSymmetricSeq {
  std::vector<Label> seq;  // s_0 .. s_{2n}
  bool exact = false;
  std::size_t n() const { return (seq.size() - 1) / 2; }
};

SkewSymmetricSeq skew_seq(const SignedPermutation& a);
/// Throws DomainError unless seq is skew-symmetric over {-n..n} with s_0 = 0.
void validate_skew(std::span<const Label> seq);
SignedPermutation signed_from_skew(std::span<const Label> seq);

Permutation p_r(std::size_t n);
/// (s~, p_r s~); its diagonal is p_r^{-1}.
PlanePermutation reversal_plane(const SignedPermutation& a);

/// ceil((2n + 1 - C(p_r s~)) / 2)
int rev_lower_bound(const SignedPermutation& a);

struct BreakpointGraph {
  std::vector<Label> b;  // b_0 .. b_{2n+1}
  Permutation theta1;    // black edges (b_{2i} b_{2i+1})
  Permutation theta2;    // grey edges (i -(i+1))

  /// Alternating cycles: C(theta1 theta2) / 2.
  std::size_t cycle_count() const;
};

BreakpointGraph breakpoint_graph(const SignedPermutation& a);
/// n + 1 - C_BG(a); cross-checked against (2n + 2 - C(theta1 theta2)) / 2.
int breakpoint_bound(const SignedPermutation& a);

/// A reversal whose block interchange raises C(pi) by two, found through the
/// pairs pi(s_{i-1}) = s_{2n-j} (first half to second half) and the
/// critical Case-2 transpose through n and s_n. p must be skew-symmetric
/// with diagonal p_r^{-1}.
std::optional<Reversal> find_2_reversal(const PlanePermutation& p);

struct GreedyReversalResult {
  std::vector<Reversal> steps;
  SignedPermutation final_state;
  bool sorted = false;
};

/// Applies 2-reversals until sorted or none is found; never searches.
GreedyReversalResult greedy_reversal_sort(const SignedPermutation& a);

enum class Conjecture { SameCycleExact, SameCycleAll };

struct ConjectureReport {
  std::size_t n = 0;
  Conjecture which = Conjecture::SameCycleExact;
  std::size_t scanned = 0;
  std::vector<SignedPermutation> counterexamples;
};

/// True iff n and s_n lie in the same pi-cycle of reversal_plane(a).
bool n_and_sn_same_cycle(const SignedPermutation& a);
/// True iff pi(s_{i-1}) = s_{2n+1-i} for some 1 <= i <= n.
bool critical_hypothesis(const SignedPermutation& a);

/// Exhaustive scan over all signed permutations of [n]: SameCycleExact
/// checks instances that are exact and satisfy the critical hypothesis,
/// SameCycleAll checks every instance.
ConjectureReport conjecture_scan(std::size_t n, Conjecture which, unsigned jobs = 1);

/// All signed permutations of [n] in a fixed order (magnitudes in
/// lexicographic order, then sign masks ascending).
std::vector<SignedPermutation> all_signed_permutations(std::size_t n);
/// All sequences on [n] in lexicographic order.
std::vector<Sequence> all_sequences(std::size_t n);

}  // namespace pperm
