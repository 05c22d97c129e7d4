#pragma once

// Exhaustive enumeration over U_D (plane permutations with a fixed diagonal)
// and over S_n, with exact checks of the counting identities built on it.
//
// Notation: D has cycle type lambda, pi has cycle type eta, k = l(eta),
// a = Exc(p). f_{eta,lambda}(n, a) counts p in U_D by (eta, a);
// p_{a,k}^lambda and p_k^lambda are its marginals.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "pperm/bfs.hpp"
#include "pperm/exact.hpp"
#include "pperm/partition.hpp"
#include "pperm/plane_perm.hpp"
#include "pperm/report.hpp"

namespace pperm {

inline constexpr int kDefaultEnumLimit = 10;
inline constexpr const char* kTableSchema = "pperm.table.v1";

/// Number of independent parts U_D is split into for parallel work.
std::size_t u_d_part_count(const Permutation& D);
/// Calls fn for every p in U_D whose top row has s_1 = the part-th
/// smallest non-anchor label. The anchor s_0 is the smallest label.
void for_each_in_U_D_part(const Permutation& D, std::size_t part,
                          const std::function<void(const PlanePermutation&)>& fn,
                          int limit = kDefaultEnumLimit);
/// All (n-1)! elements of U_D in lexicographic order of the top row.
/// Throws CapExceeded when n > limit.
void for_each_in_U_D(const Permutation& D, const std::function<void(const PlanePermutation&)>& fn,
                     int limit = kDefaultEnumLimit);
std::vector<PlanePermutation> enumerate_U_D(const Permutation& D, int limit = kDefaultEnumLimit);

struct CountRow {
  Partition lambda;
  Partition eta;
  int k = 0;
  int a = 0;
  ExactInt count;
};

/// Exact counts of U_D by (type of D, type of pi, Exc).
class CountTable {
 public:
  explicit CountTable(int n = 0) : n_(n) {}

  int n() const { return n_; }
  void add(const Partition& lambda, const Partition& eta, int a, const ExactInt& count = 1);
  void merge(const CountTable& other);

  /// f_{eta,lambda}(n, a) and f_{eta,lambda}(n).
  ExactInt f(const Partition& eta, const Partition& lambda, int a) const;
  ExactInt f(const Partition& eta, const Partition& lambda) const;
  /// p_{a,k}^lambda(n) and p_k^lambda(n).
  ExactInt p(const Partition& lambda, int a, int k) const;
  ExactInt p(const Partition& lambda, int k) const;
  /// |U_D| for the tabulated D of type lambda.
  ExactInt total(const Partition& lambda) const;
  bool has_diagonal(const Partition& lambda) const;
  std::vector<Partition> diagonal_types() const;

  /// Rows ordered by (lambda, eta, a) with partitions compared as part lists.
  std::vector<CountRow> rows() const;

 private:
  using Key = std::tuple<Partition, Partition, int>;
  int n_;
  std::map<Key, ExactInt> cells_;
  std::map<std::pair<Partition, Partition>, ExactInt> f_;
  std::map<std::tuple<Partition, int, int>, ExactInt> pak_;
  std::map<std::pair<Partition, int>, ExactInt> pk_;
  std::map<Partition, ExactInt> total_;
};

/// Counts U_D for D = canonical_of_type(lambda).
CountTable tabulate(const Partition& lambda, unsigned jobs = 1, int limit = kDefaultEnumLimit);
/// Same diagonal type, explicit representative.
CountTable tabulate_diagonal(const Permutation& D, unsigned jobs = 1, int limit = kDefaultEnumLimit);
/// tabulate for every lambda of n.
CountTable tabulate_all(int n, unsigned jobs = 1, int limit = kDefaultEnumLimit);

std::string to_csv(const CountTable& t);
nlohmann::json to_json(const CountTable& t);

// --- identities over a full table ----------------------------------------

/// sum_a (n-a-k) p_{a,k}^lambda = sum_{i>=1} C(k+2i, k-1) p_{k+2i}^lambda.
Report verify_k_sum_identity(const CountTable& t);
/// The f_{eta,lambda} recurrence (cross-multiplied), its two claims and the
/// reflection q^lambda f_{eta,lambda}(n,a) = q^eta f_{lambda,eta}(n,n-1-a).
Report verify_f_recurrence(const CountTable& t);
/// f_{eta,lambda} = 0 unless l(eta) + l(lambda) = n - 1 (mod 2).
Report verify_parity(const CountTable& t);
/// The p_k^lambda recurrence over splits of lambda, with exact division.
Report verify_split_recurrence(const CountTable& t);
/// p_k^lambda computed from a second representative of each type agrees.
Report verify_representative_independence(int n, unsigned jobs = 1);

/// Closed form for lambda = 1^a 2^b, 1^a 2^b 3, 1^a 2^b 4; nullopt otherwise.
std::optional<ExactInt> p1_closed_form(const Partition& lambda);
/// Stanley's explicit double sum.
ExactInt p1_stanley(const Partition& lambda);
/// Closed form, Stanley, the p_1 recurrence and the table must all agree.
Report verify_p1(const CountTable& t);

/// xi_{1,k}(n) for k = 0..n by enumerating n-cycles omega and counting
/// cycles of omega (1 2 ... n).
std::vector<ExactInt> xi_bruteforce(int n, unsigned jobs = 1, int limit = kDefaultEnumLimit);
/// 2 C(n+1, k) / (n (n+1)) when n - k is even, else 0.
ExactInt xi_formula(int n, int k);
/// Brute force vs closed form and the xi recurrence, for 1 <= n <= n_max.
Report zagier_stanley_check(int n_max, unsigned jobs = 1);

/// The Stirling recurrence with exact division by n + 1 - k, 1 <= k <= n <= n_max.
Report verify_stirling_recurrence(int n_max);

/// (formula over Stirling numbers, C(n,2) C(n-1,k)) for the total number of
/// exceedances of permutations of [n] with k cycles.
std::pair<ExactInt, ExactInt> exceedance_totals(int n, int k);
/// p_{a,k}(n) indexed [a][k] by enumerating S_n.
std::vector<std::vector<ExactInt>> exceedance_cycle_table(int n);
/// Both exceedance formulas against enumeration, the aggregate identity
/// over p_{a,k}(n), and p_{0,n} = 1, p_{1,n-1} = C(n,2).
Report verify_exceedance(int n);
/// q^lambda p_{a,k}^lambda = (n-1)! phat_{a,k}^lambda, where phat classifies
/// S_n by the type of the diagonal of ((1 .. n), pi).
Report verify_hat_classification(const CountTable& t);

struct BijectionCounts {
  int b = 0;
  ExactInt y1, y2, y3;
};

/// Slice/glue on U_D: every (p, NTAE) slices to a distinct element of
/// Y2 or Y3, glue inverts slice, and |Y1| = |Y2| + |Y3| for every b.
Report verify_bijection(const Permutation& D, std::vector<BijectionCounts>* counts = nullptr);
/// verify_bijection for every D on [n].
Report verify_bijection_all(int n, unsigned jobs = 1);

/// Every fixed-point-free involution on [2m].
std::vector<Permutation> fixed_point_free_involutions(int m);
/// For every such D and p in U_D: AEx = m + 1 and |NTAE| = 2g where
/// C(pi) = m + 1 - 2g. Genus totals are checked against the Harer-Zagier
/// recurrence.
Report verify_trisection(int m, unsigned jobs = 1);

/// W_{mu,eta}^lambda keyed by (lambda, mu, eta): factorizations of a fixed
/// gamma of type lambda as alpha beta.
using WTable = std::map<std::tuple<Partition, Partition, Partition>, ExactInt>;
WTable w_table(int n);
ExactInt W_count(const Partition& lambda, const Partition& mu, const Partition& eta);
/// Symmetry, the q-weighted exchange identity, the eta = 1^n column and the
/// link to xi.
Report verify_w_identities(int n);

/// Structural invariants of plane permutations: Exc = AEx(D) - 1, the cycle
/// bound and parity, classify vs observed cycle change, rotation
/// invariance, the inverse block interchange, conjugation and the
/// minima ordering after Case-2 transposes. Exhaustive for n <= n_exhaustive,
/// then random_cases samples with 3 <= n <= n_random_max.
Report structural_sweep(int n_exhaustive, std::size_t random_cases, int n_random_max, std::uint64_t seed);

}  // namespace pperm
