#include "pperm/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "pperm/bfs.hpp"
#include "pperm/parallel.hpp"

namespace pperm {

namespace {

std::string str(const ExactInt& v) { return to_string(v); }

void require_limit(std::size_t n, int limit, const char* what) {
  if (static_cast<long>(n) > limit) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the limit " +
                      std::to_string(limit));
  }
}

/// Cycle type straight from a slot image array.
Partition type_of_slots(std::span<const Slot> img) {
  std::vector<char> seen(img.size(), 0);
  std::vector<int> parts;
  for (std::size_t x = 0; x < img.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = img[y]) {
      seen[y] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

/// mu with kappa(mu, eta) > 0 for every odd split size >= 3, with kappa.
std::vector<std::pair<Partition, ExactInt>> split_terms(const Partition& eta) {
  std::vector<std::pair<Partition, ExactInt>> out;
  for (int pieces = 3; pieces <= eta.n(); pieces += 2) {
    for (const auto& mu : splits(eta, pieces)) out.emplace_back(mu, kappa(mu, eta));
  }
  return out;
}

class SplitCache {
 public:
  const std::vector<std::pair<Partition, ExactInt>>& operator()(const Partition& eta) {
    auto it = cache_.find(eta);
    if (it == cache_.end()) it = cache_.emplace(eta, split_terms(eta)).first;
    return it->second;
  }

 private:
  std::map<Partition, std::vector<std::pair<Partition, ExactInt>>> cache_;
};

/// Every permutation of [n] as a slot image array, in lexicographic order.
template <class Fn>
void for_each_slots(std::size_t n, Fn&& fn) {
  std::vector<Slot> img(n);
  std::iota(img.begin(), img.end(), Slot{0});
  do {
    fn(std::span<const Slot>(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

std::size_t exceedances_of_slots(std::span<const Slot> img) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < img.size(); ++x) c += img[x] > x;
  return c;
}

}  // namespace

// --- U_D ------------------------------------------------------------------

std::size_t u_d_part_count(const Permutation& D) { return D.size() <= 1 ? 1 : D.size() - 1; }

void for_each_in_U_D_part(const Permutation& D, std::size_t part,
                          const std::function<void(const PlanePermutation&)>& fn, int limit) {
  const std::size_t n = D.size();
  require_limit(n, limit, "U_D enumeration");
  if (part >= u_d_part_count(D)) throw DomainError("U_D part index out of range");
  if (n == 0) return;
  const auto& dom = D.domain();
  const Permutation Dinv = inverse(D);
  std::vector<Label> rest(dom.begin() + 1, dom.end());
  std::vector<Label> s(n);
  s[0] = dom[0];
  std::vector<Slot> img(n);
  auto emit = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      img[D.slot_of(s[i])] = Dinv.slots()[D.slot_of(s[(i + 1) % n])];
    }
    fn(PlanePermutation(s, Permutation::from_slots(dom, img)));
  };
  if (n == 1) {
    emit();
    return;
  }
  const Label head = rest[part];
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(part));
  s[1] = head;
  do {
    std::copy(rest.begin(), rest.end(), s.begin() + 2);
    emit();
  } while (std::next_permutation(rest.begin(), rest.end()));
}

void for_each_in_U_D(const Permutation& D, const std::function<void(const PlanePermutation&)>& fn, int limit) {
  for (std::size_t part = 0; part < u_d_part_count(D); ++part) for_each_in_U_D_part(D, part, fn, limit);
}

std::vector<PlanePermutation> enumerate_U_D(const Permutation& D, int limit) {
  std::vector<PlanePermutation> out;
  for_each_in_U_D(D, [&](const PlanePermutation& p) { out.push_back(p); }, limit);
  return out;
}

// --- CountTable -------------------------------------------------------------

void CountTable::add(const Partition& lambda, const Partition& eta, int a, const ExactInt& count) {
  cells_[{lambda, eta, a}] += count;
  f_[{eta, lambda}] += count;
  pak_[{lambda, a, eta.length()}] += count;
  pk_[{lambda, eta.length()}] += count;
  total_[lambda] += count;
}

void CountTable::merge(const CountTable& other) {
  if (other.n_ != n_) throw DomainError("CountTable::merge: different n");
  for (const auto& [key, c] : other.cells_) add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
}

namespace {
template <class Map, class Key>
ExactInt lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? ExactInt(0) : it->second;
}
}  // namespace

ExactInt CountTable::f(const Partition& eta, const Partition& lambda, int a) const {
  return lookup(cells_, Key{lambda, eta, a});
}
ExactInt CountTable::f(const Partition& eta, const Partition& lambda) const {
  return lookup(f_, std::pair{eta, lambda});
}
ExactInt CountTable::p(const Partition& lambda, int a, int k) const {
  return lookup(pak_, std::tuple{lambda, a, k});
}
ExactInt CountTable::p(const Partition& lambda, int k) const { return lookup(pk_, std::pair{lambda, k}); }
ExactInt CountTable::total(const Partition& lambda) const { return lookup(total_, lambda); }
bool CountTable::has_diagonal(const Partition& lambda) const { return total_.count(lambda) > 0; }

std::vector<Partition> CountTable::diagonal_types() const {
  std::vector<Partition> out;
  for (const auto& [lambda, c] : total_) out.push_back(lambda);
  return out;
}

std::vector<CountRow> CountTable::rows() const {
  std::vector<CountRow> out;
  for (const auto& [key, c] : cells_) {
    const auto& [lambda, eta, a] = key;
    out.push_back(CountRow{lambda, eta, eta.length(), a, c});
  }
  return out;
}

CountTable tabulate_diagonal(const Permutation& D, unsigned jobs, int limit) {
  const int n = static_cast<int>(D.size());
  require_limit(D.size(), limit, "tabulate");
  const Partition lambda = cycle_type(D);
  auto parts = run_partitioned<std::map<std::pair<Partition, int>, std::uint64_t>>(
      u_d_part_count(D), jobs, [&](std::size_t part) {
        std::map<std::pair<Partition, int>, std::uint64_t> local;
        for_each_in_U_D_part(
            D, part,
            [&](const PlanePermutation& p) {
              ++local[{type_of_slots(p.pi().slots()), static_cast<int>(exc_count(p))}];
            },
            limit);
        return local;
      });
  CountTable t(n);
  for (const auto& part : parts) {
    for (const auto& [key, c] : part) t.add(lambda, key.first, key.second, ExactInt(c));
  }
  return t;
}

CountTable tabulate(const Partition& lambda, unsigned jobs, int limit) {
  return tabulate_diagonal(canonical_of_type(lambda), jobs, limit);
}

CountTable tabulate_all(int n, unsigned jobs, int limit) {
  CountTable all(n);
  for (const auto& lambda : partitions_of(n)) all.merge(tabulate(lambda, jobs, limit));
  return all;
}

std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  os << "n,lambda,eta,k,a,count\n";
  for (const auto& r : t.rows()) {
    os << t.n() << ',' << r.lambda.to_string() << ',' << r.eta.to_string() << ',' << r.k << ',' << r.a << ','
       << to_string(r.count) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const CountTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows()) {
    rows.push_back({{"n", t.n()},
                    {"lambda", r.lambda.to_string()},
                    {"eta", r.eta.to_string()},
                    {"k", r.k},
                    {"a", r.a},
                    {"count", exact_json(r.count)}});
  }
  return {{"schema", kTableSchema}, {"columns", {"n", "lambda", "eta", "k", "a", "count"}}, {"rows", rows}};
}

// --- identities -------------------------------------------------------------

Report verify_k_sum_identity(const CountTable& t) {
  Report r("eq3.3 n=" + std::to_string(t.n()));
  const int n = t.n();
  for (const auto& lambda : t.diagonal_types()) {
    r.check(t.total(lambda) == factorial(n - 1),
            [&] { return "|U_D| != (n-1)! for lambda " + lambda.to_string(); });
    for (int k = 1; k <= n; ++k) {
      ExactInt lhs = 0, rhs = 0;
      for (int a = 0; a < n; ++a) lhs += (n - a - k) * t.p(lambda, a, k);
      for (int i = 1; k + 2 * i <= n; ++i) rhs += binomial(k + 2 * i, k - 1) * t.p(lambda, k + 2 * i);
      r.check(lhs == rhs, [&] {
        return "lambda " + lambda.to_string() + " k " + std::to_string(k) + ": " + str(lhs) + " != " + str(rhs);
      });
    }
  }
  return r;
}

Report verify_f_recurrence(const CountTable& t) {
  Report r("f-rec n=" + std::to_string(t.n()));
  const int n = t.n();
  const auto types = partitions_of(n);
  for (const auto& lambda : types) {
    if (!t.has_diagonal(lambda)) {
      r.fail("table lacks diagonal type " + lambda.to_string());
      return r;
    }
  }
  SplitCache split;
  auto split_sum = [&](const Partition& target, const Partition& diag) {
    ExactInt s = 0;
    for (const auto& [mu, kap] : split(target)) s += kap * t.f(mu, diag);
    return s;
  };
  for (const auto& eta : types) {
    for (const auto& lambda : types) {
      const std::string tag = "eta " + eta.to_string() + " lambda " + lambda.to_string();
      const ExactInt qe = q_lambda(eta), ql = q_lambda(lambda);
      // First claim: NTAE total over U_lambda^eta.
      ExactInt ntae = 0;
      for (int a = 0; a < n; ++a) ntae += (n - a - eta.length()) * t.f(eta, lambda, a);
      const ExactInt claim = split_sum(eta, lambda);
      r.check(ntae == claim, [&] { return tag + ": NTAE claim " + str(ntae) + " != " + str(claim); });
      // Reflection.
      for (int a = 0; a < n; ++a) {
        const ExactInt x = ql * t.f(eta, lambda, a), y = qe * t.f(lambda, eta, n - 1 - a);
        r.check(x == y, [&] { return tag + " a " + std::to_string(a) + ": reflection " + str(x) + " != " + str(y); });
      }
      if (eta.length() + lambda.length() >= n + 1) continue;
      const ExactInt num = ql * split_sum(eta, lambda) + qe * split_sum(lambda, eta);
      const ExactInt den = ql * (n + 1 - eta.length() - lambda.length());
      r.check(num % den == 0 && num / den == t.f(eta, lambda), [&] {
        return tag + ": recurrence gives " + str(num) + "/" + str(den) + ", table has " + str(t.f(eta, lambda));
      });
    }
  }
  return r;
}

Report verify_parity(const CountTable& t) {
  Report r("parity n=" + std::to_string(t.n()));
  const int n = t.n();
  for (const auto& row : t.rows()) {
    const int sum = row.eta.length() + row.lambda.length();
    r.check(sum % 2 == (n + 1) % 2 && sum <= n + 1, [&] {
      return "nonzero f for eta " + row.eta.to_string() + " lambda " + row.lambda.to_string();
    });
  }
  return r;
}

Report verify_split_recurrence(const CountTable& t) {
  Report r("cor4.2 n=" + std::to_string(t.n()));
  const int n = t.n();
  SplitCache split;
  for (const auto& lambda : t.diagonal_types()) {
    const ExactInt ql = q_lambda(lambda);
    for (int k = 1; k <= n; ++k) {
      if (lambda.length() >= n + 1 - k) continue;
      ExactInt num = 0;
      for (int i = 1; k + 2 * i <= n; ++i) num += binomial(k + 2 * i, k - 1) * t.p(lambda, k + 2 * i) * ql;
      bool complete = true;
      for (const auto& [mu, kap] : split(lambda)) {
        if (!t.has_diagonal(mu)) complete = false;
        num += kap * t.p(mu, k) * q_lambda(mu);
      }
      if (!complete) {
        r.fail("table lacks a split of " + lambda.to_string());
        continue;
      }
      const ExactInt den = ql * (n + 1 - k - lambda.length());
      const std::string tag = "lambda " + lambda.to_string() + " k " + std::to_string(k);
      try {
        const ExactInt v = exact_div(num, den, tag);
        r.check(v == t.p(lambda, k), [&] { return tag + ": " + str(v) + " != " + str(t.p(lambda, k)); });
      } catch (const InvariantBreach& e) {
        r.fail(e.what());
      }
    }
  }
  return r;
}

Report verify_representative_independence(int n, unsigned jobs) {
  Report r("representatives n=" + std::to_string(n));
  // Two relabelings: reversal x -> n+1-x, then a rotation if that fixes D.
  std::vector<Label> rev(n), rot(n);
  for (int x = 1; x <= n; ++x) {
    rev[x - 1] = n + 1 - x;
    rot[x - 1] = x % n + 1;
  }
  const Permutation alpha_rev = Permutation::from_one_line(rev), alpha_rot = Permutation::from_one_line(rot);
  for (const auto& lambda : partitions_of(n)) {
    const Permutation D1 = canonical_of_type(lambda);
    Permutation D2 = conjugate(D1, alpha_rev);
    if (D2 == D1) D2 = conjugate(D1, alpha_rot);
    const auto a = tabulate_diagonal(D1, jobs).rows(), b = tabulate_diagonal(D2, jobs).rows();
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].eta == b[i].eta && a[i].a == b[i].a && a[i].count == b[i].count;
    }
    r.check(same, [&] { return "lambda " + lambda.to_string() + ": counts depend on the representative"; });
  }
  return r;
}

std::optional<ExactInt> p1_closed_form(const Partition& lambda) {
  const int n = lambda.n();
  const auto m = lambda.multiplicities();
  const int a1 = m[1], a2 = n >= 2 ? m[2] : 0;
  std::vector<int> big;
  for (int part : lambda.parts()) {
    if (part > 2) big.push_back(part);
  }
  if (big.size() > 1 || (big.size() == 1 && big[0] != 3 && big[0] != 4)) return std::nullopt;
  if ((n - lambda.length()) % 2 != 0) return ExactInt(0);
  const ExactInt fact = factorial(n - 1);
  const int r = n - a1 - a2;
  if (big.empty()) return exact_div(fact, n + 1 - a1 - a2, "p1 closed form 1^a 2^b");
  if (big[0] == 3) return exact_div(fact * (2 * r - 3), ExactInt(2 * r) * (r - 2), "p1 closed form with a 3");
  return exact_div(fact * (r - 1), ExactInt(r - 2) * r, "p1 closed form with a 4");
}

ExactInt p1_stanley(const Partition& lambda) {
  const int n = lambda.n();
  const auto m = lambda.multiplicities();
  // coef[i] = sum over r with sum j r_j = i of the signed binomial product.
  std::vector<ExactInt> coef(n, 0);
  coef[0] = 1;
  for (int j = 1; j < n; ++j) {
    const std::int64_t top = j == 1 ? m[1] - 1 : m[j];
    std::vector<ExactInt> next(n, 0);
    for (int deg = 0; deg < n; ++deg) {
      if (coef[deg] == 0) continue;
      for (int rj = 0; deg + j * rj < n; ++rj) {
        ExactInt c = binomial(top, rj);
        if (c == 0 && top >= 0) break;
        if (j % 2 == 0 && rj % 2 == 1) c = -c;
        next[deg + j * rj] += coef[deg] * c;
      }
    }
    coef = std::move(next);
  }
  ExactInt sum = 0;
  for (int i = 0; i < n; ++i) sum += factorial(i) * factorial(n - 1 - i) * coef[i];
  return exact_div(sum, n, "Stanley p1 sum");
}

Report verify_p1(const CountTable& t) {
  Report r("p1 n=" + std::to_string(t.n()));
  const int n = t.n();
  SplitCache split;
  std::size_t closed = 0;
  for (const auto& lambda : t.diagonal_types()) {
    const std::string tag = "lambda " + lambda.to_string();
    const ExactInt enumerated = t.p(lambda, 1);
    try {
      const ExactInt st = p1_stanley(lambda);
      r.check(st == enumerated, [&] { return tag + ": Stanley " + str(st) + " != " + str(enumerated); });
      if (auto cf = p1_closed_form(lambda)) {
        ++closed;
        r.check(*cf == enumerated, [&] { return tag + ": closed form " + str(*cf) + " != " + str(enumerated); });
      }
    } catch (const InvariantBreach& e) {
      r.fail(tag + ": " + e.what());
    }
    if ((n - lambda.length()) % 2 != 0) {
      r.check(enumerated == 0, [&] { return tag + ": odd parity but p1 = " + str(enumerated); });
      continue;
    }
    const ExactInt ql = q_lambda(lambda);
    ExactInt rhs = factorial(n - 1) * ql;
    for (const auto& [mu, kap] : split(lambda)) rhs += kap * t.p(mu, 1) * q_lambda(mu);
    const ExactInt lhs = (n + 1 - lambda.length()) * enumerated * ql;
    r.check(lhs == rhs, [&] { return tag + ": p1 recurrence " + str(lhs) + " != " + str(rhs); });
  }
  r.add_info("n=" + std::to_string(n) + " closed-form shapes", std::to_string(closed));
  return r;
}

std::vector<ExactInt> xi_bruteforce(int n, unsigned jobs, int limit) {
  require_limit(static_cast<std::size_t>(n), limit, "xi");
  std::vector<ExactInt> out(n + 1, 0);
  if (n <= 0) return out;
  if (n == 1) {
    out[1] = 1;
    return out;
  }
  // epsilon = (0 1 ... n-1) on slots; omega = (0 w_1 ... w_{n-1}).
  auto parts = run_partitioned<std::vector<std::uint64_t>>(n - 1, jobs, [&](std::size_t part) {
    std::vector<std::uint64_t> local(n + 1, 0);
    std::vector<Slot> rest;
    for (Slot x = 1; x < static_cast<Slot>(n); ++x) {
      if (x != part + 1) rest.push_back(x);
    }
    std::vector<Slot> cyc(n), omega(n), prod(n);
    cyc[0] = 0;
    cyc[1] = static_cast<Slot>(part + 1);
    do {
      std::copy(rest.begin(), rest.end(), cyc.begin() + 2);
      for (int i = 0; i < n; ++i) omega[cyc[i]] = cyc[(i + 1) % n];
      for (int x = 0; x < n; ++x) prod[x] = omega[(x + 1) % n];
      ++local[cycle_count(prod)];
    } while (std::next_permutation(rest.begin(), rest.end()));
    return local;
  });
  for (const auto& part : parts) {
    for (int k = 0; k <= n; ++k) out[k] += part[k];
  }
  return out;
}

ExactInt xi_formula(int n, int k) {
  if (k < 1 || k > n || (n - k) % 2 != 0) return 0;
  return exact_div(2 * stirling_first(n + 1, k), ExactInt(n) * (n + 1), "xi closed form");
}

Report zagier_stanley_check(int n_max, unsigned jobs) {
  Report r("zagier-stanley n<=" + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const auto xs = xi_bruteforce(n, jobs, n_max);
    for (int k = 0; k <= n; ++k) {
      const ExactInt f = xi_formula(n, k);
      r.check(xs[k] == f, [&] {
        return "n " + std::to_string(n) + " k " + std::to_string(k) + ": brute " + str(xs[k]) + " != " + str(f);
      });
      if (k == 0 || (n - k) % 2 != 0) continue;
      ExactInt rhs = stirling_first(n, k);
      for (int i = 1; k + 2 * i <= n; ++i) rhs += binomial(k + 2 * i, k - 1) * xs[k + 2 * i];
      const ExactInt lhs = (n + 1 - k) * xs[k];
      r.check(lhs == rhs, [&] {
        return "n " + std::to_string(n) + " k " + std::to_string(k) + ": xi recurrence " + str(lhs) + " != " +
               str(rhs);
      });
    }
    r.check(xs[n] == 1, [&] { return "xi_{1,n}(n) != 1 at n " + std::to_string(n); });
  }
  return r;
}

Report verify_stirling_recurrence(int n_max) {
  Report r("stirling n<=" + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const auto row = stirling_row(n + 1), prev = stirling_row(n);
    for (int k = 1; k <= n; ++k) {
      ExactInt num = binomial(n + 1, 2) * prev[k];
      for (int i = 1; k + 2 * i <= n + 1; ++i) num += binomial(k + 2 * i, k - 1) * row[k + 2 * i];
      const std::string tag = "n " + std::to_string(n) + " k " + std::to_string(k);
      try {
        const ExactInt v = exact_div(num, n + 1 - k, tag);
        r.check(v == row[k], [&] { return tag + ": " + str(v) + " != " + str(row[k]); });
      } catch (const InvariantBreach& e) {
        r.fail(e.what());
      }
    }
  }
  return r;
}

std::pair<ExactInt, ExactInt> exceedance_totals(int n, int k) {
  ExactInt formula = (n - k) * stirling_first(n, k);
  for (int i = 1; i <= (n - k) / 2; ++i) formula -= binomial(k + 2 * i, k - 1) * stirling_first(n, k + 2 * i);
  return {formula, binomial(n, 2) * stirling_first(n - 1, k)};
}

std::vector<std::vector<ExactInt>> exceedance_cycle_table(int n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for_each_slots(n, [&](std::span<const Slot> img) { ++c[exceedances_of_slots(img)][cycle_count(img)]; });
  std::vector<std::vector<ExactInt>> out(n + 1, std::vector<ExactInt>(n + 1));
  for (int a = 0; a <= n; ++a) {
    for (int k = 0; k <= n; ++k) out[a][k] = c[a][k];
  }
  return out;
}

Report verify_exceedance(int n) {
  Report r("exceedance n=" + std::to_string(n));
  const auto table = exceedance_cycle_table(n);
  for (int k = 1; k <= n; ++k) {
    const std::string tag = "n " + std::to_string(n) + " k " + std::to_string(k);
    const auto [formula, direct] = exceedance_totals(n, k);
    ExactInt total = 0, count = 0, ntae = 0, rhs = 0;
    for (int a = 0; a <= n; ++a) {
      total += a * table[a][k];
      count += table[a][k];
      ntae += (n - a - k) * table[a][k];
    }
    for (int i = 1; i <= (n - k) / 2; ++i) rhs += binomial(k + 2 * i, k - 1) * stirling_first(n, k + 2 * i);
    r.check(formula == direct, [&] { return tag + ": " + str(formula) + " != " + str(direct); });
    r.check(total == direct, [&] { return tag + ": enumeration " + str(total) + " != " + str(direct); });
    r.check(count == stirling_first(n, k), [&] { return tag + ": row sum != C(n,k)"; });
    r.check(ntae == rhs, [&] { return tag + ": aggregate identity " + str(ntae) + " != " + str(rhs); });
  }
  r.check(table[0][n] == 1, [&] { return "p_{0,n} != 1"; });
  if (n >= 2) r.check(table[1][n - 1] == binomial(n, 2), [&] { return "p_{1,n-1} != C(n,2)"; });
  return r;
}

Report verify_hat_classification(const CountTable& t) {
  const int n = t.n();
  Report r("hat-classification n=" + std::to_string(n));
  std::map<std::tuple<Partition, int, int>, std::uint64_t> hat;
  std::vector<Slot> e(n), diag(n), inv(n);
  for (int x = 0; x < n; ++x) e[x] = static_cast<Slot>((x + 1) % n);
  for_each_slots(n, [&](std::span<const Slot> img) {
    for (int x = 0; x < n; ++x) inv[img[x]] = static_cast<Slot>(x);
    for (int x = 0; x < n; ++x) diag[x] = e[inv[x]];
    ++hat[{type_of_slots(diag), static_cast<int>(exceedances_of_slots(img)), static_cast<int>(cycle_count(img))}];
  });
  const ExactInt fact = factorial(n - 1);
  for (const auto& lambda : partitions_of(n)) {
    for (int a = 0; a < n; ++a) {
      for (int k = 1; k <= n; ++k) {
        auto it = hat.find({lambda, a, k});
        const ExactInt h = it == hat.end() ? ExactInt(0) : ExactInt(it->second);
        const ExactInt lhs = q_lambda(lambda) * t.p(lambda, a, k), rhs = fact * h;
        r.check(lhs == rhs, [&] {
          return "lambda " + lambda.to_string() + " a " + std::to_string(a) + " k " + std::to_string(k) + ": " +
                 str(lhs) + " != " + str(rhs);
        });
      }
    }
  }
  return r;
}

// --- slice / glue -------------------------------------------------------------

Report verify_bijection(const Permutation& D, std::vector<BijectionCounts>* counts) {
  Report r("bijection D=" + to_cycle_string(D));
  const int n = static_cast<int>(D.size());
  const auto all = enumerate_U_D(D);
  std::vector<ExactInt> y1(n + 1, 0), y2(n + 1, 0), y3(n + 1, 0), hit2(n + 1, 0), hit3(n + 1, 0);
  std::set<std::tuple<std::vector<Label>, std::array<Label, 3>, std::optional<Label>>> images;

  for (const auto& p : all) {
    const int b = static_cast<int>(cycle_count(p.pi()));
    for (Label eps : ntaes(p)) {
      y1[b] += 1;
      const std::string tag = "p " + to_one_line_string(Permutation::from_one_line(p.s())) + " eps " +
                              std::to_string(eps);
      try {
        const SliceResult sr = slice(p, eps);
        const auto& q = sr.result;
        const auto& m = sr.labeled_minima;
        bool ok = static_cast<int>(cycle_count(q.pi())) == b + 2 && q.diagonal() == D;
        for (Label c : m) ok = ok && cycle_minimum(q, c) == c;
        ok = ok && q.s_less(m[0], m[1]) && q.s_less(m[1], m[2]);
        if (sr.distinguished) {
          const auto nt = ntaes(q);
          ok = ok && std::find(nt.begin(), nt.end(), *sr.distinguished) != nt.end() &&
               cycle_minimum(q, *sr.distinguished) == m[2];
        }
        if (!r.check(ok, [&] { return tag + ": slice image is not a valid labeled element"; })) continue;
        r.check(images.emplace(q.s(), m, sr.distinguished).second,
                [&] { return tag + ": slice is not injective"; });
        const GlueResult g = glue(q, m[0], m[1], m[2], sr.distinguished);
        r.check(g.result == p && g.ntae == eps, [&] { return tag + ": glue does not invert slice"; });
        (sr.distinguished ? hit3 : hit2)[b] += 1;
      } catch (const std::exception& e) {
        r.fail(tag + ": " + e.what());
      }
    }
  }

  for (const auto& q : all) {
    const int c = static_cast<int>(cycle_count(q.pi()));
    if (c < 3) continue;
    const int b = c - 2;
    y2[b] += binomial(c, 3);
    const auto minima = cycle_minima(q);  // in s order
    std::vector<std::uint64_t> per_cycle(minima.size(), 0);
    for (Label x : ntaes(q)) {
      const Label mn = cycle_minimum(q, x);
      ++per_cycle[std::find(minima.begin(), minima.end(), mn) - minima.begin()];
    }
    for (std::size_t idx = 0; idx < minima.size(); ++idx) y3[b] += per_cycle[idx] * binomial(idx, 2);
  }

  for (int b = 1; b <= n; ++b) {
    const std::string tag = "b " + std::to_string(b);
    r.check(y1[b] == y2[b] + y3[b],
            [&] { return tag + ": |Y1| " + str(y1[b]) + " != " + str(y2[b]) + " + " + str(y3[b]); });
    r.check(hit2[b] == y2[b] && hit3[b] == y3[b], [&] { return tag + ": slice images do not fill Y2 and Y3"; });
    if (counts && y1[b] != 0) counts->push_back({b, y1[b], y2[b], y3[b]});
  }
  return r;
}

Report verify_bijection_all(int n, unsigned jobs) {
  std::vector<Permutation> diagonals;
  for_each_slots(n, [&](std::span<const Slot> img) {
    std::vector<Label> dom(n);
    std::iota(dom.begin(), dom.end(), Label{1});
    diagonals.push_back(Permutation::from_slots(dom, std::vector<Slot>(img.begin(), img.end())));
  });
  struct Out {
    Report report;
    std::vector<BijectionCounts> counts;
  };
  auto parts = run_partitioned<Out>(diagonals.size(), jobs, [&](std::size_t i) {
    Out o;
    o.report = verify_bijection(diagonals[i], &o.counts);
    return o;
  });
  Report r("bijection n=" + std::to_string(n));
  std::map<int, std::array<ExactInt, 3>> totals;
  for (const auto& o : parts) {
    Report stripped = o.report;
    stripped.info.clear();
    r.merge(stripped);
    for (const auto& c : o.counts) {
      auto& t = totals[c.b];
      t[0] += c.y1;
      t[1] += c.y2;
      t[2] += c.y3;
    }
  }
  const std::string key = "n=" + std::to_string(n);
  r.add_info(key + " diagonals", std::to_string(diagonals.size()));
  for (const auto& [b, t] : totals) {
    r.add_info(key + " b=" + std::to_string(b), "Y1=" + str(t[0]) + " Y2=" + str(t[1]) + " Y3=" + str(t[2]));
  }
  return r;
}

// --- trisection -------------------------------------------------------------

std::vector<Permutation> fixed_point_free_involutions(int m) {
  std::vector<Permutation> out;
  const int n = 2 * m;
  std::vector<Label> img(n, 0);
  std::vector<Label> dom(n);
  std::iota(dom.begin(), dom.end(), Label{1});
  std::function<void()> rec = [&] {
    int first = -1;
    for (int x = 0; x < n; ++x) {
      if (img[x] == 0) {
        first = x;
        break;
      }
    }
    if (first < 0) {
      out.push_back(Permutation::from_map(dom, img));
      return;
    }
    for (int y = first + 1; y < n; ++y) {
      if (img[y] != 0) continue;
      img[first] = y + 1;
      img[y] = first + 1;
      rec();
      img[first] = img[y] = 0;
    }
  };
  if (m > 0) rec();
  return out;
}

Report verify_trisection(int m, unsigned jobs) {
  Report r("trisection m=" + std::to_string(m));
  const auto involutions = fixed_point_free_involutions(m);
  struct Out {
    Report report;
    std::map<int, std::uint64_t> genus;
  };
  auto parts = run_partitioned<Out>(involutions.size(), jobs, [&](std::size_t i) {
    Out o;
    const Permutation& D = involutions[i];
    for_each_in_U_D(D, [&](const PlanePermutation& p) {
      const int aex = static_cast<int>(anti_exceedances(p).size());
      const int c = static_cast<int>(cycle_count(p.pi()));
      const int nt = static_cast<int>(ntaes(p).size());
      const bool ok = aex == m + 1 && nt == aex - c && nt % 2 == 0 && c <= m + 1;
      if (o.report.check(ok, [&] {
            return "D " + to_cycle_string(D) + " s " + to_one_line_string(Permutation::from_one_line(p.s())) +
                   ": AEx " + std::to_string(aex) + " C " + std::to_string(c) + " NTAE " + std::to_string(nt);
          })) {
        ++o.genus[(m + 1 - c) / 2];
      }
    });
    return o;
  });
  std::map<int, std::uint64_t> genus;
  for (const auto& o : parts) {
    r.merge(o.report);
    for (const auto& [g, c] : o.genus) genus[g] += c;
  }
  // Harer-Zagier: (m+1) e_g(m) = 2(2m-1) e_g(m-1) + (m-1)(2m-1)(2m-3) e_{g-1}(m-2)
  // counts rooted one-face maps; each one appears 2^{m-1} (m-1)! times in U_D.
  std::vector<std::vector<ExactInt>> hz(m + 1, std::vector<ExactInt>(m + 1, 0));
  hz[0][0] = 1;
  for (int e = 1; e <= m; ++e) {
    for (int g = 0; 2 * g <= e; ++g) {
      ExactInt v = 2 * (2 * e - 1) * hz[e - 1][g];
      if (g > 0 && e >= 2) v += ExactInt(e - 1) * (2 * e - 1) * (2 * e - 3) * hz[e - 2][g - 1];
      hz[e][g] = exact_div(v, e + 1, "Harer-Zagier recurrence");
    }
  }
  const ExactInt per_map = (ExactInt(1) << (m - 1)) * factorial(m - 1) * involutions.size();
  for (int g = 0; 2 * g <= m; ++g) {
    const ExactInt seen = genus.count(g) ? ExactInt(genus[g]) : ExactInt(0);
    r.check(seen == hz[m][g] * per_map, [&] {
      return "genus " + std::to_string(g) + ": " + str(seen) + " != " + str(hz[m][g] * per_map);
    });
  }
  const std::string key = "m=" + std::to_string(m);
  r.add_info(key + " involutions", std::to_string(involutions.size()));
  for (const auto& [g, c] : genus) r.add_info(key + " genus " + std::to_string(g), std::to_string(c));
  return r;
}

// --- W ------------------------------------------------------------------------

WTable w_table(int n) {
  WTable w;
  std::vector<Slot> ainv(n), beta(n);
  for (const auto& lambda : partitions_of(n)) {
    const auto gamma = canonical_of_type(lambda).slots();
    std::map<std::pair<Partition, Partition>, std::uint64_t> local;
    for_each_slots(n, [&](std::span<const Slot> alpha) {
      for (int x = 0; x < n; ++x) ainv[alpha[x]] = static_cast<Slot>(x);
      for (int x = 0; x < n; ++x) beta[x] = ainv[gamma[x]];
      ++local[{type_of_slots(alpha), type_of_slots(beta)}];
    });
    for (const auto& [key, c] : local) w[{lambda, key.first, key.second}] = c;
  }
  return w;
}

ExactInt W_count(const Partition& lambda, const Partition& mu, const Partition& eta) {
  const int n = lambda.n();
  if (mu.n() != n || eta.n() != n) throw DomainError("W_count: partitions of different n");
  const auto gamma = canonical_of_type(lambda).slots();
  std::vector<Slot> ainv(n), beta(n);
  std::uint64_t c = 0;
  for_each_slots(n, [&](std::span<const Slot> alpha) {
    for (int x = 0; x < n; ++x) ainv[alpha[x]] = static_cast<Slot>(x);
    for (int x = 0; x < n; ++x) beta[x] = ainv[gamma[x]];
    if (type_of_slots(alpha) == mu && type_of_slots(beta) == eta) ++c;
  });
  return c;
}

Report verify_w_identities(int n) {
  Report r("w-identities n=" + std::to_string(n));
  const WTable w = w_table(n);
  auto W = [&](const Partition& l, const Partition& m, const Partition& e) { return lookup(w, std::tuple{l, m, e}); };
  const auto types = partitions_of(n);
  const Partition ones = Partition::ones(n), full = Partition::single(n);
  for (const auto& lambda : types) {
    ExactInt row = 0;
    for (const auto& mu : types) {
      r.check(W(lambda, mu, ones) == (mu == lambda ? 1 : 0),
              [&] { return "identity column wrong at " + lambda.to_string() + ", " + mu.to_string(); });
      for (const auto& eta : types) {
        const std::string tag = lambda.to_string() + " | " + mu.to_string() + ", " + eta.to_string();
        row += W(lambda, mu, eta);
        r.check(W(lambda, mu, eta) == W(lambda, eta, mu), [&] { return tag + ": not symmetric"; });
        const ExactInt x = q_lambda(lambda) * W(lambda, mu, eta), y = q_lambda(mu) * W(mu, lambda, eta);
        r.check(x == y, [&] { return tag + ": exchange identity " + str(x) + " != " + str(y); });
      }
    }
    r.check(row == factorial(n), [&] { return lambda.to_string() + ": row does not sum to n!"; });
  }
  const auto xs = xi_bruteforce(n, 1, n);
  for (int k = 1; k <= n; ++k) {
    ExactInt s = 0;
    for (const auto& eta : partitions_with_length(n, k)) s += W(full, full, eta);
    r.check(s == xs[k], [&] { return "xi link at k " + std::to_string(k); });
  }
  return r;
}

// --- structural sweep -----------------------------------------------------------

namespace {

std::vector<BlockInterchange> all_block_interchanges(std::size_t n) {
  std::vector<BlockInterchange> out;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (std::size_t i = 1; i <= j; ++i) {
        for (std::size_t l = k; l < n; ++l) out.push_back({i, j, k, l});
      }
    }
  }
  return out;
}

std::string describe(const PlanePermutation& p) {
  std::ostringstream os;
  os << "s [";
  for (std::size_t i = 0; i < p.n(); ++i) os << (i ? " " : "") << p.s()[i];
  os << "] pi " << to_cycle_string(p.pi());
  return os.str();
}

void check_case2_minima(Report& r, const PlanePermutation& p, const PlanePermutation& q, const BlockInterchange& h) {
  const auto& s = p.s();
  const Label c2_min = cycle_minimum(p, s[h.i - 1]);
  const std::array<Label, 3> frag{cycle_minimum(q, s[h.i - 1]), cycle_minimum(q, s[h.j]), cycle_minimum(q, s[h.l])};
  for (Label m1 : cycle_minima(p)) {
    if (!p.s_less(m1, c2_min)) break;  // minima come in s order
    bool ok = true;
    Label x = m1;
    do {
      ok = ok && q.pi()(x) == p.pi()(x);
      x = p.pi()(x);
    } while (x != m1);
    for (Label f : frag) ok = ok && q.s_less(m1, f);
    r.check(ok, [&] { return describe(p) + " h " + to_string(h) + ": earlier cycle disturbed by a Case-2 transpose"; });
  }
}

void check_action(Report& r, const PlanePermutation& p, const Permutation& D, const BlockInterchange& h) {
  const PlanePermutation q = apply(p, h);
  const TransposeCase kind = classify(p, h);
  const int delta = static_cast<int>(cycle_count(q.pi())) - static_cast<int>(cycle_count(p.pi()));
  const auto expected = expected_cycle_delta(kind);
  const bool ok_delta = (delta == -2 || delta == 0 || delta == 2) &&
                        (expected ? *expected == delta : delta <= 0);
  r.check(ok_delta, [&] {
    return describe(p) + " h " + to_string(h) + ": " + std::string(to_string(kind)) + " but dC = " +
           std::to_string(delta);
  });
  bool pointwise = true;
  for (std::size_t t = 0; t < p.n(); ++t) {
    if (t == h.i - 1 || t == h.j || t == h.k - 1 || t == h.l) continue;
    pointwise = pointwise && q.pi()(p.s()[t]) == p.pi()(p.s()[t]);
  }
  r.check(pointwise, [&] { return describe(p) + " h " + to_string(h) + ": non-critical image changed"; });
  r.check(q.diagonal() == D, [&] { return describe(p) + " h " + to_string(h) + ": diagonal not preserved"; });
  r.check(apply(q, inverse_of(h)) == p, [&] { return describe(p) + " h " + to_string(h) + ": inverse fails"; });
  if (kind == TransposeCase::Case2) check_case2_minima(r, p, q, h);
}

void check_statistics(Report& r, const PlanePermutation& p, const Permutation& D) {
  const std::size_t n = p.n();
  const std::size_t exc = exc_count(p), cp = cycle_count(p.pi()), cd = cycle_count(D);
  r.check(exc + 1 == anti_exceedance_count(D, p), [&] { return describe(p) + ": Exc != AEx(D) - 1"; });
  r.check(cp + cd <= n + 1, [&] { return describe(p) + ": C(pi) + C(D) > n + 1"; });
  r.check((cp + cd) % 2 == (n + 1) % 2, [&] { return describe(p) + ": C(pi) + C(D) has the wrong parity"; });
  r.check(exc_count_invariance_check(p), [&] { return describe(p) + ": Exc depends on the anchor"; });
  r.check(ntaes(p).size() == n - exc - cp, [&] { return describe(p) + ": |NTAE| != n - Exc - C(pi)"; });
}

}  // namespace

Report structural_sweep(int n_exhaustive, std::size_t random_cases, int n_random_max, std::uint64_t seed) {
  Report r("structural sweep");
  std::uint64_t exhaustive = 0;
  for (int n = 1; n <= n_exhaustive; ++n) {
    const auto hs = all_block_interchanges(n);
    std::vector<Label> dom(n);
    std::iota(dom.begin(), dom.end(), Label{1});
    std::vector<Label> rest(dom.begin() + 1, dom.end());
    do {
      std::vector<Label> s{1};
      s.insert(s.end(), rest.begin(), rest.end());
      const Permutation sc = Permutation::cycle(s);
      for_each_slots(n, [&](std::span<const Slot> img) {
        PlanePermutation p(s, Permutation::from_slots(dom, std::vector<Slot>(img.begin(), img.end())));
        const Permutation D = compose(sc, inverse(p.pi()));
        check_statistics(r, p, D);
        for (const auto& h : hs) check_action(r, p, D, h);
        ++exhaustive;
      });
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::mt19937_64 rng(seed);
  std::uint64_t sampled = 0;
  if (n_random_max >= 3) {
    std::uniform_int_distribution<int> pick_n(3, n_random_max);
    for (std::size_t c = 0; c < random_cases; ++c) {
      const int n = pick_n(rng);
      std::vector<Label> s(n), img(n), al(n);
      std::iota(s.begin(), s.end(), Label{1});
      img = s;
      al = s;
      std::shuffle(s.begin(), s.end(), rng);
      std::shuffle(img.begin(), img.end(), rng);
      std::shuffle(al.begin(), al.end(), rng);
      PlanePermutation p(s, Permutation::from_one_line(img));
      const Permutation D = p.diagonal();
      check_statistics(r, p, D);
      // h: j < k drawn as a sorted pair, then i in [1, j] and l in [k, n-1].
      std::uniform_int_distribution<std::size_t> pos(1, n - 1);
      std::size_t j = pos(rng), k = pos(rng);
      while (k == j) k = pos(rng);
      if (j > k) std::swap(j, k);
      const std::size_t i = std::uniform_int_distribution<std::size_t>(1, j)(rng);
      const std::size_t l = std::uniform_int_distribution<std::size_t>(k, n - 1)(rng);
      check_action(r, p, D, BlockInterchange{i, j, k, l});
      const PlanePermutation pc = conjugate(p, Permutation::from_one_line(al));
      r.check(exc_count(pc) == exc_count(p), [&] { return describe(p) + ": conjugation changed Exc"; });
      ++sampled;
    }
  }
  r.add_info("exhaustive plane permutations", std::to_string(exhaustive));
  r.add_info("random plane permutations", std::to_string(sampled));
  return r;
}

}  // namespace pperm
