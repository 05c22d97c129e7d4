#include "pperm/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pperm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw DomainError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::single(int n) { return Partition(std::vector<int>{n}); }

std::vector<int> Partition::multiplicities() const {
  std::vector<int> a(static_cast<std::size_t>(n_) + 1, 0);
  for (int p : parts_) ++a[p];
  return a;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "+" : "") << parts_[i];
  return os.str();
}

std::string Partition::to_exponent_string() const {
  std::ostringstream os;
  auto a = multiplicities();
  bool first = true;
  for (int i = 1; i <= n_; ++i) {
    if (a[i] == 0) continue;
    os << (first ? "" : " ") << i << '^' << a[i];
    first = false;
  }
  return os.str();
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  if (s.find('^') != std::string::npos) {
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      auto caret = tok.find('^');
      if (caret == std::string::npos) throw ParseError("expected i^a term: " + tok);
      int size = 0, mult = 0;
      try {
        size = std::stoi(tok.substr(0, caret));
        mult = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw ParseError("bad exponent term: " + tok);
      }
      if (size <= 0 || mult < 0) throw ParseError("bad exponent term: " + tok);
      parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
    }
  } else {
    for (char& c : s) {
      if (c == '+' || c == ',') c = ' ';
    }
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v <= 0) throw ParseError("bad part: " + tok);
        parts.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad part: " + tok);
      }
    }
  }
  if (parts.empty()) throw ParseError("empty partition");
  return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_with_length(int n, int k) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    if (p.length() == k) out.push_back(std::move(p));
  }
  return out;
}

Partition cycle_type(const Permutation& f) {
  std::vector<int> parts;
  for (const auto& c : cycles(f).cycles) parts.push_back(static_cast<int>(c.size()));
  return Partition(std::move(parts));
}

Permutation canonical_of_type(const Partition& lambda) {
  std::vector<std::vector<Label>> cyc;
  Label next = 1;
  for (int p : lambda.parts()) {
    std::vector<Label> c;
    for (int i = 0; i < p; ++i) c.push_back(next++);
    cyc.push_back(std::move(c));
  }
  return Permutation::from_cycles(cyc);
}

ExactInt q_lambda(const Partition& lambda) {
  ExactInt den = 1;
  auto a = lambda.multiplicities();
  for (int i = 1; i <= lambda.n(); ++i) {
    for (int r = 0; r < a[i]; ++r) den *= i;
    den *= factorial(a[i]);
  }
  return exact_div(factorial(lambda.n()), den, "q_lambda");
}

ExactInt kappa(const Partition& mu, const Partition& eta) {
  if (mu.n() != eta.n()) throw DomainError("kappa: partitions of different n");
  const int merge = mu.length() - eta.length() + 1;
  if (merge <= 0) return 0;
  if (merge == 1) return mu == eta ? 1 : 0;

  // Distinct part values of mu with multiplicities; choose c_v copies of
  // each value, sum c_v == merge.
  std::vector<std::pair<int, int>> values;
  auto a = mu.multiplicities();
  for (int v = 1; v <= mu.n(); ++v) {
    if (a[v]) values.emplace_back(v, a[v]);
  }
  ExactInt total = 0;
  std::vector<int> take(values.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == values.size()) {
      if (left != 0) return;
      std::vector<int> rest;
      int merged = 0;
      ExactInt ways = 1;
      for (std::size_t t = 0; t < values.size(); ++t) {
        auto [v, m] = values[t];
        rest.insert(rest.end(), static_cast<std::size_t>(m - take[t]), v);
        merged += v * take[t];
        ways *= binomial(m, take[t]);
      }
      rest.push_back(merged);
      if (Partition(std::move(rest)) == eta) total += ways;
      return;
    }
    for (int c = 0; c <= std::min(left, values[idx].second); ++c) {
      take[idx] = c;
      rec(idx + 1, left - c);
    }
    take[idx] = 0;
  };
  rec(0, merge);
  return total;
}

std::vector<Partition> splits(const Partition& eta, int pieces) {
  if (pieces < 3 || pieces % 2 == 0) throw DomainError("splits: piece count must be odd and >= 3");
  std::set<Partition> out;
  std::set<int> done;
  for (std::size_t i = 0; i < eta.parts().size(); ++i) {
    int v = eta.parts()[i];
    if (v < pieces || !done.insert(v).second) continue;
    std::vector<int> rest = eta.parts();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& rho : partitions_with_length(v, pieces)) {
      std::vector<int> parts = rest;
      parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
      out.insert(Partition(std::move(parts)));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace pperm
