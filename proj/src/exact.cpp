#include "pperm/exact.hpp"

namespace pperm {

ExactInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  ExactInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

ExactInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0) return 0;
  if (n < 0) {
    ExactInt v = binomial(-n + r - 1, r);
    return (r % 2 == 0) ? v : ExactInt(-v);
  }
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  ExactInt v = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    v *= (n - r + i);
    v /= i;
  }
  return v;
}

std::vector<ExactInt> stirling_row(std::int64_t n) {
  if (n < 0) return {};
  std::vector<ExactInt> row{1};
  for (std::int64_t m = 1; m <= n; ++m) {
    std::vector<ExactInt> next(static_cast<std::size_t>(m) + 1, 0);
    for (std::int64_t k = 1; k <= m; ++k) {
      next[k] = row[k - 1];
      if (k < m) next[k] += ExactInt(m - 1) * row[k];
    }
    row = std::move(next);
  }
  return row;
}

ExactInt stirling_first(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return stirling_row(n)[static_cast<std::size_t>(k)];
}

ExactInt exact_div(const ExactInt& num, const ExactInt& den, const std::string& what) {
  if (den == 0) throw InvariantBreach(what + ": division by zero");
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InvariantBreach(what + ": " + to_string(num) + " not divisible by " + to_string(den));
  }
  return q;
}

std::string to_string(const ExactInt& v) { return v.str(); }

}  // namespace pperm
