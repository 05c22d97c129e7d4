#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pperm {

/// Arbitrary-precision signed integer used by every counting routine.
using ExactInt = boost::multiprecision::cpp_int;

/// Raised when an internal invariant is violated (e.g. a division that
/// must be exact leaves a remainder).
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

ExactInt factorial(std::int64_t n);

/// Binomial coefficient. Accepts a negative upper argument using the
/// generalized definition binom(-m, r) = (-1)^r binom(m+r-1, r); zero for
/// r < 0 and for 0 <= n < r.
ExactInt binomial(std::int64_t n, std::int64_t r);

/// Unsigned Stirling number of the first kind C(n, k); zero outside 0 <= k <= n.
ExactInt stirling_first(std::int64_t n, std::int64_t k);

/// Row C(n, 0..n).
std::vector<ExactInt> stirling_row(std::int64_t n);

/// num / den, throwing InvariantBreach if the division is not exact.
ExactInt exact_div(const ExactInt& num, const ExactInt& den, const std::string& what);

std::string to_string(const ExactInt& v);

}  // namespace pperm
