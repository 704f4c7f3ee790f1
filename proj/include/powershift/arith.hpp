#pragma once

// Exact integer helpers shared by every module. All quantities are GMP
// integers; nothing in the library narrows to a machine word.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace powershift {

using Integer = mpz_class;

/// Base class for the library's domain errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless n >= 0.
void require_nonnegative(const Integer& n, const char* what);
/// Throws std::invalid_argument unless n >= 1.
void require_positive(const Integer& n, const char* what);

/// Floor square root: the r with r^2 <= n < (r+1)^2.
Integer isqrt(const Integer& n);

/// Root r with r^2 == n, or empty when n is not a perfect square.
std::optional<Integer> is_perfect_square(const Integer& n);

/// Floor m-th root of n >= 0, m >= 1.
Integer iroot(const Integer& n, unsigned long m);

/// Root r with r^m == n, or empty.
std::optional<Integer> exact_root(const Integer& n, unsigned long m);

struct SquarefreeParts {
  Integer square_root;  // b
  Integer squarefree;   // c

  bool operator==(const SquarefreeParts&) const = default;
};

/// Unique decomposition n = b^2 * c with c squarefree, by trial division.
SquarefreeParts squarefree_decompose(const Integer& n);

bool is_squarefree(const Integer& n);

/// Positive divisors of n >= 1 in ascending order.
std::vector<Integer> divisors(const Integer& n);

/// Throws std::invalid_argument when both arguments are zero.
Integer gcd(const Integer& a, const Integer& b);

Integer pow(const Integer& base, unsigned long exponent);

/// Parses a decimal integer; rejects signs other than a leading '-',
/// whitespace and anything non-numeric.
Integer parse_integer(const std::string& text);

inline std::string to_string(const Integer& n) { return n.get_str(10); }

}  // namespace powershift
