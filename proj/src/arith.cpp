#include "powershift/arith.hpp"

#include <algorithm>
#include <string>

namespace powershift {

void require_nonnegative(const Integer& n, const char* what) {
  if (sgn(n) < 0) {
    throw std::invalid_argument(std::string(what) + " must be non-negative");
  }
}

void require_positive(const Integer& n, const char* what) {
  if (sgn(n) <= 0) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

Integer isqrt(const Integer& n) {
  require_nonnegative(n, "isqrt argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer r;
  Integer rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

Integer iroot(const Integer& n, unsigned long m) {
  require_nonnegative(n, "iroot argument");
  if (m == 0) throw std::invalid_argument("root index must be positive");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), m);
  return r;
}

std::optional<Integer> exact_root(const Integer& n, unsigned long m) {
  if (m == 0) throw std::invalid_argument("root index must be positive");
  if (sgn(n) < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), m) == 0) return std::nullopt;
  return r;
}

SquarefreeParts squarefree_decompose(const Integer& n) {
  require_positive(n, "squarefree_decompose argument");
  Integer rest = n;
  Integer b = 1;
  Integer c = 1;
  // Stop once p^2 > rest; whatever remains above 1 is a prime to the first power.
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned exponent = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) b *= p;
    if (exponent % 2 == 1) c *= p;
  }
  c *= rest;
  return {b, c};
}

bool is_squarefree(const Integer& n) {
  return squarefree_decompose(n).square_root == 1;
}

std::vector<Integer> divisors(const Integer& n) {
  require_positive(n, "divisors argument");
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer i = 1; i * i <= n; ++i) {
    if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
      small.push_back(i);
      Integer partner = n / i;
      if (partner != i) large.push_back(std::move(partner));
    }
  }
  small.insert(small.end(), std::make_move_iterator(large.rbegin()),
               std::make_move_iterator(large.rend()));
  return small;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (sgn(a) == 0 && sgn(b) == 0) {
    throw std::invalid_argument("gcd(0, 0) is undefined");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer parse_integer(const std::string& text) {
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return Integer(text, 10);
}

}  // namespace powershift
