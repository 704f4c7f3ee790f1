#include "powershift/square_products.hpp"

#include <algorithm>
#include <cassert>

namespace powershift {

bool SquareProductCertificate::verify(const Integer& k) const {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0 || sgn(t) <= 0 || sgn(ell) <= 0) {
    return false;
  }
  const Integer r = root();
  return a == b * b * c && is_squarefree(c) && c * ell == k &&
         t * t - b * b == ell && a * (a + k) == r * r;
}

std::vector<SquareProductCertificate> enumerate_square_products(const Integer& k) {
  require_positive(k, "k");
  std::vector<SquareProductCertificate> out;
  for (const Integer& c : divisors(k)) {
    if (!is_squarefree(c)) continue;
    const Integer ell = k / c;
    for (const Integer& d1 : divisors(ell)) {
      const Integer d2 = ell / d1;
      if (d1 >= d2) break;  // b > 0 needs d1 < d2
      if (mpz_odd_p(d1.get_mpz_t()) != mpz_odd_p(d2.get_mpz_t())) continue;
      Integer t = (d1 + d2) / 2;
      Integer b = (d2 - d1) / 2;
      Integer a = b * b * c;
      out.push_back({std::move(a), std::move(b), c, std::move(t), ell});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
    return lhs.a != rhs.a ? lhs.a < rhs.a : lhs.c < rhs.c;
  });
  // a = b^2 c determines (b, c), so equal a values never arise.
  auto last = std::unique(out.begin(), out.end(),
                          [](const auto& lhs, const auto& rhs) { return lhs.a == rhs.a; });
  assert(last == out.end());
  out.erase(last, out.end());
  return out;
}

std::optional<SquareProductCertificate> certificate_for(const Integer& a, const Integer& k) {
  require_positive(a, "a");
  require_positive(k, "k");
  auto [b, c] = squarefree_decompose(a);
  if (!mpz_divisible_p(k.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
  Integer ell = k / c;
  auto t = is_perfect_square(b * b + ell);
  if (!t) return std::nullopt;
  return SquareProductCertificate{a, std::move(b), std::move(c), std::move(*t), std::move(ell)};
}

std::optional<Integer> is_square_product(const Integer& a, const Integer& k) {
  require_positive(a, "a");
  require_positive(k, "k");
  return is_perfect_square(a * (a + k));
}

}  // namespace powershift
