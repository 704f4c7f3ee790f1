#pragma once

// The finitely many a > 0 with a (a + k) a perfect square.
//
// Write a = b^2 c with c squarefree. Then c | k, and with k = c * ell the
// condition reduces to t^2 - b^2 = ell, i.e. ell = (t - b)(t + b). Every
// such a therefore comes from a squarefree divisor c of k and a factor pair
// d1 * d2 = k / c with d1 < d2 of equal parity.

#include "powershift/arith.hpp"

#include <optional>
#include <vector>

namespace powershift {

struct SquareProductCertificate {
  Integer a;
  Integer b;
  Integer c;
  Integer t;
  Integer ell;

  /// The certified root b * c * t of a (a + k).
  Integer root() const { return b * c * t; }
  /// Checks every relation of the certificate against k.
  bool verify(const Integer& k) const;

  bool operator==(const SquareProductCertificate&) const = default;
};

/// All certificates for k, ascending by a.
std::vector<SquareProductCertificate> enumerate_square_products(const Integer& k);

/// Certificate for a single a, built from the squarefree decomposition of a;
/// empty when a (a + k) is not a square.
std::optional<SquareProductCertificate> certificate_for(const Integer& a, const Integer& k);

/// Direct test: r with r^2 == a (a + k), or empty.
std::optional<Integer> is_square_product(const Integer& a, const Integer& k);

}  // namespace powershift
