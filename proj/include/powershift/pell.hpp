#pragma once

#include "powershift/arith.hpp"

#include <vector>

namespace powershift {

class SquareInput : public Error {
public:
  explicit SquareInput(const Integer& d);
};

class MismatchedD : public Error {
public:
  MismatchedD(const Integer& lhs, const Integer& rhs);
};

/// A positive solution of u^2 - d v^2 = 1.
struct PellSolution {
  Integer d;
  Integer u;
  Integer v;

  bool satisfies_equation() const { return u * u - d * v * v == 1; }
  bool operator==(const PellSolution&) const = default;
};

/// sqrt(d) = [a0; period, period, ...]. The period ends with 2 * a0.
struct ContinuedFraction {
  Integer a0;
  std::vector<Integer> period;

  bool operator==(const ContinuedFraction&) const = default;
};

/// Periodic expansion of sqrt(d) by the PQa recurrence
///   P' = a Q - P,  Q' = (d - P'^2) / Q,  a' = floor((a0 + P') / Q'),
/// stopping at the first partial quotient equal to 2 * a0.
ContinuedFraction continued_fraction_sqrt(const Integer& d);

/// Least positive solution of u^2 - d v^2 = 1, read off the convergent that
/// closes the period (or the doubled period when its length is odd).
PellSolution fundamental_solution(const Integer& d);

/// (u1 + v1 sqrt d)(u2 + v2 sqrt d).
PellSolution compose(const PellSolution& s, const PellSolution& t);

/// All positive solutions for a fixed d in increasing order: the fundamental
/// solution, then successive products with it.
class PellStream {
public:
  explicit PellStream(const Integer& d);

  /// Returns the next solution and advances.
  PellSolution next();
  const PellSolution& fundamental() const { return fundamental_; }

private:
  PellSolution fundamental_;
  PellSolution current_;
  bool started_ = false;
};

std::vector<PellSolution> pell_solutions(const Integer& d, std::size_t count);

}  // namespace powershift
