#pragma once

// Bounded search for a x^m + k = (a + ell) y^n.
//
// Scans y and tests whether ((a + ell) y^n - k) / a is an exact m-th power,
// after ruling out the congruence obstruction gcd(a, ell) ∤ k.

#include "powershift/arith.hpp"

#include <cstddef>
#include <vector>

namespace powershift {

struct PowerEquationQuery {
  Integer a;
  Integer k;
  Integer ell;
  unsigned long m = 2;
  unsigned long n = 2;
  Integer x_bound;
  Integer y_bound;
  /// Smallest x and y considered: 1 for all positive pairs, 2 to skip the
  /// trivial ones.
  Integer min_value = 1;

  /// Throws std::invalid_argument on non-positive parameters, exponents
  /// below 2 or a min_value outside {1, 2}.
  void validate() const;
};

struct PowerSolution {
  Integer x;
  Integer y;

  bool operator==(const PowerSolution&) const = default;
};

struct SearchResult {
  std::vector<PowerSolution> solutions;  // ascending y
  bool exhausted = false;
  bool obstructed = false;

  bool operator==(const SearchResult&) const = default;
};

struct SearchOptions {
  /// Threads used for the y scan. Never changes the result.
  unsigned workers = 1;
};

bool gcd_obstruction(const PowerEquationQuery& q);

/// Exact check of a x^m + k == (a + ell) y^n.
bool satisfies(const PowerEquationQuery& q, const PowerSolution& s);

SearchResult search_solutions(const PowerEquationQuery& q, SearchOptions options = {});

struct IntegerRange {
  Integer lo;
  Integer hi;

  bool operator==(const IntegerRange&) const = default;
};

struct SurveyGrid {
  IntegerRange a;
  IntegerRange k;
  IntegerRange ell;
  unsigned long m = 2;
  unsigned long n = 2;
  Integer x_bound;
  Integer y_bound;
  Integer min_value = 1;
};

struct SurveyRow {
  Integer a;
  Integer k;
  Integer ell;
  unsigned long m;
  unsigned long n;
  std::size_t count;
  bool obstructed;
  bool exhausted;

  bool operator==(const SurveyRow&) const = default;
};

/// One row per grid cell, lexicographic in (a, k, ell).
std::vector<SurveyRow> survey(const SurveyGrid& grid, SearchOptions options = {});

}  // namespace powershift
