#pragma once

// Solution families of a x^2 + k = (a + k) y^2 built from Pell units of
// d = a (a + k).
//
// Rewriting with z = (a + k) y gives the norm form z^2 - d x^2 = k (a + k).
// The base point (z, x) = (a + k, 1) has that norm, and multiplying
// z + x sqrt(d) by a unit u + v sqrt(d) keeps it, giving
//   x = u + a v + k v,   y = u + a v.

#include "powershift/arith.hpp"
#include "powershift/pell.hpp"

#include <optional>
#include <vector>

namespace powershift {

class SquareD : public Error {
public:
  SquareD(const Integer& a, const Integer& k, const Integer& d);
};

/// Parameters (a, k) of the equation, with d = a (a + k) cached. Square d is
/// representable; generating a family from it throws SquareD.
class ShiftInstance {
public:
  ShiftInstance(Integer a, Integer k);

  const Integer& a() const { return a_; }
  const Integer& k() const { return k_; }
  const Integer& d() const { return d_; }
  Integer shifted() const { return a_ + k_; }

  bool is_square() const { return d_root_.has_value(); }
  /// sqrt(d) when d is a perfect square.
  const std::optional<Integer>& square_root() const { return d_root_; }

private:
  Integer a_;
  Integer k_;
  Integer d_;
  std::optional<Integer> d_root_;
};

struct Witness {
  Integer x;
  Integer y;

  bool operator==(const Witness&) const = default;
};

/// A point with z^2 - d x^2 = k (a + k).
struct NormFormSolution {
  Integer z;
  Integer x;

  bool operator==(const NormFormSolution&) const = default;
};

Witness witness_from_pell(const ShiftInstance& inst, const PellSolution& p);

/// Exact check of a x^2 + k == (a + k) y^2.
bool verify_witness(const ShiftInstance& inst, const Witness& w);

/// (4a + 3, 4a + 1), which solves the k = 1 equation for every a.
Witness patil_witness(const Integer& a);

/// Witnesses in increasing x, one per positive Pell solution of d.
class WitnessFamily {
public:
  explicit WitnessFamily(ShiftInstance inst);

  Witness next();
  const ShiftInstance& instance() const { return inst_; }

private:
  ShiftInstance inst_;
  PellStream pell_;
};

std::vector<Witness> witness_family(const ShiftInstance& inst, std::size_t count);

/// Orbit of the base point (a + k, 1) under the fundamental unit. The base is
/// available through base(); next() yields the images under u^1, u^2, ...,
/// so element i corresponds to element i of WitnessFamily.
class NormFormStream {
public:
  explicit NormFormStream(ShiftInstance inst);

  NormFormSolution next();
  NormFormSolution base() const;
  const Integer& norm() const { return norm_; }

private:
  ShiftInstance inst_;
  PellSolution unit_;
  NormFormSolution current_;
  Integer norm_;
};

std::vector<NormFormSolution> norm_form_solutions(const ShiftInstance& inst,
                                                  std::size_t count);

}  // namespace powershift
