#pragma once

// Finite samples of sets with bounded gaps, and the search for pairs
// {a, a x^2} inside them.
//
// For a with both a and a + k in the set, take the first witness (x, y) of
// a x^2 + k = (a + k) y^2 and b = a x^2. Either b is in the set, giving
// {a, a x^2}, or (when {b, b + k} meets the set) b + k = (a + k) y^2 is,
// giving {a + k, (a + k) y^2}. A sample only fixes membership on
// [1, horizon], so outcomes beyond it are reported as such.

#include "powershift/arith.hpp"
#include "powershift/shift_square.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace powershift {

class IngestionError : public Error {
public:
  using Error::Error;
};

struct SyndeticSample {
  std::vector<Integer> elements;  // strictly increasing
  Integer gap_bound;
  Integer horizon;

  /// Binary search; meaningful for values <= horizon.
  bool contains(const Integer& value) const;
};

struct SampleViolation {
  enum class Kind {
    InvalidParameter,
    Empty,
    NonPositive,
    NotIncreasing,
    FirstElementTooLarge,
    GapExceeded,
    HorizonNotCovered,
  };

  Kind kind;
  std::size_t position;  // index into elements
  std::string detail;
};

const char* to_string(SampleViolation::Kind kind);

struct SampleReport {
  std::vector<SampleViolation> violations;

  bool valid() const { return violations.empty(); }
};

SampleReport verify_sample(const SyndeticSample& s);

/// a with a and a + k in the sample and a + k <= horizon, ascending.
std::vector<Integer> find_adjacent_pairs(const SyndeticSample& s, const Integer& k);

/// Smallest a in [1, horizon - k] with neither a nor a + k in the sample.
std::optional<Integer> first_hitting_failure(const SyndeticSample& s, const Integer& k);

inline bool verify_hitting(const SyndeticSample& s, const Integer& k) {
  return !first_hitting_failure(s, k).has_value();
}

struct GeometricPairWitness {
  enum class Branch { Direct, Shifted };

  Integer base;
  Integer ratio_root;
  Integer product;  // base * ratio_root^2
  Branch branch;
  Integer source_a;
  Integer source_shifted;  // source_a + k
};

const char* to_string(GeometricPairWitness::Branch branch);

struct PairOutcome {
  enum class Status { Found, OutOfHorizon, SquareSkipped, HypothesisViolation };

  Integer source;
  Status status;
  std::optional<GeometricPairWitness> pair;  // Found only
  std::optional<Witness> solution;           // the (x, y) used; absent when skipped
  std::optional<Integer> b;                  // a x^2; absent when skipped
  std::size_t family_index = 0;              // which family member was used
};

const char* to_string(PairOutcome::Status status);

/// One outcome per adjacent pair, ordered by source. Up to `tries` family
/// members are tried per pair; the first Found is reported, otherwise the
/// outcome of the first member.
std::vector<PairOutcome> find_geometric_pairs(const SyndeticSample& s, const Integer& k,
                                              std::size_t tries = 1);

// Generators. Each produces elements up to at least `horizon`, with
// gap_bound set to the largest gap actually present (counting the gap from 0).

SyndeticSample sample_all(const Integer& horizon);
SyndeticSample sample_odd(const Integer& horizon);
/// Integers not congruent to residue mod modulus; modulus >= 2.
SyndeticSample sample_avoid_residue(const Integer& residue, const Integer& modulus,
                                    const Integer& horizon);
/// Consecutive gaps drawn uniformly from [1, gap_bound] with a seeded
/// 64-bit Mersenne Twister; identical seeds give identical samples.
SyndeticSample sample_random(const Integer& gap_bound, const Integer& horizon,
                             std::uint64_t seed);

/// Reads one positive decimal integer per line, strictly ascending. Text
/// after '#' is a comment; lines that are empty apart from a comment are
/// skipped, truly blank lines are rejected.
std::vector<Integer> parse_set(std::istream& in);
std::vector<Integer> read_set_file(const std::string& path);

}  // namespace powershift
