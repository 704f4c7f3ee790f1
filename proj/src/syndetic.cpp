#include "powershift/syndetic.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>

namespace powershift {

bool SyndeticSample::contains(const Integer& value) const {
  return std::binary_search(elements.begin(), elements.end(), value);
}

const char* to_string(SampleViolation::Kind kind) {
  switch (kind) {
    case SampleViolation::Kind::InvalidParameter: return "invalid-parameter";
    case SampleViolation::Kind::Empty: return "empty";
    case SampleViolation::Kind::NonPositive: return "non-positive";
    case SampleViolation::Kind::NotIncreasing: return "not-increasing";
    case SampleViolation::Kind::FirstElementTooLarge: return "first-element-too-large";
    case SampleViolation::Kind::GapExceeded: return "gap-exceeded";
    case SampleViolation::Kind::HorizonNotCovered: return "horizon-not-covered";
  }
  return "unknown";
}

const char* to_string(GeometricPairWitness::Branch branch) {
  return branch == GeometricPairWitness::Branch::Direct ? "Direct" : "Shifted";
}

const char* to_string(PairOutcome::Status status) {
  switch (status) {
    case PairOutcome::Status::Found: return "Found";
    case PairOutcome::Status::OutOfHorizon: return "OutOfHorizon";
    case PairOutcome::Status::SquareSkipped: return "SquareSkipped";
    case PairOutcome::Status::HypothesisViolation: return "HypothesisViolation";
  }
  return "unknown";
}

SampleReport verify_sample(const SyndeticSample& s) {
  using Kind = SampleViolation::Kind;
  SampleReport report;
  auto& v = report.violations;
  if (sgn(s.gap_bound) <= 0) v.push_back({Kind::InvalidParameter, 0, "gap_bound must be positive"});
  if (sgn(s.horizon) <= 0) v.push_back({Kind::InvalidParameter, 0, "horizon must be positive"});
  const auto& e = s.elements;
  if (e.empty()) {
    v.push_back({Kind::Empty, 0, "sample has no elements"});
    return report;
  }
  if (sgn(e.front()) <= 0) {
    v.push_back({Kind::NonPositive, 0, "element " + to_string(e.front()) + " is not positive"});
  }
  if (e.front() > s.gap_bound) {
    v.push_back({Kind::FirstElementTooLarge, 0,
                 "first element " + to_string(e.front()) + " exceeds gap bound " +
                     to_string(s.gap_bound)});
  }
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] <= e[i - 1]) {
      v.push_back({Kind::NotIncreasing, i,
                   to_string(e[i - 1]) + " is followed by " + to_string(e[i])});
    } else if (e[i - 1] < s.horizon && e[i] - e[i - 1] > s.gap_bound) {
      v.push_back({Kind::GapExceeded, i,
                   "gap " + to_string(e[i - 1]) + " -> " + to_string(e[i]) + " exceeds " +
                       to_string(s.gap_bound)});
    }
  }
  if (e.back() < s.horizon) {
    v.push_back({Kind::HorizonNotCovered, e.size() - 1,
                 "last element " + to_string(e.back()) + " is below horizon " +
                     to_string(s.horizon)});
  }
  return report;
}

namespace {

void require_below_horizon(const SyndeticSample& s, const Integer& k) {
  require_positive(k, "k");
  if (k >= s.horizon) throw std::invalid_argument("k must be smaller than the horizon");
}

}  // namespace

std::vector<Integer> find_adjacent_pairs(const SyndeticSample& s, const Integer& k) {
  require_below_horizon(s, k);
  std::vector<Integer> out;
  const Integer last = s.horizon - k;
  for (const Integer& a : s.elements) {
    if (a > last) break;
    if (s.contains(a + k)) out.push_back(a);
  }
  return out;
}

std::optional<Integer> first_hitting_failure(const SyndeticSample& s, const Integer& k) {
  require_below_horizon(s, k);
  const Integer last = s.horizon - k;
  // Walk a and a + k through the sorted elements in lockstep.
  auto lo = s.elements.begin();
  auto hi = s.elements.begin();
  for (Integer a = 1; a <= last; ++a) {
    while (lo != s.elements.end() && *lo < a) ++lo;
    const Integer shifted = a + k;
    while (hi != s.elements.end() && *hi < shifted) ++hi;
    const bool has_a = lo != s.elements.end() && *lo == a;
    const bool has_shifted = hi != s.elements.end() && *hi == shifted;
    if (!has_a && !has_shifted) return a;
  }
  return std::nullopt;
}

namespace {

PairOutcome classify(const SyndeticSample& s, const ShiftInstance& inst, const Witness& w,
                     std::size_t index) {
  using Status = PairOutcome::Status;
  using Branch = GeometricPairWitness::Branch;
  PairOutcome out{inst.a(), Status::HypothesisViolation, std::nullopt, w, std::nullopt, index};
  Integer b = inst.a() * w.x * w.x;
  const Integer b_shifted = b + inst.k();
  if (b <= s.horizon && s.contains(b)) {
    out.status = Status::Found;
    out.pair = GeometricPairWitness{inst.a(), w.x, b, Branch::Direct, inst.a(), inst.shifted()};
  } else if (b_shifted <= s.horizon && s.contains(b_shifted)) {
    out.status = Status::Found;
    out.pair = GeometricPairWitness{inst.shifted(), w.y, b_shifted, Branch::Shifted, inst.a(),
                                    inst.shifted()};
  } else if (b_shifted > s.horizon) {
    out.status = Status::OutOfHorizon;
  }
  out.b = std::move(b);
  return out;
}

}  // namespace

std::vector<PairOutcome> find_geometric_pairs(const SyndeticSample& s, const Integer& k,
                                              std::size_t tries) {
  if (tries == 0) throw std::invalid_argument("tries must be at least 1");
  std::vector<PairOutcome> out;
  for (const Integer& a : find_adjacent_pairs(s, k)) {
    ShiftInstance inst(a, k);
    if (inst.is_square()) {
      out.push_back({a, PairOutcome::Status::SquareSkipped, std::nullopt, std::nullopt,
                     std::nullopt, 0});
      continue;
    }
    WitnessFamily family(inst);
    std::optional<PairOutcome> first;
    for (std::size_t i = 0; i < tries; ++i) {
      PairOutcome outcome = classify(s, inst, family.next(), i);
      const auto status = outcome.status;
      if (status == PairOutcome::Status::Found) {
        first = std::move(outcome);
        break;
      }
      if (!first) first = std::move(outcome);
      // Later members only grow, so once b + k passes the horizon nothing
      // further can land inside it.
      if (status == PairOutcome::Status::OutOfHorizon) break;
    }
    out.push_back(std::move(*first));
  }
  return out;
}

namespace {

SyndeticSample finish(std::vector<Integer> elements, const Integer& horizon) {
  Integer gap = elements.empty() ? Integer(1) : elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1] < horizon) gap = std::max(gap, Integer(elements[i] - elements[i - 1]));
  }
  return {std::move(elements), gap, horizon};
}

}  // namespace

SyndeticSample sample_all(const Integer& horizon) {
  require_positive(horizon, "horizon");
  std::vector<Integer> e;
  for (Integer n = 1; n <= horizon; ++n) e.push_back(n);
  return finish(std::move(e), horizon);
}

SyndeticSample sample_odd(const Integer& horizon) {
  return sample_avoid_residue(0, 2, horizon);
}

SyndeticSample sample_avoid_residue(const Integer& residue, const Integer& modulus,
                                    const Integer& horizon) {
  require_positive(horizon, "horizon");
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  Integer r = residue % modulus;
  if (sgn(r) < 0) r += modulus;
  std::vector<Integer> e;
  for (Integer n = 1;; ++n) {
    Integer rem = n % modulus;
    if (rem == r) continue;
    e.push_back(n);
    if (n >= horizon) break;
  }
  return finish(std::move(e), horizon);
}

SyndeticSample sample_random(const Integer& gap_bound, const Integer& horizon,
                             std::uint64_t seed) {
  require_positive(gap_bound, "gap_bound");
  require_positive(horizon, "horizon");
  if (!gap_bound.fits_ulong_p()) throw std::invalid_argument("gap_bound too large");
  const unsigned long g = gap_bound.get_ui();
  std::mt19937_64 rng(seed);
  // Plain modular reduction instead of uniform_int_distribution keeps the
  // output identical across standard libraries.
  auto step = [&] { return Integer(static_cast<unsigned long>(1 + rng() % g)); };
  std::vector<Integer> e;
  Integer n = step();
  e.push_back(n);
  while (n < horizon) {
    n += step();
    e.push_back(n);
  }
  return {std::move(e), gap_bound, horizon};
}

std::vector<Integer> parse_set(std::istream& in) {
  std::vector<Integer> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const bool had_comment = line.find('#') != std::string::npos;
    if (had_comment) line.erase(line.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (had_comment) continue;
      throw IngestionError("line " + std::to_string(line_no) + ": blank line");
    }
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    Integer value;
    try {
      value = parse_integer(token);
    } catch (const std::invalid_argument&) {
      throw IngestionError("line " + std::to_string(line_no) + ": not an integer: '" + token + "'");
    }
    if (sgn(value) <= 0) {
      throw IngestionError("line " + std::to_string(line_no) + ": not positive: " + token);
    }
    if (!out.empty() && value == out.back()) {
      throw IngestionError("line " + std::to_string(line_no) + ": duplicate " + token);
    }
    if (!out.empty() && value < out.back()) {
      throw IngestionError("line " + std::to_string(line_no) + ": " + token +
                           " is out of order after " + to_string(out.back()));
    }
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<Integer> read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open set file: " + path);
  return parse_set(in);
}

}  // namespace powershift
