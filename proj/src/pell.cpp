#include "powershift/pell.hpp"

namespace powershift {

SquareInput::SquareInput(const Integer& d)
    : Error("d is a perfect square: " + to_string(d)) {}

MismatchedD::MismatchedD(const Integer& lhs, const Integer& rhs)
    : Error("Pell solutions over different d: " + to_string(lhs) + " vs " +
            to_string(rhs)) {}

namespace {

void require_nonsquare(const Integer& d) {
  require_positive(d, "d");
  if (is_perfect_square(d)) throw SquareInput(d);
}

}  // namespace

ContinuedFraction continued_fraction_sqrt(const Integer& d) {
  require_nonsquare(d);
  const Integer a0 = isqrt(d);
  ContinuedFraction cf{a0, {}};
  Integer p = 0;
  Integer q = 1;
  Integer a = a0;
  do {
    p = a * q - p;
    q = (d - p * p) / q;  // exact
    a = (a0 + p) / q;
    cf.period.push_back(a);
  } while (a != 2 * a0);
  return cf;
}

PellSolution fundamental_solution(const Integer& d) {
  const ContinuedFraction cf = continued_fraction_sqrt(d);
  const std::size_t length = cf.period.size();
  const std::size_t terms = (length % 2 == 0) ? length : 2 * length;

  // Convergents h/k of [a0; a1, ..., a_{terms-1}]; the last one solves the
  // equation with norm +1.
  Integer h_prev = 1;
  Integer k_prev = 0;
  Integer h = cf.a0;
  Integer k = 1;
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    const Integer& a = cf.period[i % length];
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return {d, h, k};
}

PellSolution compose(const PellSolution& s, const PellSolution& t) {
  if (s.d != t.d) throw MismatchedD(s.d, t.d);
  return {s.d, s.u * t.u + s.d * s.v * t.v, s.u * t.v + t.u * s.v};
}

PellStream::PellStream(const Integer& d)
    : fundamental_(fundamental_solution(d)), current_(fundamental_) {}

PellSolution PellStream::next() {
  if (started_) {
    current_ = compose(current_, fundamental_);
  } else {
    started_ = true;
  }
  return current_;
}

std::vector<PellSolution> pell_solutions(const Integer& d, std::size_t count) {
  PellStream stream(d);
  std::vector<PellSolution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace powershift
