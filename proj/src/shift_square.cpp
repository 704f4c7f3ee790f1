#include "powershift/shift_square.hpp"

#include <utility>

namespace powershift {

SquareD::SquareD(const Integer& a, const Integer& k, const Integer& d)
    : Error("a(a+k) is a perfect square for a=" + to_string(a) +
            ", k=" + to_string(k) + " (d=" + to_string(d) + ")") {}

ShiftInstance::ShiftInstance(Integer a, Integer k)
    : a_(std::move(a)), k_(std::move(k)) {
  require_positive(a_, "a");
  require_positive(k_, "k");
  d_ = a_ * (a_ + k_);
  d_root_ = is_perfect_square(d_);
}

namespace {

void require_family(const ShiftInstance& inst) {
  if (inst.is_square()) throw SquareD(inst.a(), inst.k(), inst.d());
}

ShiftInstance checked_family(ShiftInstance inst) {
  require_family(inst);
  return inst;
}

}  // namespace

Witness witness_from_pell(const ShiftInstance& inst, const PellSolution& p) {
  require_family(inst);
  if (p.d != inst.d()) throw MismatchedD(p.d, inst.d());
  Integer y = p.u + inst.a() * p.v;
  Integer x = y + inst.k() * p.v;
  return {std::move(x), std::move(y)};
}

bool verify_witness(const ShiftInstance& inst, const Witness& w) {
  return inst.a() * w.x * w.x + inst.k() == inst.shifted() * w.y * w.y;
}

Witness patil_witness(const Integer& a) {
  require_positive(a, "a");
  return {4 * a + 3, 4 * a + 1};
}

WitnessFamily::WitnessFamily(ShiftInstance inst)
    : inst_(checked_family(std::move(inst))), pell_(inst_.d()) {}

Witness WitnessFamily::next() { return witness_from_pell(inst_, pell_.next()); }

std::vector<Witness> witness_family(const ShiftInstance& inst, std::size_t count) {
  WitnessFamily family(inst);
  std::vector<Witness> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(family.next());
  return out;
}

NormFormStream::NormFormStream(ShiftInstance inst)
    : inst_(checked_family(std::move(inst))),
      unit_(fundamental_solution(inst_.d())),
      current_{inst_.shifted(), 1},
      norm_(inst_.k() * inst_.shifted()) {}

NormFormSolution NormFormStream::base() const { return {inst_.shifted(), 1}; }

NormFormSolution NormFormStream::next() {
  const Integer& d = inst_.d();
  Integer z = current_.z * unit_.u + current_.x * unit_.v * d;
  Integer x = current_.z * unit_.v + current_.x * unit_.u;
  current_ = {std::move(z), std::move(x)};
  return current_;
}

std::vector<NormFormSolution> norm_form_solutions(const ShiftInstance& inst,
                                                  std::size_t count) {
  NormFormStream stream(inst);
  std::vector<NormFormSolution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace powershift
