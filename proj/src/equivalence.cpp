#include "cuntzcf/equivalence.hpp"

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

namespace {

void require_omega(const QuadraticSurd& x) {
  if (!in_omega(x)) throw DomainError("expected 0 < x < 1, got " + to_string(x));
}

}  // namespace

bool tail_equivalent(const PeriodicCFE& a, const PeriodicCFE& b) { return rotation_equal(a.period(), b.period()); }

bool modular_equivalent(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_omega(x);
  require_omega(y);
  return tail_equivalent(cfe_periodic(x), cfe_periodic(y));
}

QuadraticSurd apply_and_reduce(const UnimodularMatrix& m, const QuadraticSurd& x) {
  require_omega(x);
  try {
    return fractional_part(mobius_apply(m, x));
  } catch (const NotIrrational& e) {
    throw DegenerateImage(std::string("modular image is rational: ") + e.what());
  }
}

Word omega_class_label(const QuadraticSurd& x) {
  require_omega(x);
  return least_rotation(cfe_periodic(x).period());
}

}  // namespace cuntzcf
