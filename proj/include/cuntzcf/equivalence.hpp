#pragma once

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/surd.hpp"
#include "cuntzcf/word.hpp"

namespace cuntzcf {

/// sigma^p(a) = sigma^q(b) for some p, q: the periods are rotations of each other.
bool tail_equivalent(const PeriodicCFE& a, const PeriodicCFE& b);

/// x = (ay + b) / (cy + d) with ad - bc = +-1, decided through the repeating
/// blocks of the two expansions. Throws DomainError unless both lie in Ω.
bool modular_equivalent(const QuadraticSurd& x, const QuadraticSurd& y);

/// Mx - floor(Mx), an element of Ω equivalent to x. Throws DomainError off Ω.
QuadraticSurd apply_and_reduce(const UnimodularMatrix& m, const QuadraticSurd& x);

/// Least rotation of the repeating block: the label of the class [x] in Ω/~.
Word omega_class_label(const QuadraticSurd& x);

}  // namespace cuntzcf
