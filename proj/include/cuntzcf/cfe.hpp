#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "cuntzcf/bigint.hpp"
#include "cuntzcf/surd.hpp"
#include "cuntzcf/word.hpp"

namespace cuntzcf {

/// (P + sqrt(D)) / Q with Q | D - P^2, the state of the expansion loop.
struct PQState {
  BigInt P;
  BigInt Q;
  BigInt D;

  friend bool operator==(const PQState&, const PQState&) = default;
};

PQState to_pq_form(const QuadraticSurd& x);

/**
 * Eventually periodic sequence initial . period . period . ...
 *
 * Canonical: the period is primitive and nonempty, and the initial block
 * does not end with the last letter of the period (so no trailing copy or
 * partial rotation of the period can be absorbed). Each infinite sequence
 * has exactly one such representation.
 */
class PeriodicCFE {
 public:
  /// Same as minimal_period_normalize().
  static PeriodicCFE make(Word initial, Word period);

  const Word& initial() const { return initial_; }
  const Word& period() const { return period_; }

  /// i-th letter of the infinite sequence (0-based).
  Letter at(std::size_t i) const;

  /// First n letters.
  Word prefix(std::size_t n) const;

  friend bool operator==(const PeriodicCFE&, const PeriodicCFE&) = default;
  friend auto operator<=>(const PeriodicCFE&, const PeriodicCFE&) = default;

 private:
  PeriodicCFE(Word initial, Word period) : initial_(std::move(initial)), period_(std::move(period)) {}
  friend PeriodicCFE minimal_period_normalize(Word initial, Word period);

  Word initial_;
  Word period_;
};

/// Reduces the period to its primitive root and absorbs trailing copies or
/// partial rotations of it out of the initial block. Throws EmptyWord for an
/// empty period and DomainError for a letter < 1.
PeriodicCFE minimal_period_normalize(Word initial, Word period);

/// First n partial quotients of x in Ω. Throws DomainError off Ω.
Word cfe_expand(const QuadraticSurd& x, std::size_t n);

/// Canonical eventually periodic expansion of x in Ω. Throws DomainError off Ω.
PeriodicCFE cfe_periodic(const QuadraticSurd& x);

/// The unique x in Ω whose expansion is e.
QuadraticSurd surd_from_cfe(const PeriodicCFE& e);

/// Drops the first letter.
PeriodicCFE sigma_shift(const PeriodicCFE& e);

/// Drops the first n letters.
PeriodicCFE drop_prefix(const PeriodicCFE& e, std::size_t n);

/// Prepends the word w (the prepend maps i -> (i, n1, n2, ...)).
PeriodicCFE prepend(std::span<const Letter> w, const PeriodicCFE& e);

/// `2,1,(3,1,4)` or `(1,2,3)`.
std::string to_string(const PeriodicCFE& e);

/// Inverse of to_string. Non-canonical input is normalized. Throws ParseError.
PeriodicCFE parse_block(std::string_view text);

}  // namespace cuntzcf
