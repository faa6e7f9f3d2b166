#pragma once

#include <string>
#include <string_view>

#include "cuntzcf/bigint.hpp"

namespace cuntzcf {

/**
 * Exact real quadratic irrational (a + b*sqrt(d)) / c.
 *
 * Always held in canonical form: c > 0, gcd(a, b, c) = 1, d >= 2 squarefree
 * and b != 0. Two surds with the same value therefore compare equal
 * field by field. Membership in Ω = (0,1) is not an invariant; see in_omega().
 */
class QuadraticSurd {
 public:
  /// Canonicalizes (a + b*sqrt(d)) / c. Throws ZeroDenominator, NotIrrational,
  /// or DomainError (d <= 0).
  static QuadraticSurd normalize(BigInt a, BigInt b, BigInt c, BigInt d);

  /// Same as normalize() but trusts that d is already squarefree and >= 2.
  static QuadraticSurd normalize_squarefree(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  BigInt a_, b_, c_, d_;
};

/// Integer 2x2 matrix with determinant +1 or -1, acting by x -> (m11 x + m12) / (m21 x + m22).
class UnimodularMatrix {
 public:
  /// Throws DomainError unless m11*m22 - m12*m21 is +1 or -1.
  UnimodularMatrix(BigInt m11, BigInt m12, BigInt m21, BigInt m22);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
  /// x -> x + 1
  static UnimodularMatrix translation(const BigInt& shift) { return {1, shift, 0, 1}; }
  /// x -> 1 / x
  static UnimodularMatrix swap() { return {0, 1, 1, 0}; }
  /// x -> 1 / (x + a), the prepend map of a continued fraction.
  static UnimodularMatrix quotient(const BigInt& a) { return {0, 1, 1, a}; }

  const BigInt& m11() const { return m11_; }
  const BigInt& m12() const { return m12_; }
  const BigInt& m21() const { return m21_; }
  const BigInt& m22() const { return m22_; }

  int determinant() const;
  UnimodularMatrix inverse() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  struct Trusted {};
  UnimodularMatrix(Trusted, BigInt m11, BigInt m12, BigInt m21, BigInt m22)
      : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {}

  BigInt m11_, m12_, m21_, m22_;
};

/// Exact floor, by integer square-root bracketing.
BigInt floor_of(const QuadraticSurd& x);

/// 0 < x < 1.
bool in_omega(const QuadraticSurd& x);

/// Gauss map 1/x - floor(1/x). Throws DomainError unless x is in Ω.
QuadraticSurd gauss_tau(const QuadraticSurd& x);

/// (m11 x + m12) / (m21 x + m22). Never fails for irrational x.
QuadraticSurd mobius_apply(const UnimodularMatrix& m, const QuadraticSurd& x);

/// x - floor(x).
QuadraticSurd fractional_part(const QuadraticSurd& x);

/// B^2 - 4AC of the primitive minimal polynomial A x^2 + B x + C (A > 0).
BigInt poly_discriminant(const QuadraticSurd& x);

/// Fundamental discriminant of Q(sqrt(d)): d if d = 1 mod 4, else 4d.
BigInt field_discriminant(const QuadraticSurd& x);

/// Canonical text `(a+b*sqrt(d))/c`; a negative b prints as `(a-|b|*sqrt(d))/c`.
std::string to_string(const QuadraticSurd& x);

/// Parses `(<a>+<b>*sqrt(<d>))/<c>` with optional signs. Non-squarefree
/// radicands are accepted and normalized. Throws ParseError or a DomainError.
QuadraticSurd parse_surd(std::string_view text);

/// x truncated toward -inf to `digits` decimal places, computed exactly.
std::string decimal_approx(const QuadraticSurd& x, unsigned digits);

}  // namespace cuntzcf
