#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "cuntzcf/surd.hpp"
#include "cuntzcf/word.hpp"

namespace cuntzcf {

/// Three-valued answer for questions that are only semi-decidable on chains.
enum class Verdict { No, Yes, Unknown };

std::string to_string(Verdict v);

/**
 * Normal form s_A s_B^* of a product of Cuntz generators and their adjoints,
 * or the zero operator. The empty pair (A, B) = ((), ()) is the identity.
 *
 * Every product of generators s_i and adjoints s_i^* reduces to this form
 * through s_i^* s_j = delta_ij I.
 */
class WordOperator {
 public:
  /// s_A s_B^*. Throws DomainError for a letter < 1.
  static WordOperator make(Word left, Word right);
  static WordOperator identity() { return WordOperator(); }
  static WordOperator zero();
  /// s_i
  static WordOperator generator(Letter i) { return make({i}, {}); }
  /// s_i^*
  static WordOperator generator_adjoint(Letter i) { return make({}, {i}); }

  bool is_zero() const { return zero_; }
  bool is_identity() const { return !zero_ && left_.empty() && right_.empty(); }
  const Word& left() const { return left_; }
  const Word& right() const { return right_; }

  /// (s_A s_B^*)^* = s_B s_A^*
  WordOperator adjoint() const;

  friend bool operator==(const WordOperator&, const WordOperator&) = default;

 private:
  WordOperator() = default;

  bool zero_ = false;
  Word left_;
  Word right_;
};

/// (s_A s_B^*)(s_C s_D^*): s_{A.(C\B)} s_D^* if B is a prefix of C,
/// s_A s_{D.(B\C)}^* if C is a proper prefix of B, zero otherwise.
WordOperator word_op_mul(const WordOperator& u, const WordOperator& v);

inline WordOperator operator*(const WordOperator& u, const WordOperator& v) { return word_op_mul(u, v); }

/// `I`, `0`, or e.g. `s(1,2) s(3)*`.
std::string to_string(const WordOperator& op);

/// Lazily evaluated continuation of a chain label: letter k of the tail.
using LetterSource = std::function<Letter(std::size_t)>;

/**
 * Class of a cyclic permutative representation P(J).
 *
 * A cycle carries its word J in canonical form (primitive, least rotation).
 * A chain (J infinite) carries a known finite prefix and optionally a lazy
 * tail; chains sharing the same tail object are tail equivalent by
 * construction, otherwise their equivalence is undecided.
 */
class RepClass {
 public:
  /// Throws EmptyWord, or NotPrimitive for a periodic J.
  static RepClass cycle(const Word& J);
  static RepClass chain(Word prefix, std::shared_ptr<const LetterSource> tail = nullptr);

  bool is_cycle() const { return std::holds_alternative<Cycle>(v_); }
  bool is_chain() const { return !is_cycle(); }

  /// Canonical word of a cycle. Throws std::logic_error on a chain.
  const Word& cycle_word() const;

  /// First n letters of a chain, as far as they are known.
  Word chain_prefix(std::size_t n) const;
  const std::shared_ptr<const LetterSource>& chain_tail() const;

  /// `P(1,2,3)` for a cycle; `P(1,2,3,...)` for a chain, showing at least
  /// the stored prefix and up to `chain_terms` letters in total.
  std::string to_string(std::size_t chain_terms = 0) const;

 private:
  struct Cycle {
    Word word;
  };
  struct Chain {
    Word prefix;
    std::shared_ptr<const LetterSource> tail;
  };
  explicit RepClass(std::variant<Cycle, Chain> v) : v_(std::move(v)) {}

  std::variant<Cycle, Chain> v_;
};

/// Parses `P(1,2,3)` (a cycle) or `P(1,2,3,...)` (a chain prefix without tail).
RepClass parse_rep_class(std::string_view text);

/// J is not fixed by any nontrivial rotation. Throws EmptyWord.
bool is_nonperiodic(const Word& J);

/// Least rotation of a primitive word. Throws EmptyWord or NotPrimitive.
Word canonical_cycle(const Word& J);

/// Cycle vs chain is always No; cycles compare by rotation; chains are Yes
/// when they share a tail source and Unknown otherwise.
Verdict pj_equivalent(const RepClass& J, const RepClass& K);

/// P(repeating block of x), the class of the subrepresentation at [x].
/// Throws DomainError off Ω.
RepClass classify_surd(const QuadraticSurd& x);

/// The first n+1 partial quotients of 1/(x+i) are i followed by the first n
/// of x. Throws DomainError off Ω.
bool intertwiner_check(const QuadraticSurd& x, Letter i, std::size_t n);

}  // namespace cuntzcf
