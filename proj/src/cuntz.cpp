#include "cuntzcf/cuntz.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/errors.hpp"

namespace cuntzcf {

namespace {

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

Word concat(const Word& a, Word::const_iterator from, Word::const_iterator to) {
  Word out = a;
  out.insert(out.end(), from, to);
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "true";
    case Verdict::No:
      return "false";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

WordOperator WordOperator::make(Word left, Word right) {
  auto positive = [](Letter v) { return v >= 1; };
  if (!std::all_of(left.begin(), left.end(), positive) || !std::all_of(right.begin(), right.end(), positive)) {
    throw DomainError("generator indices must be >= 1");
  }
  WordOperator op;
  op.left_ = std::move(left);
  op.right_ = std::move(right);
  return op;
}

WordOperator WordOperator::zero() {
  WordOperator op;
  op.zero_ = true;
  return op;
}

WordOperator WordOperator::adjoint() const {
  if (zero_) return *this;
  return make(right_, left_);
}

WordOperator word_op_mul(const WordOperator& u, const WordOperator& v) {
  if (u.is_zero() || v.is_zero()) return WordOperator::zero();
  const Word& b = u.right();
  const Word& c = v.left();
  if (is_prefix(b, c)) {
    return WordOperator::make(concat(u.left(), c.begin() + static_cast<std::ptrdiff_t>(b.size()), c.end()), v.right());
  }
  if (is_prefix(c, b)) {
    return WordOperator::make(u.left(), concat(v.right(), b.begin() + static_cast<std::ptrdiff_t>(c.size()), b.end()));
  }
  return WordOperator::zero();
}

std::string to_string(const WordOperator& op) {
  if (op.is_zero()) return "0";
  if (op.is_identity()) return "I";
  std::string out;
  if (!op.left().empty()) out += "s(" + format_word(op.left()) + ")";
  if (!op.right().empty()) out += std::string(out.empty() ? "" : " ") + "s(" + format_word(op.right()) + ")*";
  return out;
}

RepClass RepClass::cycle(const Word& J) { return RepClass(Cycle{canonical_cycle(J)}); }

RepClass RepClass::chain(Word prefix, std::shared_ptr<const LetterSource> tail) {
  if (std::any_of(prefix.begin(), prefix.end(), [](Letter v) { return v < 1; })) {
    throw DomainError("chain letters must be >= 1");
  }
  return RepClass(Chain{std::move(prefix), std::move(tail)});
}

const Word& RepClass::cycle_word() const {
  if (const auto* c = std::get_if<Cycle>(&v_)) return c->word;
  throw std::logic_error("cycle_word() called on a chain");
}

Word RepClass::chain_prefix(std::size_t n) const {
  const auto* c = std::get_if<Chain>(&v_);
  if (c == nullptr) throw std::logic_error("chain_prefix() called on a cycle");
  Word out(c->prefix.begin(), c->prefix.begin() + static_cast<std::ptrdiff_t>(std::min(n, c->prefix.size())));
  for (std::size_t k = 0; c->tail && out.size() < n; ++k) out.push_back((*c->tail)(k));
  return out;
}

const std::shared_ptr<const LetterSource>& RepClass::chain_tail() const {
  const auto* c = std::get_if<Chain>(&v_);
  if (c == nullptr) throw std::logic_error("chain_tail() called on a cycle");
  return c->tail;
}

std::string RepClass::to_string(std::size_t chain_terms) const {
  if (is_cycle()) return "P(" + format_word(cycle_word()) + ")";
  const auto& c = std::get<Chain>(v_);
  Word shown = chain_prefix(std::max(chain_terms, c.prefix.size()));
  return "P(" + format_word(shown) + (shown.empty() ? "..." : ",...") + ")";
}

RepClass parse_rep_class(std::string_view text) {
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.size() < 3 || text.substr(0, 2) != "P(" || text.back() != ')') {
    throw ParseError("not a representation class: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(2, text.size() - 3);
  if (body.size() >= 3 && body.substr(body.size() - 3) == "...") {
    body.remove_suffix(3);
    while (!body.empty() && (body.back() == ' ' || body.back() == ',')) body.remove_suffix(1);
    return RepClass::chain(parse_word(body));
  }
  Word J = parse_word(body);
  if (J.empty()) throw ParseError("P() needs a nonempty word");
  return RepClass::cycle(J);
}

bool is_nonperiodic(const Word& J) { return is_primitive(J); }

Word canonical_cycle(const Word& J) {
  if (!is_nonperiodic(J)) throw NotPrimitive("(" + format_word(J) + ") is a proper power");
  return least_rotation(J);
}

Verdict pj_equivalent(const RepClass& J, const RepClass& K) {
  if (J.is_cycle() != K.is_cycle()) return Verdict::No;
  if (J.is_cycle()) return J.cycle_word() == K.cycle_word() ? Verdict::Yes : Verdict::No;
  if (J.chain_tail() && J.chain_tail() == K.chain_tail()) return Verdict::Yes;
  return Verdict::Unknown;
}

RepClass classify_surd(const QuadraticSurd& x) { return RepClass::cycle(cfe_periodic(x).period()); }

bool intertwiner_check(const QuadraticSurd& x, Letter i, std::size_t n) {
  if (!in_omega(x)) throw DomainError("intertwiner check needs 0 < x < 1, got " + to_string(x));
  if (i < 1) throw DomainError("generator index must be >= 1");
  const QuadraticSurd image = mobius_apply(UnimodularMatrix::quotient(BigInt(static_cast<unsigned long>(i))), x);
  Word expected{i};
  const Word tail = cfe_expand(x, n);
  expected.insert(expected.end(), tail.begin(), tail.end());
  return cfe_expand(image, n + 1) == expected;
}

}  // namespace cuntzcf
