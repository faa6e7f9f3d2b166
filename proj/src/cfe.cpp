#include "cuntzcf/cfe.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

i128 floor_div128(i128 n, i128 d) {
  i128 q = n / d;
  if (n % d != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

Letter to_letter(const BigInt& a) {
  if (sgn(a) < 1 || !mpz_fits_ulong_p(a.get_mpz_t()) || sizeof(unsigned long) < sizeof(Letter)) {
    throw QuotientOverflow("partial quotient " + to_string(a) + " does not fit a letter");
  }
  return static_cast<Letter>(a.get_ui());
}

// Both steppers iterate y -> 1 / (y - floor(y)) on y = (P + sqrt(D)) / Q:
//   a = floor(y),  P' = aQ - P,  Q' = (D - P'^2) / Q.

// Machine-word stepper. step() reports false on overflow; the caller then
// restarts with BigStepper.
class SmallStepper {
 public:
  static std::optional<SmallStepper> from(const PQState& s) {
    for (const BigInt* v : {&s.P, &s.Q, &s.D}) {
      if (!mpz_fits_slong_p(v->get_mpz_t())) return std::nullopt;
      const long x = v->get_si();
      if (x >= kSmallLimit || x <= -kSmallLimit) return std::nullopt;
    }
    SmallStepper out;
    out.P_ = s.P.get_si();
    out.Q_ = s.Q.get_si();
    out.D_ = s.D.get_si();
    out.root_ = isqrt(s.D).get_si();
    return out;
  }

  bool step(Letter& quotient) {
    const i128 a = Q_ > 0 ? floor_div128(i128{P_} + root_, Q_) : floor_div128(-i128{P_} - root_ - 1, -i128{Q_});
    const i128 p_next = a * Q_ - P_;
    if (a < 1 || !fits64(a) || !fits64(p_next)) return false;
    const i128 q_next = (i128{D_} - p_next * p_next) / Q_;
    if (!fits64(q_next) || q_next == 0) return false;
    quotient = static_cast<Letter>(a);
    P_ = static_cast<std::int64_t>(p_next);
    Q_ = static_cast<std::int64_t>(q_next);
    return true;
  }

  std::pair<std::int64_t, std::int64_t> key() const { return {P_, Q_}; }

 private:
  std::int64_t P_ = 0, Q_ = 1, D_ = 0, root_ = 0;
};

class BigStepper {
 public:
  explicit BigStepper(const PQState& s) : P_(s.P), Q_(s.Q), D_(s.D), root_(isqrt(s.D)) {}

  bool step(Letter& quotient) {
    BigInt a = sgn(Q_) > 0 ? floor_div(P_ + root_, Q_) : floor_div(-P_ - root_ - 1, BigInt(-Q_));
    quotient = to_letter(a);
    P_ = a * Q_ - P_;
    BigInt num = D_ - P_ * P_;
    mpz_divexact(Q_.get_mpz_t(), num.get_mpz_t(), Q_.get_mpz_t());
    return true;
  }

  std::pair<BigInt, BigInt> key() const { return {P_, Q_}; }

 private:
  BigInt P_, Q_, D_, root_;
};

struct PairHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(k.first);
    const auto h2 = std::hash<std::int64_t>{}(k.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

template <class Stepper>
bool expand_with(Stepper stepper, std::size_t n, Word& out) {
  out.clear();
  out.reserve(n);
  Letter a = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!stepper.step(a)) return false;
    out.push_back(a);
  }
  return true;
}

template <class Stepper, class Visited>
std::optional<PeriodicCFE> periodic_with(Stepper stepper, Visited visited) {
  Word quotients;
  Letter a = 0;
  for (std::size_t k = 0;; ++k) {
    auto [it, fresh] = visited.emplace(stepper.key(), k);
    if (!fresh) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      return minimal_period_normalize(Word(quotients.begin(), quotients.begin() + start),
                                      Word(quotients.begin() + start, quotients.end()));
    }
    if (!stepper.step(a)) return std::nullopt;
    quotients.push_back(a);
  }
}

// State of 1/x for x in Ω, so that the first emitted quotient is a_1(x).
PQState reciprocal_state(const QuadraticSurd& x) {
  if (!in_omega(x)) throw DomainError("expansion needs 0 < x < 1, got " + to_string(x));
  PQState s = to_pq_form(x);
  BigInt q = (s.D - s.P * s.P) / s.Q;
  return {-s.P, std::move(q), std::move(s.D)};
}

}  // namespace

PQState to_pq_form(const QuadraticSurd& x) {
  // (a + b sqrt d) / c = (a + sqrt(b^2 d)) / c for b > 0; flip signs for b < 0.
  PQState s{x.a(), x.c(), x.b() * x.b() * x.d()};
  if (sgn(x.b()) < 0) {
    s.P = -s.P;
    s.Q = -s.Q;
  }
  if (!mpz_divisible_p(BigInt(s.D - s.P * s.P).get_mpz_t(), s.Q.get_mpz_t())) {
    const BigInt scale = abs(s.Q);
    s.P *= scale;
    s.D *= scale * scale;
    s.Q *= scale;
  }
  return s;
}

PeriodicCFE PeriodicCFE::make(Word initial, Word period) {
  return minimal_period_normalize(std::move(initial), std::move(period));
}

Letter PeriodicCFE::at(std::size_t i) const {
  if (i < initial_.size()) return initial_[i];
  return period_[(i - initial_.size()) % period_.size()];
}

Word PeriodicCFE::prefix(std::size_t n) const {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

PeriodicCFE minimal_period_normalize(Word initial, Word period) {
  if (period.empty()) throw EmptyWord("repeating block must be nonempty");
  auto positive = [](Letter v) { return v >= 1; };
  if (!std::all_of(initial.begin(), initial.end(), positive) || !std::all_of(period.begin(), period.end(), positive)) {
    throw DomainError("partial quotients must be >= 1");
  }
  period = primitive_root(period);
  while (!initial.empty() && initial.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    initial.pop_back();
  }
  return PeriodicCFE(std::move(initial), std::move(period));
}

Word cfe_expand(const QuadraticSurd& x, std::size_t n) {
  const PQState start = reciprocal_state(x);
  Word out;
  if (auto small = SmallStepper::from(start); small && expand_with(*small, n, out)) return out;
  expand_with(BigStepper(start), n, out);
  return out;
}

PeriodicCFE cfe_periodic(const QuadraticSurd& x) {
  const PQState start = reciprocal_state(x);
  if (auto small = SmallStepper::from(start)) {
    using SmallMap = std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::size_t, PairHash>;
    if (auto e = periodic_with(*small, SmallMap{})) return *e;
  }
  return *periodic_with(BigStepper(start), std::map<std::pair<BigInt, BigInt>, std::size_t>{});
}

QuadraticSurd surd_from_cfe(const PeriodicCFE& e) {
  // Purely periodic tail y = M y with M = M_{n1} ... M_{nk}, M_a = [[0,1],[1,a]]:
  // r y^2 + (s - p) y - q = 0. Exactly one root lies in (0,1).
  UnimodularMatrix m = UnimodularMatrix::identity();
  for (Letter a : e.period()) m = m * UnimodularMatrix::quotient(BigInt(static_cast<unsigned long>(a)));
  // Dividing out the content keeps the radicand at the minimal polynomial's
  // discriminant, so squarefree extraction stays cheap.
  BigInt r = m.m21(), b = m.m22() - m.m11(), q = m.m12();
  const BigInt g = gcd(gcd(r, b), q);
  r /= g;
  b /= g;
  q /= g;
  const BigInt disc = b * b + 4 * r * q;
  const QuadraticSurd plus = QuadraticSurd::normalize(-b, 1, 2 * r, disc);
  const QuadraticSurd minus = QuadraticSurd::normalize_squarefree(plus.a(), -plus.b(), plus.c(), plus.d());
  const QuadraticSurd& tail = in_omega(plus) ? plus : minus;
  if (!in_omega(tail)) throw DomainError("no root of the period equation lies in (0,1)");
  if (e.initial().empty()) return tail;
  UnimodularMatrix head = UnimodularMatrix::identity();
  for (Letter a : e.initial()) head = head * UnimodularMatrix::quotient(BigInt(static_cast<unsigned long>(a)));
  return mobius_apply(head, tail);
}

PeriodicCFE sigma_shift(const PeriodicCFE& e) { return drop_prefix(e, 1); }

PeriodicCFE drop_prefix(const PeriodicCFE& e, std::size_t n) {
  if (n <= e.initial().size()) {
    return minimal_period_normalize(Word(e.initial().begin() + static_cast<std::ptrdiff_t>(n), e.initial().end()),
                                    e.period());
  }
  return minimal_period_normalize({}, rotate_left(e.period(), n - e.initial().size()));
}

PeriodicCFE prepend(std::span<const Letter> w, const PeriodicCFE& e) {
  Word initial(w.begin(), w.end());
  initial.insert(initial.end(), e.initial().begin(), e.initial().end());
  return minimal_period_normalize(std::move(initial), e.period());
}

std::string to_string(const PeriodicCFE& e) {
  std::string out = format_word(e.initial());
  if (!out.empty()) out += ',';
  return out + "(" + format_word(e.period()) + ")";
}

PeriodicCFE parse_block(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')' ||
      text.find('(', open + 1) != std::string_view::npos || text.find(')') != text.size() - 1) {
    throw ParseError("not a block literal: '" + std::string(text) + "'");
  }
  std::string_view head = text.substr(0, open);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
  if (!head.empty()) {
    if (head.back() != ',') throw ParseError("initial block must end with ',': '" + std::string(text) + "'");
    head.remove_suffix(1);
    if (head.find_first_not_of(" \t") == std::string_view::npos) {
      throw ParseError("empty initial block before ',': '" + std::string(text) + "'");
    }
  }
  Word initial = parse_word(head);
  Word period = parse_word(text.substr(open + 1, text.size() - open - 2));
  if (period.empty()) throw ParseError("repeating block must be nonempty: '" + std::string(text) + "'");
  return minimal_period_normalize(std::move(initial), std::move(period));
}

}  // namespace cuntzcf
