#include "cuntzcf/bigint.hpp"

#include <cctype>

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  if (sgn(d) == 0) throw ZeroDenominator("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace cuntzcf
