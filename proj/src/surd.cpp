#include "cuntzcf/surd.hpp"

#include <cstdint>
#include <limits>
#include <regex>

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

namespace {

struct SquareSplit {
  BigInt square_root;  // s with d = s^2 * core
  BigInt core;         // squarefree
};

// Trial division only has to run up to the cube root of the remaining
// cofactor m: past that point m has at most two prime factors, so it is
// squarefree unless it is a perfect square.
SquareSplit split_square_small(std::uint64_t d) {
  std::uint64_t root = 1;
  std::uint64_t core = 1;
  std::uint64_t m = d;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) core *= p;
  };
  strip(2);
  for (std::uint64_t p = 3; p <= m / (p * p); p += 2) strip(p);
  BigInt rest(static_cast<unsigned long>(m));
  BigInt r = isqrt(rest);
  BigInt out_root(static_cast<unsigned long>(root));
  BigInt out_core = BigInt(static_cast<unsigned long>(core));
  if (r * r == rest) {
    out_root *= r;
  } else {
    out_core *= rest;
  }
  return {out_root, out_core};
}

SquareSplit split_square(const BigInt& d) {
  if (mpz_fits_ulong_p(d.get_mpz_t()) && sizeof(unsigned long) >= 8) {
    return split_square_small(d.get_ui());
  }
  BigInt root = 1;
  BigInt core = 1;
  BigInt m = d;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) core *= p;
  };
  strip(2);
  for (unsigned long p = 3; BigInt(p) * p * p <= m; p += 2) {
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
      SquareSplit rest = split_square_small(m.get_ui());
      return {root * rest.square_root, core * rest.core};
    }
    strip(p);
  }
  BigInt r = isqrt(m);
  if (r * r == m) {
    root *= r;
  } else {
    core *= m;
  }
  return {root, core};
}

// floor(b * sqrt(d)) for irrational sqrt(d).
BigInt floor_scaled_root(const BigInt& b, const BigInt& d) {
  BigInt t = isqrt(b * b * d);
  return sgn(b) >= 0 ? t : BigInt(-t - 1);
}

}  // namespace

QuadraticSurd QuadraticSurd::normalize(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (sgn(c) == 0) throw ZeroDenominator("surd denominator is zero");
  if (sgn(d) <= 0) throw DomainError("radicand must be positive");
  SquareSplit split = split_square(d);
  if (split.core == 1) throw NotIrrational("sqrt(" + to_string(d) + ") is rational");
  return normalize_squarefree(std::move(a), b * split.square_root, std::move(c), std::move(split.core));
}

QuadraticSurd QuadraticSurd::normalize_squarefree(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (sgn(c) == 0) throw ZeroDenominator("surd denominator is zero");
  if (sgn(b) == 0) throw NotIrrational("irrational part vanishes");
  BigInt g = gcd(gcd(a, b), c);
  if (g != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (sgn(c) < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return QuadraticSurd(std::move(a), std::move(b), std::move(c), std::move(d));
}

UnimodularMatrix::UnimodularMatrix(BigInt m11, BigInt m12, BigInt m21, BigInt m22)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {
  BigInt det = m11_ * m22_ - m12_ * m21_;
  if (det != 1 && det != -1) throw DomainError("matrix determinant is " + to_string(det) + ", expected +-1");
}

int UnimodularMatrix::determinant() const {
  BigInt det = m11_ * m22_ - m12_ * m21_;
  return det == 1 ? 1 : -1;
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  // adj(M) / det(M)
  if (determinant() == 1) return {Trusted{}, m22_, -m12_, -m21_, m11_};
  return {Trusted{}, -m22_, m12_, m21_, -m11_};
}

UnimodularMatrix operator*(const UnimodularMatrix& l, const UnimodularMatrix& r) {
  return {UnimodularMatrix::Trusted{}, l.m11_ * r.m11_ + l.m12_ * r.m21_, l.m11_ * r.m12_ + l.m12_ * r.m22_,
          l.m21_ * r.m11_ + l.m22_ * r.m21_, l.m21_ * r.m12_ + l.m22_ * r.m22_};
}

BigInt floor_of(const QuadraticSurd& x) {
  // floor((a + y) / c) = floor((a + floor(y)) / c) for c > 0
  return floor_div(x.a() + floor_scaled_root(x.b(), x.d()), x.c());
}

bool in_omega(const QuadraticSurd& x) { return sgn(floor_of(x)) == 0; }

QuadraticSurd mobius_apply(const UnimodularMatrix& m, const QuadraticSurd& x) {
  // (p + q r) / (u + v r) with r = sqrt(d), rationalized by the conjugate u - v r.
  const BigInt p = m.m11() * x.a() + m.m12() * x.c();
  const BigInt q = m.m11() * x.b();
  const BigInt u = m.m21() * x.a() + m.m22() * x.c();
  const BigInt v = m.m21() * x.b();
  BigInt den = u * u - v * v * x.d();
  if (sgn(den) == 0) throw DegenerateImage("Mobius image has a vanishing denominator");
  return QuadraticSurd::normalize_squarefree(p * u - q * v * x.d(), q * u - p * v, std::move(den), x.d());
}

QuadraticSurd fractional_part(const QuadraticSurd& x) {
  BigInt f = floor_of(x);
  return QuadraticSurd::normalize_squarefree(x.a() - f * x.c(), x.b(), x.c(), x.d());
}

QuadraticSurd gauss_tau(const QuadraticSurd& x) {
  if (!in_omega(x)) throw DomainError("Gauss map needs 0 < x < 1, got " + to_string(x));
  return fractional_part(mobius_apply(UnimodularMatrix::swap(), x));
}

BigInt poly_discriminant(const QuadraticSurd& x) {
  // (c x - a)^2 = b^2 d  gives  c^2 x^2 - 2ac x + (a^2 - b^2 d) = 0 with
  // discriminant 4 b^2 c^2 d; divide out the content g of the coefficients.
  const BigInt lead = x.c() * x.c();
  const BigInt mid = 2 * x.a() * x.c();
  const BigInt tail = x.a() * x.a() - x.b() * x.b() * x.d();
  const BigInt g = gcd(gcd(lead, mid), tail);
  BigInt disc = 4 * x.b() * x.b() * lead * x.d();
  return disc / (g * g);
}

BigInt field_discriminant(const QuadraticSurd& x) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.d().get_mpz_t(), 4);
  return r == 1 ? x.d() : BigInt(4 * x.d());
}

std::string to_string(const QuadraticSurd& x) {
  std::string out = "(" + to_string(x.a());
  if (sgn(x.b()) < 0) {
    out += "-" + to_string(BigInt(-x.b()));
  } else {
    out += "+" + to_string(x.b());
  }
  out += "*sqrt(" + to_string(x.d()) + "))/" + to_string(x.c());
  return out;
}

QuadraticSurd parse_surd(std::string_view text) {
  static const std::regex grammar(
      R"(^\s*\(\s*([+-]?\d+)\s*([+-])\s*([+-]?\d+)\s*\*\s*sqrt\s*\(\s*(\d+)\s*\)\s*\)\s*/\s*([+-]?\d+)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
    throw ParseError("not a surd literal: '" + std::string(text) + "'");
  }
  BigInt a = parse_bigint(m[1].str());
  BigInt b = parse_bigint(m[3].str());
  if (m[2].str() == "-") b = -b;
  return QuadraticSurd::normalize(std::move(a), std::move(b), parse_bigint(m[5].str()), parse_bigint(m[4].str()));
}

std::string decimal_approx(const QuadraticSurd& x, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // floor(x * 10^digits) is exact; the digits are a certified truncation.
  BigInt scaled = floor_div(x.a() * scale + floor_scaled_root(x.b() * scale, x.d()), x.c());
  std::string out = sgn(scaled) < 0 ? "-" : "";
  if (sgn(scaled) < 0) scaled = -scaled;
  BigInt whole = scaled / scale;
  BigInt frac = scaled - whole * scale;
  out += to_string(whole);
  if (digits > 0) {
    std::string f = to_string(frac);
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace cuntzcf
