#include <doctest.h>

#include <random>

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/errors.hpp"
#include "cuntzcf/sweeps.hpp"
#include "oracles.hpp"

using namespace cuntzcf;

namespace {

QuadraticSurd S(long a, long b, long c, long d) { return QuadraticSurd::normalize(a, b, c, d); }
PeriodicCFE B(Word initial, Word period) { return PeriodicCFE::make(std::move(initial), std::move(period)); }

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("periods and primitivity") {
    CHECK(smallest_period(Word{1, 2, 1, 2}) == 2);
    CHECK(smallest_period(Word{1, 2, 1}) == 2);
    CHECK(is_primitive(Word{1, 2}));
    CHECK_FALSE(is_primitive(Word{1, 2, 1, 2}));
    CHECK(is_primitive(Word{1}));
    CHECK(is_primitive(Word{1, 2, 1}));
    CHECK_THROWS_AS(is_primitive(Word{}), EmptyWord);
    CHECK(primitive_root(Word{3, 1, 3, 1, 3, 1}) == Word{3, 1});
  }

  TEST_CASE("least rotation agrees with brute force") {
    CHECK(least_rotation(Word{2, 3, 1}) == Word{1, 2, 3});
    CHECK(least_rotation(Word{1, 1, 2, 1, 1, 1}) == Word{1, 1, 1, 1, 1, 2});
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20000; ++t) {
      const Word w = oracle::random_word(rng, 1 + rng() % 9, 1 + rng() % 3);
      REQUIRE(least_rotation(w) == oracle::least_rotation_brute(w));
      REQUIRE(is_primitive(w) == oracle::primitive_brute(w));
      const Word v = oracle::random_word(rng, w.size(), 3);
      REQUIRE(rotation_equal(w, v) == oracle::rotation_equal_brute(w, v));
      REQUIRE(rotation_equal(w, rotate_left(w, rng() % w.size())));
    }
  }

  TEST_CASE("text") {
    CHECK(format_word(Word{1, 2, 3}) == "1,2,3");
    CHECK(parse_word(" 1, 2 ,3 ") == Word{1, 2, 3});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("1,0"), ParseError);
    CHECK_THROWS_AS(parse_word("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_word("1,-2"), ParseError);
    CHECK_THROWS_AS(parse_word("x"), ParseError);
  }
}

TEST_SUITE("to_pq_form") {
  TEST_CASE("examples") {
    CHECK(to_pq_form(S(-1, 1, 2, 5)) == PQState{-1, 2, 5});
    CHECK(to_pq_form(S(-1, 1, 3, 2)) == PQState{-3, 9, 18});
    CHECK(to_pq_form(S(0, 1, 1, 2)) == PQState{0, 1, 2});
  }

  TEST_CASE("same value, Q divides D - P^2") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 2000; ++t) {
      const QuadraticSurd x = random_surd(rng, {});
      const PQState s = to_pq_form(x);
      CHECK((s.D - s.P * s.P) % s.Q == 0);
      CHECK(QuadraticSurd::normalize(s.P, 1, s.Q, s.D) == x);
    }
  }
}

TEST_SUITE("cfe_expand") {
  TEST_CASE("examples") {
    CHECK(cfe_expand(S(-1, 1, 2, 5), 5) == Word{1, 1, 1, 1, 1});
    CHECK(cfe_expand(S(-1, 1, 1, 2), 4) == Word{2, 2, 2, 2});
    CHECK(cfe_expand(S(-1, 1, 1, 3), 4) == Word{1, 2, 1, 2});
    CHECK(cfe_expand(S(-1, 1, 1, 3), 0).empty());
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(cfe_expand(S(1, 1, 2, 5), 3), DomainError);
    CHECK_THROWS_AS(cfe_expand(S(-3, 1, 1, 2), 3), DomainError);
  }

  TEST_CASE("agrees with the Gauss-map oracle on large coefficients") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
      const QuadraticSurd x = random_omega_surd(rng, {});
      const Word got = cfe_expand(x, 40);
      REQUIRE(got == oracle::gauss_expand(oracle::QField::from(x), 40));
    }
  }

  TEST_CASE("prefix consistency and positivity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
      const QuadraticSurd x = random_omega_surd(rng, {});
      const Word longer = cfe_expand(x, 60);
      const Word shorter = cfe_expand(x, 25);
      CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
      for (Letter a : longer) CHECK(a >= 1);
    }
  }

  TEST_CASE("huge partial quotients fall back to exact big arithmetic") {
    // 1/(10^30 + golden): first quotient is 10^30 + 1 only if it fits a letter;
    // here it does not, so expansion must report the overflow, not wrap.
    const BigInt big = parse_bigint("1000000000000000000000000000000");
    const QuadraticSurd x = mobius_apply(UnimodularMatrix::quotient(big), S(-1, 1, 2, 5));
    CHECK_THROWS_AS(cfe_expand(x, 2), QuotientOverflow);
    const BigInt fits = parse_bigint("10000000000000000000");  // 10^19 < 2^64
    const QuadraticSurd y = mobius_apply(UnimodularMatrix::quotient(fits), S(-1, 1, 2, 5));
    CHECK(cfe_expand(y, 3) == Word{10000000000000000000ULL, 1, 1});
    CHECK(cfe_periodic(y) == B({10000000000000000000ULL}, {1}));
  }
}

TEST_SUITE("cfe_periodic") {
  TEST_CASE("examples") {
    CHECK(cfe_periodic(S(-1, 1, 2, 5)) == B({}, {1}));
    CHECK(cfe_periodic(S(-3, 1, 2, 13)) == B({}, {3}));
    CHECK(cfe_periodic(S(-1, 1, 1, 3)) == B({}, {1, 2}));
    CHECK(cfe_periodic(S(43, -1, 92, 101)) == B({2, 1}, {3, 1, 4}));
  }

  TEST_CASE("the (1,2,3) surd and the quoted (-5+sqrt 37)/2 differ") {
    CHECK(cfe_periodic(S(-4, 1, 3, 37)) == B({}, {1, 2, 3}));
    CHECK(cfe_periodic(S(-5, 1, 2, 37)) == B({}, {1, 1, 5}));
  }

  TEST_CASE("domain") { CHECK_THROWS_AS(cfe_periodic(S(1, 1, 2, 5)), DomainError); }

  TEST_CASE("agrees with the oracle expansion over two periods") {
    std::mt19937_64 rng(17);
    const SurdDistribution small{200, 60, 6, 60};
    for (int t = 0; t < 300; ++t) {
      const QuadraticSurd x = random_omega_surd(rng, small);
      const PeriodicCFE e = cfe_periodic(x);
      const std::size_t n = e.initial().size() + 2 * e.period().size() + 3;
      REQUIRE(oracle::unroll(e.initial(), e.period(), n) == oracle::gauss_expand(oracle::QField::from(x), n));
    }
  }
}

TEST_SUITE("minimal_period_normalize") {
  TEST_CASE("examples") {
    const PeriodicCFE a = minimal_period_normalize({}, {1, 2, 1, 2});
    CHECK(a.initial().empty());
    CHECK(a.period() == Word{1, 2});
    CHECK(minimal_period_normalize({1, 1}, {1}) == B({}, {1}));
    const PeriodicCFE c = minimal_period_normalize({2, 1}, {1});
    CHECK(c.initial() == Word{2});
    CHECK(c.period() == Word{1});
  }

  TEST_CASE("partial rotation absorption") {
    // 3,1,2,(3,1,2) and 3,(1,2,3) are the same sequence
    CHECK(minimal_period_normalize({3, 1, 2}, {3, 1, 2}) == B({}, {3, 1, 2}));
    CHECK(minimal_period_normalize({5, 2}, {1, 2}) == B({5}, {2, 1}));
    CHECK(minimal_period_normalize({1, 2}, {1, 2, 1, 2}) == B({}, {1, 2}));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(minimal_period_normalize({1}, {}), EmptyWord);
    CHECK_THROWS_AS(minimal_period_normalize({0}, {1}), DomainError);
    CHECK_THROWS_AS(minimal_period_normalize({}, {1, 0}), DomainError);
  }

  TEST_CASE("sequence unchanged and canonical") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20000; ++t) {
      const Word head = oracle::random_word(rng, rng() % 6, 3);
      const Word period = oracle::random_word(rng, 1 + rng() % 6, 3);
      const PeriodicCFE e = minimal_period_normalize(head, period);
      const std::size_t n = 40;
      REQUIRE(e.prefix(n) == oracle::unroll(head, period, n));
      REQUIRE(oracle::primitive_brute(e.period()));
      if (!e.initial().empty()) REQUIRE(e.initial().back() != e.period().back());
      REQUIRE(minimal_period_normalize(e.initial(), e.period()) == e);
    }
  }

  TEST_CASE("equal sequences give equal forms") {
    // The same infinite sequence written with different cut points.
    std::mt19937_64 rng(22);
    for (int t = 0; t < 5000; ++t) {
      const Word head = oracle::random_word(rng, rng() % 4, 2);
      const Word period = oracle::random_word(rng, 1 + rng() % 4, 2);
      const std::size_t extra = rng() % 7;
      const Word longer_head = oracle::unroll(head, period, head.size() + extra);
      Word rotated;
      for (std::size_t i = 0; i < period.size(); ++i) rotated.push_back(period[(i + extra) % period.size()]);
      REQUIRE(minimal_period_normalize(longer_head, rotated) == minimal_period_normalize(head, period));
    }
  }
}

TEST_SUITE("surd_from_cfe") {
  TEST_CASE("examples") {
    CHECK(surd_from_cfe(B({}, {1})) == S(-1, 1, 2, 5));
    CHECK(surd_from_cfe(B({}, {2})) == S(-1, 1, 1, 2));
    CHECK(surd_from_cfe(B({}, {2})) == S(-2, 1, 2, 8));
    CHECK(surd_from_cfe(B({}, {1, 2, 3})) == S(-4, 1, 3, 37));
    CHECK(surd_from_cfe(B({2, 1}, {3, 1, 4})) == S(43, -1, 92, 101));
  }

  TEST_CASE("one-cycle closed form for k up to 40") {
    for (long k = 1; k <= 40; ++k) {
      CHECK(surd_from_cfe(B({}, {static_cast<Letter>(k)})) == S(-k, 1, 2, k * k + 4));
    }
  }

  TEST_CASE("agrees with the field oracle") {
    std::mt19937_64 rng(30);
    for (int t = 0; t < 400; ++t) {
      const PeriodicCFE e = B(oracle::random_word(rng, rng() % 4, 7), oracle::random_word(rng, 1 + rng() % 5, 7));
      const QuadraticSurd x = surd_from_cfe(e);
      REQUIRE(in_omega(x));
      const std::size_t n = e.initial().size() + 2 * e.period().size() + 2;
      REQUIRE(oracle::gauss_expand(oracle::QField::from(x), n) == e.prefix(n));
    }
  }

  TEST_CASE("round trip A, small exhaustive") {
    const SweepStats s = round_trip_sweep(4, 2, 3, Exec::Serial);
    CHECK(s.cases > 1000);
    CHECK(s.ok());
  }

  TEST_CASE("round trip B, radicands up to 300") {
    const SweepStats s = reverse_round_trip_sweep(300, Exec::Serial);
    CHECK(s.cases > 1000);
    CHECK(s.ok());
  }
}

TEST_SUITE("shift and prepend") {
  TEST_CASE("sigma examples") {
    CHECK(sigma_shift(B({5}, {1})) == B({}, {1}));
    CHECK(sigma_shift(B({}, {1, 2})) == B({}, {2, 1}));
    CHECK(sigma_shift(B({}, {1})) == B({}, {1}));
  }

  TEST_CASE("drop_prefix and prepend invert each other") {
    std::mt19937_64 rng(40);
    for (int t = 0; t < 5000; ++t) {
      const PeriodicCFE e = B(oracle::random_word(rng, rng() % 4, 3), oracle::random_word(rng, 1 + rng() % 4, 3));
      const Word w = oracle::random_word(rng, rng() % 4, 3);
      const PeriodicCFE p = prepend(w, e);
      REQUIRE(drop_prefix(p, w.size()) == e);
      const std::size_t k = rng() % 8;
      const Word full = e.prefix(k + 20);
      REQUIRE(drop_prefix(e, k).prefix(20) == Word(full.begin() + static_cast<std::ptrdiff_t>(k), full.end()));
    }
  }

  TEST_CASE("block text") {
    CHECK(to_string(B({2, 1}, {3, 1, 4})) == "2,1,(3,1,4)");
    CHECK(to_string(B({}, {1, 2, 3})) == "(1,2,3)");
    CHECK(parse_block("2,1,(3,1,4)") == B({2, 1}, {3, 1, 4}));
    CHECK(parse_block(" ( 1 , 2 ) ") == B({}, {1, 2}));
    CHECK(parse_block("(2,2)") == B({}, {2}));
    CHECK(parse_block("1,1,(1)") == B({}, {1}));
    CHECK_THROWS_AS(parse_block("()"), Error);
    CHECK_THROWS_AS(parse_block("1,2"), ParseError);
    CHECK_THROWS_AS(parse_block("(1,2"), ParseError);
    CHECK_THROWS_AS(parse_block("(0)"), ParseError);
    CHECK_THROWS_AS(parse_block("(1)2"), ParseError);
  }
}
