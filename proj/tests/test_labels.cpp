#include <doctest.h>

#include <algorithm>
#include <random>

#include "cuntzcf/errors.hpp"
#include "cuntzcf/labels.hpp"
#include "oracles.hpp"

using namespace cuntzcf;

namespace {

Label L(Word initial, Word period) { return PeriodicCFE::make(std::move(initial), std::move(period)); }

bool all_pass(const Report& r) {
  for (const auto& rec : r.records)
    if (rec.verdict != "pass") return false;
  return !r.records.empty();
}

}  // namespace

TEST_SUITE("act") {
  TEST_CASE("generators prepend and adjoints strip") {
    CHECK(act(WordOperator::generator(2), L({}, {1})) == L({2}, {1}));
    CHECK(act(WordOperator::generator_adjoint(2), L({2}, {1})) == L({}, {1}));
    CHECK_FALSE(act(WordOperator::generator_adjoint(2), L({}, {1})).has_value());
    CHECK_FALSE(act(WordOperator::zero(), L({}, {1})).has_value());
    CHECK(act(WordOperator::identity(), L({3}, {1, 2})) == L({3}, {1, 2}));
    // stripping reaches into the period
    CHECK(act(WordOperator::make({}, {1, 2, 1}), L({}, {1, 2})) == L({}, {2, 1}));
  }

  TEST_CASE("s1* s2 annihilates every label") {
    const LabelSpace space = LabelSpace::enumerate(2, 3);
    const WordOperator p = WordOperator::generator_adjoint(1) * WordOperator::generator(2);
    CHECK(p.is_zero());
    for (const Label& a : space) CHECK_FALSE(act(p, a).has_value());
  }

  TEST_CASE("render") { CHECK(render_label(L({2}, {1, 3}), 5) == "2,1,3,1,3,..."); }
}

TEST_SUITE("label_space") {
  TEST_CASE("enumeration holds distinct canonical labels") {
    const LabelSpace space = LabelSpace::enumerate(2, 2);
    // periods: (1),(2),(1,2),(2,1); initials of length <= 2 not ending in the period's last letter
    CHECK(space.contains(L({}, {1})));
    CHECK(space.contains(L({2, 2}, {1})));
    CHECK(space.contains(L({1}, {2, 1})));
    for (const Label& a : space) {
      CHECK(oracle::primitive_brute(a.period()));
      if (!a.initial().empty()) CHECK(a.initial().back() != a.period().back());
      CHECK(PeriodicCFE::make(a.initial(), a.period()) == a);
    }
  }

  TEST_CASE("insert extends until the cap") {
    LabelSpace space(3);
    CHECK(space.insert(L({}, {1})));
    CHECK_FALSE(space.insert(L({1}, {1})));  // same label after normalization
    CHECK(space.insert(L({}, {2})));
    CHECK(space.insert(L({}, {3})));
    CHECK_FALSE(space.insert(L({}, {3})));  // duplicates never hit the cap
    CHECK_THROWS_AS(space.insert(L({}, {4})), TruncationLimit);
    CHECK(space.size() == 3);
  }

  TEST_CASE("enumeration respects the cap") { CHECK_THROWS_AS(LabelSpace::enumerate(3, 3, 100), TruncationLimit); }
}

TEST_SUITE("verify_cuntz_relations") {
  TEST_CASE("depth 3 alphabet 3") {
    const Report r = verify_cuntz_relations(3, 3);
    CHECK(r.ok());
    CHECK(r.violations().empty());
    CHECK(all_pass(r));
    CHECK(r.records.size() == 7);
  }

  TEST_CASE("every depth <= 4 and alphabet <= 4") {
    for (std::size_t depth = 1; depth <= 4; ++depth)
      for (Letter alphabet = 2; alphabet <= 4; ++alphabet) {
        CAPTURE(depth);
        CAPTURE(alphabet);
        const Report r = verify_cuntz_relations(depth, alphabet);
        CHECK(all_pass(r));
      }
  }

  TEST_CASE("left inverse of the shift") {
    const LabelSpace space = LabelSpace::enumerate(3, 3);
    for (const Label& a : space)
      for (Letter i = 1; i <= 3; ++i) CHECK(sigma_shift(*act(WordOperator::generator(i), a)) == a);
  }
}

TEST_SUITE("orbit_decompose") {
  TEST_CASE("examples") {
    LabelSpace a;
    a.insert(L({}, {1}));
    a.insert(L({2}, {1}));
    a.insert(L({}, {2}));
    const auto orbits = orbit_decompose(a);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].rep.to_string() == "P(1)");
    CHECK(orbits[0].members.size() == 2);
    CHECK(orbits[1].rep.to_string() == "P(2)");
    CHECK(orbits[1].members.size() == 1);

    LabelSpace b;
    b.insert(L({}, {1, 2}));
    b.insert(L({}, {2, 1}));
    const auto one = orbit_decompose(b);
    REQUIRE(one.size() == 1);
    CHECK(one[0].rep.to_string() == "P(1,2)");

    LabelSpace c;
    c.insert(L({}, {1, 2, 3}));
    REQUIRE(orbit_decompose(c).size() == 1);
    CHECK(orbit_decompose(c)[0].rep.to_string() == "P(1,2,3)");
  }

  TEST_CASE("partition is independent of insertion order and closed under the generators") {
    const LabelSpace base = LabelSpace::enumerate(3, 2);
    std::vector<Label> labels(base.begin(), base.end());
    std::mt19937_64 rng(1);
    std::shuffle(labels.begin(), labels.end(), rng);
    LabelSpace shuffled;
    for (const auto& a : labels) shuffled.insert(a);
    const auto x = orbit_decompose(base);
    const auto y = orbit_decompose(shuffled);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(x[i].rep.to_string() == y[i].rep.to_string());
      CHECK(x[i].members == y[i].members);
      for (const Label& a : x[i].members) {
        CHECK(oracle::rotation_equal_brute(a.period(), x[i].rep.cycle_word()));
        for (Letter g = 1; g <= 3; ++g) {
          const Label image = *act(WordOperator::generator(g), a);
          CHECK(oracle::rotation_equal_brute(image.period(), x[i].rep.cycle_word()));
        }
      }
    }
  }
}

TEST_SUITE("gp_vector_check") {
  TEST_CASE("examples") {
    for (const Word& J : {Word{1}, Word{1, 2}, Word{1, 2, 3}, Word{2, 1, 1, 3}}) {
      CAPTURE(format_word(J));
      CHECK(all_pass(gp_vector_check(J, 6)));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(gp_vector_check({1, 2, 1, 2}, 3), NotPrimitive);
    CHECK_THROWS_AS(gp_vector_check({}, 3), EmptyWord);
  }
}
