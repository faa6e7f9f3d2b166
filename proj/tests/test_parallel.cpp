#include <doctest.h>
#include <omp.h>

#include <random>

#include "cuntzcf/families.hpp"
#include "cuntzcf/sweeps.hpp"

using namespace cuntzcf;

namespace {

// Oversubscribe so the parallel path really interleaves, even on one core.
struct Threads {
  Threads() { omp_set_num_threads(4); }
} const kThreads;

void check_same(const SweepStats& a, const SweepStats& b) {
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
  CHECK(a.samples == b.samples);
}

std::vector<QuadraticSurd> pool(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<QuadraticSurd> out;
  while (out.size() < n) out.push_back(random_omega_surd(rng, {60, 20, 3, 20}));
  return out;
}

}  // namespace

TEST_SUITE("serial and parallel sweeps agree") {
  TEST_CASE("thread count") { CHECK(worker_threads() == 4); }

  TEST_CASE("round trip") {
    check_same(round_trip_sweep(5, 2, 3, Exec::Serial), round_trip_sweep(5, 2, 3, Exec::Parallel));
  }

  TEST_CASE("reverse round trip") {
    check_same(reverse_round_trip_sweep(400, Exec::Serial), reverse_round_trip_sweep(400, Exec::Parallel));
  }

  TEST_CASE("conjugacy") {
    const auto xs = pool(1, 120);
    check_same(conjugacy_sweep(xs, 40, 4, Exec::Serial), conjugacy_sweep(xs, 40, 4, Exec::Parallel));
  }

  TEST_CASE("conjugacy reports identical samples when cases fail") {
    // Surds outside (0,1) make every case throw; the samples must come back in index order.
    std::vector<QuadraticSurd> bad;
    for (long k = 2; k < 30; ++k) bad.push_back(QuadraticSurd::normalize(k, 1, 1, 2));
    const SweepStats s = conjugacy_sweep(bad, 10, 2, Exec::Serial);
    const SweepStats p = conjugacy_sweep(bad, 10, 2, Exec::Parallel);
    CHECK(s.failures == bad.size());
    CHECK(s.samples.size() == 10);
    check_same(s, p);
  }

  TEST_CASE("class labels") {
    const auto xs = pool(2, 200);
    CHECK(class_labels(xs, Exec::Serial) == class_labels(xs, Exec::Parallel));
  }

  TEST_CASE("class labels propagate errors from both paths") {
    auto xs = pool(3, 20);
    xs.push_back(QuadraticSurd::normalize(3, 1, 1, 2));
    CHECK_THROWS(class_labels(xs, Exec::Serial));
    CHECK_THROWS(class_labels(xs, Exec::Parallel));
  }

  TEST_CASE("example families") {
    const ExampleReport s = verify_examples(Exec::Serial);
    const ExampleReport p = verify_examples(Exec::Parallel);
    REQUIRE(s.rows.size() == p.rows.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      CHECK(s.rows[i].tuple == p.rows[i].tuple);
      CHECK(s.rows[i].surd == p.rows[i].surd);
      CHECK(s.rows[i].got == p.rows[i].got);
      CHECK(s.rows[i].passed == p.rows[i].passed);
    }
    CHECK(s.discrepancies.size() == p.discrepancies.size());
  }
}
