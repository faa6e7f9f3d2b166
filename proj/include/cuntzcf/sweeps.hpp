#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/surd.hpp"
#include "cuntzcf/word.hpp"

namespace cuntzcf {

/// Serial is the reference path kept for testing; Parallel runs the same
/// per-case kernel under OpenMP. Both produce identical results.
enum class Exec { Serial, Parallel };

struct SweepStats {
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Descriptions of the first few failing cases.
  std::vector<std::string> samples;

  bool ok() const { return failures == 0; }
  void merge(const SweepStats& other);
};

/// Number of worker threads Parallel would use (1 without OpenMP).
int worker_threads();

/// Round trip cfe_periodic(surd_from_cfe(e)) == e over every canonical
/// PeriodicCFE with letters <= max_entry, |initial| <= max_initial and
/// 1 <= |period| <= max_period.
SweepStats round_trip_sweep(Letter max_entry, std::size_t max_initial, std::size_t max_period, Exec exec);

/// Round trip surd_from_cfe(cfe_periodic(x)) == x for x = (P + sqrt(D)) / Q
/// with D non-square, 2 <= D <= max_radicand, |P| < sqrt(D), 0 < Q < 2 sqrt(D),
/// Q | D - P^2 and x in Ω.
SweepStats reverse_round_trip_sweep(long max_radicand, Exec exec);

/// Per surd: CFE(tau(x)) = sigma(CFE(x)) on the periodic form and on the
/// first `terms` quotients, and CFE(1/(x+i)) = (i, CFE(x)) for i = 1..max_prepend.
SweepStats conjugacy_sweep(std::span<const QuadraticSurd> pool, std::size_t terms, Letter max_prepend, Exec exec);

/// omega_class_label for every surd.
std::vector<Word> class_labels(std::span<const QuadraticSurd> pool, Exec exec);

struct SurdDistribution {
  long max_radicand = 10'000;
  long max_rational = 1'000'000;  // |a|
  long max_irrational = 1'000'000;  // |b|
  long max_denominator = 1'000'000;  // c
};

/// Random quadratic irrational with the given coefficient bounds (not
/// necessarily in Ω).
QuadraticSurd random_surd(std::mt19937_64& rng, const SurdDistribution& dist);

/// fractional_part(random_surd(...)), an element of Ω.
QuadraticSurd random_omega_surd(std::mt19937_64& rng, const SurdDistribution& dist);

/// Product of `length` generators drawn from x+1, x-1 and 1/x, which
/// generate GL2(Z).
UnimodularMatrix random_unimodular(std::mt19937_64& rng, std::size_t length);

}  // namespace cuntzcf
