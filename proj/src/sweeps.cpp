#include "cuntzcf/sweeps.hpp"

#include <cmath>
#include <exception>

#include "cuntzcf/equivalence.hpp"
#include "cuntzcf/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cuntzcf {

namespace {

constexpr std::size_t kMaxSamples = 10;

template <class F>
void for_each_word(std::size_t len, Letter alphabet, F&& f) {
  Word w(len, 1);
  while (true) {
    f(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == alphabet) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

// Runs kernel(i, stats_i) for i in [0, n) and merges per-index stats in index
// order, so both execution modes report identical samples.
template <class Kernel>
SweepStats run_indexed(std::size_t n, Exec exec, Kernel&& kernel) {
  std::vector<SweepStats> partial(n);
  auto guarded = [&](std::size_t i) {
    try {
      kernel(i, partial[i]);
    } catch (const std::exception& e) {
      ++partial[i].cases;
      ++partial[i].failures;
      partial[i].samples.push_back(std::string("exception: ") + e.what());
    }
  };
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) guarded(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) guarded(static_cast<std::size_t>(i));
  }
  SweepStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

void note(SweepStats& s, bool ok, const std::string& what) {
  ++s.cases;
  if (ok) return;
  ++s.failures;
  if (s.samples.size() < kMaxSamples) s.samples.push_back(what);
}

}  // namespace

void SweepStats::merge(const SweepStats& other) {
  cases += other.cases;
  failures += other.failures;
  for (const auto& s : other.samples) {
    if (samples.size() >= kMaxSamples) break;
    samples.push_back(s);
  }
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SweepStats round_trip_sweep(Letter max_entry, std::size_t max_initial, std::size_t max_period, Exec exec) {
  std::vector<Word> periods;
  for (std::size_t len = 1; len <= max_period; ++len) {
    for_each_word(len, max_entry, [&](const Word& w) {
      if (is_primitive(w)) periods.push_back(w);
    });
  }
  return run_indexed(periods.size(), exec, [&](std::size_t idx, SweepStats& stats) {
    const Word& period = periods[idx];
    for (std::size_t len = 0; len <= max_initial; ++len) {
      for_each_word(len, max_entry, [&](const Word& head) {
        if (!head.empty() && head.back() == period.back()) return;
        const PeriodicCFE e = PeriodicCFE::make(head, period);
        const PeriodicCFE back = cfe_periodic(surd_from_cfe(e));
        if (back == e) {
          ++stats.cases;
        } else {
          note(stats, false, to_string(e) + " -> " + to_string(back));
        }
      });
    }
  });
}

SweepStats reverse_round_trip_sweep(long max_radicand, Exec exec) {
  const auto n = static_cast<std::size_t>(max_radicand >= 2 ? max_radicand - 1 : 0);
  return run_indexed(n, exec, [&](std::size_t idx, SweepStats& stats) {
    const long D = static_cast<long>(idx) + 2;
    const long root = static_cast<long>(std::sqrt(static_cast<double>(D)));
    long r = root;
    while (r * r > D) --r;
    while ((r + 1) * (r + 1) <= D) ++r;
    if (r * r == D) return;
    // |P| < sqrt(D)  <=>  |P| <= r;  Q < 2 sqrt(D)  <=>  Q <= floor(2 sqrt(D))
    long two_root = 2 * r;
    while ((two_root + 1) * (two_root + 1) <= 4 * D) ++two_root;
    for (long P = -r; P <= r; ++P) {
      for (long Q = 1; Q <= two_root; ++Q) {
        if ((D - P * P) % Q != 0) continue;
        const QuadraticSurd x = QuadraticSurd::normalize(P, 1, Q, D);
        if (!in_omega(x)) continue;
        const QuadraticSurd back = surd_from_cfe(cfe_periodic(x));
        note(stats, back == x, "(" + std::to_string(P) + "+sqrt(" + std::to_string(D) + "))/" + std::to_string(Q));
      }
    }
  });
}

SweepStats conjugacy_sweep(std::span<const QuadraticSurd> pool, std::size_t terms, Letter max_prepend, Exec exec) {
  return run_indexed(pool.size(), exec, [&](std::size_t idx, SweepStats& stats) {
    const QuadraticSurd& x = pool[idx];
    const std::string name = to_string(x);
    const QuadraticSurd tau = gauss_tau(x);
    note(stats, cfe_periodic(tau) == sigma_shift(cfe_periodic(x)), "periodic tau/sigma " + name);
    const Word longer = cfe_expand(x, terms + 1);
    note(stats, cfe_expand(tau, terms) == Word(longer.begin() + 1, longer.end()), "prefix tau/sigma " + name);
    const Word base(longer.begin(), longer.end() - 1);
    for (Letter i = 1; i <= max_prepend; ++i) {
      const QuadraticSurd image = mobius_apply(UnimodularMatrix::quotient(BigInt(static_cast<unsigned long>(i))), x);
      Word expected{i};
      expected.insert(expected.end(), base.begin(), base.end());
      note(stats, cfe_expand(image, terms + 1) == expected, "prepend " + std::to_string(i) + " " + name);
    }
  });
}

std::vector<Word> class_labels(std::span<const QuadraticSurd> pool, Exec exec) {
  std::vector<Word> out(pool.size());
  const auto count = static_cast<std::ptrdiff_t>(pool.size());
  // Errors propagate from the serial path; the parallel path records them
  // and rethrows the first one after the loop.
  std::vector<std::exception_ptr> errors(pool.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = omega_class_label(pool[static_cast<std::size_t>(i)]);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      out[static_cast<std::size_t>(i)] = omega_class_label(pool[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

QuadraticSurd random_surd(std::mt19937_64& rng, const SurdDistribution& dist) {
  std::uniform_int_distribution<long> rad(2, dist.max_radicand);
  std::uniform_int_distribution<long> rat(-dist.max_rational, dist.max_rational);
  std::uniform_int_distribution<long> irr(-dist.max_irrational, dist.max_irrational);
  std::uniform_int_distribution<long> den(1, dist.max_denominator);
  while (true) {
    const long d = rad(rng);
    long b = irr(rng);
    if (b == 0) continue;
    const long a = rat(rng);
    const long c = den(rng);
    try {
      return QuadraticSurd::normalize(a, b, c, d);
    } catch (const NotIrrational&) {
      // perfect-square radicand; draw again
    }
  }
}

QuadraticSurd random_omega_surd(std::mt19937_64& rng, const SurdDistribution& dist) {
  return fractional_part(random_surd(rng, dist));
}

UnimodularMatrix random_unimodular(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 2);
  UnimodularMatrix m = UnimodularMatrix::identity();
  for (std::size_t k = 0; k < length; ++k) {
    switch (pick(rng)) {
      case 0:
        m = m * UnimodularMatrix::translation(1);
        break;
      case 1:
        m = m * UnimodularMatrix::translation(-1);
        break;
      default:
        m = m * UnimodularMatrix::swap();
        break;
    }
  }
  return m;
}

}  // namespace cuntzcf
