#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cuntzcf/report.hpp"
#include "cuntzcf/word.hpp"

namespace cuntzcf {

/// Coefficients over the cyclic basis {s_{J0}^m v : m = 0..n-1}.
using CycleSpaceVector = std::vector<std::complex<double>>;

inline constexpr double kCycleSplitTolerance = 1e-9;

struct CycleSplit {
  Word J0;
  std::size_t n = 0;
  /// w_r = sum_m zeta^{rm} s_{J0}^m v, r = 0..n-1, zeta = exp(2 pi i / n).
  std::vector<CycleSpaceVector> eigenvectors;
  /// zeta^{-r}
  std::vector<std::complex<double>> eigenvalues;
  /// max |<w_r | w_s>| over r != s
  double orthogonality_residual = 0.0;
  /// max || s_{J0} w_r - zeta^{-r} w_r ||
  double eigen_residual = 0.0;
  /// P(J0^n) is reducible, as forced by the periodicity of J0^n.
  bool reducible = false;
  Report report;
};

/// zeta^k for zeta = exp(2 pi i / n); exact at multiples of a quarter turn.
std::complex<double> root_of_unity_power(long long k, std::size_t n);

/// Splits the n-cycle of P(J0^n) into the DFT eigenvectors of s_{J0}.
/// Throws EmptyWord, NotPrimitive, or BadMultiplicity when n < 2.
CycleSplit cycle_dft_split(const Word& J0, std::size_t n);

}  // namespace cuntzcf
